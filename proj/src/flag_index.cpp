#include "dellac/flag_index.hpp"

#include <algorithm>
#include <sstream>

#include "dellac/detail/partition.hpp"
#include "dellac/errors.hpp"

namespace dellac {

// ---------------------------------------------------------------------------
// Families

std::string_view family_name(Family f) {
  switch (f) {
    case Family::TypeA: return "a";
    case Family::SpEven: return "sp-even";
    case Family::SpOdd: return "sp-odd";
    case Family::SOEven: return "so-even";
    case Family::SOOdd: return "so-odd";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  if (name == "A") return Family::TypeA;
  throw DomainError("unknown family '" + std::string(name) +
                    "' (expected a, sp-even, sp-odd, so-even, so-odd)");
}

bool is_symplectic(Family f) noexcept { return f == Family::SpEven || f == Family::SpOdd; }
bool is_orthogonal(Family f) noexcept { return f == Family::SOEven || f == Family::SOOdd; }

bool parity_matches(Family f, int n) noexcept {
  switch (f) {
    case Family::TypeA: return n >= 1;
    case Family::SpEven:
    case Family::SOEven: return n >= 2 && n % 2 == 0;
    case Family::SpOdd:
    case Family::SOOdd: return n >= 1 && n % 2 == 1;
  }
  return false;
}

void require_family(Family f, int n) {
  if (n > Subset::kMaxElement)
    throw DomainError("N = " + std::to_string(n) + " exceeds the supported maximum " +
                      std::to_string(Subset::kMaxElement));
  if (!parity_matches(f, n))
    throw DomainError("family " + std::string(family_name(f)) + " does not accept N = " +
                      std::to_string(n));
}

int chain_length(Family f, int n) {
  require_family(f, n);
  return f == Family::TypeA ? n - 1 : n / 2;
}

// ---------------------------------------------------------------------------
// Subsets and collections

Subset::Subset(std::initializer_list<int> elements) {
  for (int a : elements) insert(a);
}

void Subset::insert(int a) {
  if (a < 1 || a > kMaxElement)
    throw DomainError("subset element " + std::to_string(a) + " outside 1.." +
                      std::to_string(kMaxElement));
  bits_ |= std::uint64_t{1} << (a - 1);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

namespace {

std::string format_set(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int a : s.elements()) {
    out += (first ? "" : ",") + std::to_string(a);
    first = false;
  }
  return out + "}";
}

// Pairs {a, N+1-a} may not both lie in I_n; for odd N the middle index is free.
bool isotropic(Family f, int n_ambient, Subset top) {
  if (f == Family::TypeA) return true;
  for (int a : top.elements()) {
    const int partner = n_ambient + 1 - a;
    if (partner != a && top.contains(partner)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> collection_violations(Family family, int n_ambient,
                                               std::span<const Subset> sets) {
  std::vector<std::string> out;
  if (!parity_matches(family, n_ambient) || n_ambient > Subset::kMaxElement) {
    out.push_back("family " + std::string(family_name(family)) + " does not accept N = " +
                  std::to_string(n_ambient));
    return out;
  }
  const int m = family == Family::TypeA ? n_ambient - 1 : n_ambient / 2;
  if (static_cast<int>(sets.size()) != m) {
    out.push_back("expected " + std::to_string(m) + " sets, got " +
                  std::to_string(sets.size()));
    return out;
  }
  const Subset ground = Subset::from_bits(n_ambient == 64 ? ~std::uint64_t{0}
                                                          : (std::uint64_t{1} << n_ambient) - 1);
  for (int k = 1; k <= m; ++k) {
    const Subset s = sets[k - 1];
    if (!s.is_subset_of(ground))
      out.push_back("I_" + std::to_string(k) + " = " + format_set(s) +
                    " has elements outside 1.." + std::to_string(n_ambient));
    if (s.size() != k)
      out.push_back("|I_" + std::to_string(k) + "| = " + std::to_string(s.size()) +
                    ", expected " + std::to_string(k));
    if (k < m) {
      Subset widened = sets[k];
      widened.insert(k + 1);
      if (!s.is_subset_of(widened))
        out.push_back("I_" + std::to_string(k) + " is not contained in I_" +
                      std::to_string(k + 1) + " + {" + std::to_string(k + 1) + "}");
    }
  }
  if (m >= 1 && !isotropic(family, n_ambient, sets[m - 1]))
    out.push_back("I_" + std::to_string(m) + " = " + format_set(sets[m - 1]) +
                  " contains a pair {a, " + std::to_string(n_ambient + 1) + "-a}");
  return out;
}

IndexCollection IndexCollection::make(Family family, int n_ambient, std::vector<Subset> sets) {
  auto violations = collection_violations(family, n_ambient, sets);
  if (!violations.empty()) {
    std::string msg = "invalid index collection:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw DomainError(msg);
  }
  return IndexCollection(family, n_ambient, std::move(sets));
}

std::string to_string(const IndexCollection& c) {
  std::ostringstream os;
  os << family_name(c.family()) << " N=" << c.n_ambient() << " (";
  for (int k = 1; k <= c.length(); ++k) os << (k > 1 ? "," : "") << format_set(c.set(k));
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Orderings and the s-function

ColumnOrdering::ColumnOrdering(int k, int n_ambient) : k_(k), n_(n_ambient) {
  if (n_ambient < 2 || k < 1 || k > n_ambient - 1)
    throw DomainError("ordering index k = " + std::to_string(k) + " outside 1.." +
                      std::to_string(n_ambient - 1));
}

int ColumnOrdering::count_below(int a, Subset excluded) const noexcept {
  // Elements below a are the first rank(a) entries of the cyclic order.
  int count = 0;
  for (int r = 0, x = k_ + 1; r < rank(a); ++r, ++x) {
    if (x > n_) x -= n_;
    if (!excluded.contains(x)) ++count;
  }
  return count;
}

bool ordering_less(int a, int b, int k, int n_ambient) {
  if (a < 1 || a > n_ambient || b < 1 || b > n_ambient)
    throw DomainError("ordering_less arguments must lie in 1.." + std::to_string(n_ambient));
  return ColumnOrdering(k, n_ambient).less(a, b);
}

Subset initiating_elements(const IndexCollection& c, int k) {
  if (k < 1 || k > c.length())
    throw DomainError("initiating_elements: k = " + std::to_string(k) + " outside 1.." +
                      std::to_string(c.length()));
  const Subset cur = c.set(k);
  Subset out = cur - c.set(k - 1);
  if (cur.contains(k)) out.insert(k);
  return out;
}

namespace {

void check_s_args(int a, int b, int k, int n) {
  if (n < 1 || k < 1 || k > n)
    throw DomainError("s: need 1 <= k <= n, got k = " + std::to_string(k) +
                      ", n = " + std::to_string(n));
  if (a < 1 || a > 2 * n || b < 1 || b > 2 * n)
    throw DomainError("s: arguments must lie in 1.." + std::to_string(2 * n));
}

// s(a,b,k) with the boundary case a+b = 2n+1 evaluated as 0: there the last
// clause reads a <_k a.
SValue s_eval(int a, int b, int k, int n) {
  const ColumnOrdering ord(k, 2 * n);
  const int threshold = 2 * n - k + 1;
  const bool boundary = a + b == 2 * n + 1;
  const bool high = !ord.less(a, threshold) && !ord.less(b, threshold);
  const int value = !boundary && high && ord.less(2 * n + 1 - b, a) ? 1 : 0;
  return {a, b, value, boundary};
}

void require(const IndexCollection& c, bool ok, const char* op) {
  if (!ok)
    throw DomainError(std::string(op) + " does not accept " + to_string(c));
}

}  // namespace

int s_statistic(int a, int b, int k, int n) {
  check_s_args(a, b, k, n);
  if (a + b == 2 * n + 1)
    throw DomainError("s(" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(k) + ") is undefined: a + b = 2n + 1");
  return s_eval(a, b, k, n).value;
}

// ---------------------------------------------------------------------------
// Dimensions

int dim_type_A(const IndexCollection& c, std::span<const int> degrees) {
  int prev = 0;
  for (int k : degrees) {
    if (k <= prev || k > c.length())
      throw DomainError("degrees must be strictly increasing within 1.." +
                        std::to_string(c.length()));
    prev = k;
  }
  int total = 0;
  for (int k : degrees) {
    const ColumnOrdering ord(k, c.n_ambient());
    const Subset cur = c.set(k);
    for (int i : initiating_elements(c, k).elements()) total += ord.count_below(i, cur);
  }
  return total;
}

int dim_type_A(const IndexCollection& c) {
  std::vector<int> degrees(c.length());
  for (int k = 1; k <= c.length(); ++k) degrees[k - 1] = k;
  return dim_type_A(c, degrees);
}

DimensionTrace dim_sp_even(const IndexCollection& c, FormCheck check) {
  require(c, c.family() == Family::SpEven, "dim_sp_even");
  const int n = c.length();
  const int big_n = c.n_ambient();

  DimensionTrace trace;
  int d = 0;
  int disk = 0;
  for (int k = 1; k <= n; ++k) {
    const ColumnOrdering ord(k, big_n);
    const Subset prev = c.set(k - 1);
    const Subset cur = c.set(k);
    DimensionStep step;
    step.k = k;
    step.k_in_previous = prev.contains(k);

    auto subtract = [&](int a, int b) {
      const SValue v = s_eval(a, b, k, n);
      if (v.boundary) ++trace.boundary_s_evaluations;
      step.subtracted.push_back(v);
      return v.value;
    };

    if (!step.k_in_previous) {
      const auto added = (cur - prev).elements();
      if (added.size() != 1)
        throw InconsistencyError("expected one new element at step " + std::to_string(k) +
                                 " of " + to_string(c));
      const int j = added.front();
      step.terms.push_back({j, ord.count_below(j, prev)});
      step.increment = step.terms.back().slots;
      for (int i : prev.elements()) step.increment -= subtract(j, i);
    } else {
      Subset kept = prev;
      kept.erase(k);
      auto added = (cur - kept).elements();
      if (added.size() != 2)
        throw InconsistencyError("expected two new elements at step " + std::to_string(k) +
                                 " of " + to_string(c));
      int j1 = added[0];
      int j2 = added[1];
      if (ord.less(j1, j2)) std::swap(j1, j2);  // j1 >_k j2
      step.terms.push_back({j2, ord.count_below(j2, kept)});
      step.terms.push_back({j1, ord.count_below(j1, kept)});
      step.overlap_adjustment = -1;
      step.increment = step.terms[0].slots + step.terms[1].slots - 1;
      step.increment -= subtract(j1, j2);
      for (int i : kept.elements()) {
        step.increment -= subtract(j1, i);
        step.increment -= subtract(j2, i);
      }
    }

    for (int l : initiating_elements(c, k).elements()) {
      step.disk_form_increment += ord.count_below(l, cur);
      for (int x : cur.elements())
        if (ord.less(x, l)) step.disk_form_increment -= s_eval(l, x, k, n).value;
    }

    if (step.increment < 0)
      throw InconsistencyError("negative increment at step " + std::to_string(k) + " of " +
                               to_string(c));
    d += step.increment;
    disk += step.disk_form_increment;
    trace.values.push_back(d);
    trace.disk_form_values.push_back(disk);
    trace.steps.push_back(std::move(step));
  }

  if (check == FormCheck::Strict && !trace.agrees_with_disk_form())
    throw InconsistencyError("step-wise and disk-form dimensions differ for " + to_string(c));
  return trace;
}

int dim_sp_even_via_correction(const IndexCollection& c) {
  require(c, c.family() == Family::SpEven, "dim_sp_even_via_correction");
  const int n = c.length();
  const int big_n = c.n_ambient();
  const ColumnOrdering ord(n, big_n);
  const auto top = c.set(n).elements();
  int correction = 0;
  for (int a1 : top)
    for (int a2 : top)
      if (ord.less(a1, a2) && ord.less(big_n + 1 - a1, a2)) ++correction;
  return dim_type_A(c) - correction;
}

int dim_sp_odd(const IndexCollection& c) {
  require(c, c.family() == Family::SpOdd, "dim_sp_odd");
  const int n = c.length();
  if (n == 0) return 0;
  const int big_n = c.n_ambient();
  const ColumnOrdering ord(n, big_n);
  const auto top = c.set(n).elements();
  int correction = 0;
  for (int a : top) {
    for (int b : top) {
      if (a == n + 1 || b == n + 1) continue;  // e_{n+1} spans the kernel
      if (ord.less(b, a) && ord.less(big_n + 1 - b, a)) ++correction;
    }
  }
  return dim_type_A(c) - correction;
}

// ---------------------------------------------------------------------------
// Bijection with symmetric Dellac configurations

DellacConfiguration to_dellac(const IndexCollection& c) {
  require(c, c.family() != Family::TypeA, "to_dellac");
  const int big_n = c.n_ambient();
  const int n = c.length();
  std::vector<int> rows(2 * big_n + 1, 0);  // 1-based

  auto place = [&](int row, int col) {
    if (rows[row] != 0 && rows[row] != col)
      throw InconsistencyError("to_dellac: row " + std::to_string(row) +
                               " filled twice for " + to_string(c));
    rows[row] = col;
  };

  for (int k = 1; k <= n; ++k)
    for (int l : initiating_elements(c, k).elements()) place(l > k ? l : big_n + l, k);
  for (int i = 1; i <= n; ++i)
    if (rows[i] == 0) rows[i] = i;

  const std::vector<int> left = rows;
  for (int r = 1; r <= 2 * big_n; ++r)
    if (left[r] != 0) place(2 * big_n + 1 - r, big_n + 1 - left[r]);

  if (big_n % 2 == 1) {
    std::vector<int> empty;
    for (int r = 1; r <= 2 * big_n; ++r)
      if (rows[r] == 0) empty.push_back(r);
    if (empty.size() != 2 || empty[0] + empty[1] != 2 * big_n + 1)
      throw InconsistencyError("to_dellac: middle column rows not a symmetric pair for " +
                               to_string(c));
    for (int r : empty) rows[r] = n + 1;
  }

  std::vector<int> out(rows.begin() + 1, rows.end());
  if (!validate_configuration(big_n, out).empty())
    throw InconsistencyError("to_dellac produced an invalid configuration for " + to_string(c));
  auto cfg = DellacConfiguration::unchecked(big_n, std::move(out));
  if (!is_symmetric(cfg))
    throw InconsistencyError("to_dellac produced a non-symmetric configuration for " +
                             to_string(c));
  return cfg;
}

IndexCollection from_dellac(const DellacConfiguration& cfg, Family family) {
  const int big_n = cfg.n_cols();
  if (family == Family::TypeA)
    throw DomainError("from_dellac: type A collections are not read from configurations");
  require_family(family, big_n);
  if (!is_symmetric(cfg))
    throw DomainError("from_dellac: configuration is not symmetric: " + to_string(cfg));

  const int n = big_n / 2;
  std::vector<Subset> sets;
  sets.reserve(n);
  for (int k = 1; k <= n; ++k) {
    Subset s;
    for (int i = k + 1; i <= big_n + k; ++i)
      if (cfg.column_of(i) <= k) s.insert(i <= big_n ? i : i - big_n);
    sets.push_back(s);
  }
  if (!collection_violations(family, big_n, sets).empty())
    throw DomainError("from_dellac: configuration is not in the image: " + to_string(cfg));
  auto c = IndexCollection::unchecked(family, big_n, std::move(sets));
  if (to_dellac(c) != cfg)
    throw DomainError("from_dellac: roundtrip failed for " + to_string(cfg));
  return c;
}

int dim_orthogonal(const IndexCollection& c) {
  require(c, is_orthogonal(c.family()), "dim_orthogonal");
  return inv_prime(to_dellac(c));
}

int cell_dimension(const IndexCollection& c) {
  switch (c.family()) {
    case Family::TypeA: return dim_type_A(c);
    case Family::SpEven: return dim_sp_even(c).dimension();
    case Family::SpOdd: return dim_sp_odd(c);
    case Family::SOEven:
    case Family::SOOdd: return dim_orthogonal(c);
  }
  throw DomainError("unknown family");
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Depth-first over k; at each level I_k = (I_{k-1} \ {k}) plus one or two
// new elements chosen in increasing order.
class CollectionSearch {
 public:
  CollectionSearch(Family family, int n_ambient)
      : family_(family), n_(n_ambient), m_(chain_length(family, n_ambient)), sets_(m_) {}

  int length() const noexcept { return m_; }

  template <class Visit>
  void run(Visit&& visit) {
    extend(1, visit);
  }

  /// Completions with I_1 = {first}.
  template <class Visit>
  void run_from(int first, Visit&& visit) {
    sets_[0] = Subset{first};
    extend(2, visit);
  }

 private:
  template <class Visit>
  void extend(int k, Visit& visit) {
    if (k > m_) {
      if (m_ == 0 || isotropic(family_, n_, sets_[m_ - 1])) visit(std::span<const Subset>(sets_));
      return;
    }
    Subset kept = k >= 2 ? sets_[k - 2] : Subset{};
    kept.erase(k);
    const int need = k - kept.size();
    for (int a = 1; a <= n_; ++a) {
      if (kept.contains(a)) continue;
      Subset with_a = kept;
      with_a.insert(a);
      if (need == 1) {
        sets_[k - 1] = with_a;
        extend(k + 1, visit);
        continue;
      }
      for (int b = a + 1; b <= n_; ++b) {
        if (kept.contains(b)) continue;
        Subset with_ab = with_a;
        with_ab.insert(b);
        sets_[k - 1] = with_ab;
        extend(k + 1, visit);
      }
    }
  }

  Family family_;
  int n_;
  int m_;
  std::vector<Subset> sets_;
};

template <class Chunk, class Visit>
std::vector<Chunk> collections_partitioned(Family family, int n_ambient, int threads,
                                           Visit&& per_collection) {
  std::vector<int> firsts(n_ambient);
  for (int a = 1; a <= n_ambient; ++a) firsts[a - 1] = a;
  return detail::run_partitioned<Chunk>(firsts, threads, [&](int first) {
    Chunk local{};
    CollectionSearch search(family, n_ambient);
    search.run_from(first, [&](std::span<const Subset> sets) {
      per_collection(local, sets);
    });
    return local;
  });
}

IndexCollection materialise(Family family, int n_ambient, std::span<const Subset> sets) {
  return IndexCollection::unchecked(family, n_ambient,
                                    std::vector<Subset>(sets.begin(), sets.end()));
}

}  // namespace

namespace serial {

std::vector<IndexCollection> enumerate_collections(Family family, int n_ambient) {
  require_family(family, n_ambient);
  std::vector<IndexCollection> out;
  CollectionSearch search(family, n_ambient);
  search.run([&](std::span<const Subset> sets) {
    out.push_back(materialise(family, n_ambient, sets));
  });
  return out;
}

Histogram cell_histogram(Family family, int n_ambient) {
  Histogram h;
  for (const auto& c : serial::enumerate_collections(family, n_ambient)) h.add(cell_dimension(c));
  return h;
}

}  // namespace serial

std::vector<IndexCollection> enumerate_collections(Family family, int n_ambient, int threads) {
  require_family(family, n_ambient);
  if (chain_length(family, n_ambient) == 0) return serial::enumerate_collections(family, n_ambient);
  auto chunks = collections_partitioned<std::vector<IndexCollection>>(
      family, n_ambient, threads, [&](std::vector<IndexCollection>& local, auto sets) {
        local.push_back(materialise(family, n_ambient, sets));
      });
  std::vector<IndexCollection> out;
  for (auto& chunk : chunks)
    for (auto& c : chunk) out.push_back(std::move(c));
  return out;
}

Histogram cell_histogram(Family family, int n_ambient, int threads) {
  require_family(family, n_ambient);
  if (chain_length(family, n_ambient) == 0) return serial::cell_histogram(family, n_ambient);
  auto chunks = collections_partitioned<Histogram>(
      family, n_ambient, threads, [&](Histogram& local, auto sets) {
        local.add(cell_dimension(materialise(family, n_ambient, sets)));
      });
  Histogram out;
  for (const auto& h : chunks) out.merge(h);
  return out;
}

}  // namespace dellac
