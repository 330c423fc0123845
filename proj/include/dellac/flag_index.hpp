#pragma once

// Index collections (I_1, ..., I_m) labelling coordinate flags, the cyclic
// column orderings, and the cell-dimension algorithms for the five families.

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dellac/configuration.hpp"
#include "dellac/histogram.hpp"

namespace dellac {

enum class Family { TypeA, SpEven, SpOdd, SOEven, SOOdd };

inline constexpr Family kAllFamilies[] = {Family::TypeA, Family::SpEven, Family::SpOdd,
                                          Family::SOEven, Family::SOOdd};

/// "a", "sp-even", "sp-odd", "so-even", "so-odd".
std::string_view family_name(Family f);
Family parse_family(std::string_view name);

bool is_symplectic(Family f) noexcept;
bool is_orthogonal(Family f) noexcept;

/// True when N has the parity the family requires (TypeA accepts any N >= 1;
/// SpEven/SOEven need N >= 2).
bool parity_matches(Family f, int n_ambient) noexcept;

/// Throws DomainError unless parity_matches().
void require_family(Family f, int n_ambient);

/// m: N-1 for TypeA, floor(N/2) otherwise.
int chain_length(Family f, int n_ambient);

/// Subset of {1..63} as a bit mask (bit a-1 set <=> a in the set).
class Subset {
 public:
  static constexpr int kMaxElement = 63;

  constexpr Subset() = default;
  Subset(std::initializer_list<int> elements);
  static constexpr Subset from_bits(std::uint64_t bits) { return Subset(bits); }

  constexpr bool contains(int a) const noexcept {
    return a >= 1 && a <= kMaxElement && ((bits_ >> (a - 1)) & 1U);
  }
  void insert(int a);
  void erase(int a) noexcept {
    if (a >= 1 && a <= kMaxElement) bits_ &= ~(std::uint64_t{1} << (a - 1));
  }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint64_t bits() const noexcept { return bits_; }

  /// Largest element, 0 when empty.
  constexpr int max_element() const noexcept { return 64 - std::countl_zero(bits_); }

  constexpr bool is_subset_of(Subset other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  /// Ascending.
  std::vector<int> elements() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  constexpr auto operator<=>(const Subset&) const = default;

 private:
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

class IndexCollection {
 public:
  /// Validates every invariant; throws DomainError listing the violations.
  static IndexCollection make(Family family, int n_ambient, std::vector<Subset> sets);
  static IndexCollection unchecked(Family family, int n_ambient, std::vector<Subset> sets) {
    return IndexCollection(family, n_ambient, std::move(sets));
  }

  Family family() const noexcept { return family_; }
  int n_ambient() const noexcept { return n_ambient_; }
  /// m.
  int length() const noexcept { return static_cast<int>(sets_.size()); }

  /// I_k for 1 <= k <= m; I_0 is the empty set.
  Subset set(int k) const { return k == 0 ? Subset{} : sets_.at(k - 1); }
  std::span<const Subset> sets() const noexcept { return sets_; }

  auto operator<=>(const IndexCollection&) const = default;

 private:
  IndexCollection(Family family, int n_ambient, std::vector<Subset> sets)
      : family_(family), n_ambient_(n_ambient), sets_(std::move(sets)) {}

  Family family_ = Family::TypeA;
  int n_ambient_ = 0;
  std::vector<Subset> sets_;
};

/// Empty when `sets` is a valid collection for (family, N).
std::vector<std::string> collection_violations(Family family, int n_ambient,
                                               std::span<const Subset> sets);

std::string to_string(const IndexCollection& c);

/// Total order on {1..N}: k+1 <_k k+2 <_k ... <_k N <_k 1 <_k ... <_k k.
class ColumnOrdering {
 public:
  ColumnOrdering(int k, int n_ambient);

  /// Position of a in the order, 0 for k+1 up to N-1 for k.
  int rank(int a) const noexcept { return (a - k_ - 1 + 2 * n_) % n_; }
  bool less(int a, int b) const noexcept { return rank(a) < rank(b); }

  /// |{x : x <_k a, x not in excluded}|.
  int count_below(int a, Subset excluded) const noexcept;

 private:
  int k_;
  int n_;
};

/// a <_k b. Arguments must satisfy 1 <= a,b <= N and 1 <= k <= N-1.
bool ordering_less(int a, int b, int k, int n_ambient);

/// {i in I_k : i == k or i not in I_{k-1}}.
Subset initiating_elements(const IndexCollection& c, int k);

/// 0/1 correction for the even symplectic algorithm. Throws DomainError when
/// a + b == 2n + 1, where it is undefined.
int s_statistic(int a, int b, int k, int n);

/// Sum over k in `degrees` of the empty slots below each initiating element
/// of I_k. `degrees` must be a strictly increasing subset of 1..m.
int dim_type_A(const IndexCollection& c, std::span<const int> degrees);

/// Full flag: degrees 1..m.
int dim_type_A(const IndexCollection& c);

struct SValue {
  int a;
  int b;
  int value;
  bool boundary;  // a + b == 2n+1: outside the definition, evaluated as 0
};

struct InitiatingTerm {
  int element;
  int slots;
};

/// One step of the even symplectic induction.
struct DimensionStep {
  int k = 0;
  bool k_in_previous = false;   // selects the two-element case
  std::vector<InitiatingTerm> terms;
  int overlap_adjustment = 0;   // -1 in the two-element case
  std::vector<SValue> subtracted;
  int increment = 0;
  int disk_form_increment = 0;  // same step via black disks strictly below
};

struct DimensionTrace {
  std::vector<int> values;            // d_1 <= ... <= d_n
  std::vector<int> disk_form_values;  // the disk-form partial sums
  std::vector<DimensionStep> steps;
  int boundary_s_evaluations = 0;

  int dimension() const { return values.empty() ? 0 : values.back(); }
  bool agrees_with_disk_form() const { return values == disk_form_values; }
};

enum class FormCheck {
  Report,  // record the disk-form trace alongside
  Strict,  // throw InconsistencyError if the two forms differ
};

/// Even symplectic cell dimension by the step-wise case split. The disk-form
/// sum is computed alongside; see FormCheck.
DimensionTrace dim_sp_even(const IndexCollection& c, FormCheck check = FormCheck::Report);

/// dim_type_A over degrees 1..n minus
/// |{(a1,a2) in I_n x I_n : a1 <_n a2 and 2n+1-a1 <_n a2}|.
int dim_sp_even_via_correction(const IndexCollection& c);

/// Odd symplectic: empty slots below initiating elements, minus the ordered
/// pairs (a,b) in I_n, both != n+1, with b <_n a and 2n+2-b <_n a.
int dim_sp_odd(const IndexCollection& c);

/// Symmetric Dellac configuration S(I). Symplectic and orthogonal families.
DellacConfiguration to_dellac(const IndexCollection& c);

/// Inverse of to_dellac. `family` must match the parity of N and be
/// symplectic or orthogonal.
IndexCollection from_dellac(const DellacConfiguration& cfg, Family family);

/// inv_prime(to_dellac(c)). Orthogonal families.
int dim_orthogonal(const IndexCollection& c);

/// Dimension by the family's own algorithm: dim_type_A, dim_sp_even,
/// dim_sp_odd or dim_orthogonal.
int cell_dimension(const IndexCollection& c);

namespace serial {

std::vector<IndexCollection> enumerate_collections(Family family, int n_ambient);
Histogram cell_histogram(Family family, int n_ambient);

}  // namespace serial

/// Every valid collection once, in a fixed order; jobs are split by I_1.
std::vector<IndexCollection> enumerate_collections(Family family, int n_ambient,
                                                   int threads = 1);

/// Distribution of cell_dimension over all collections.
Histogram cell_histogram(Family family, int n_ambient, int threads = 1);

}  // namespace dellac
