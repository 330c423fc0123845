#include "dellac/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

#include "dellac/configuration.hpp"
#include "dellac/enumerate.hpp"
#include "dellac/errors.hpp"
#include "dellac/flag_index.hpp"
#include "dellac/poincare.hpp"
#include "dellac/polynomial.hpp"

namespace dellac {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed || c.informational; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  int failed = 0;
  for (const auto& c : checks) {
    const char* tag = c.informational ? "[INFO]" : (c.passed ? "[PASS]" : "[FAIL]");
    if (!c.passed && !c.informational) ++failed;
    out << tag << ' ' << c.name << " (" << c.range << ")";
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
    if (!c.passed) out << "  counterexample: " << c.counterexample << '\n';
  }
  out << "# checks: " << checks.size() << ", failed: " << failed << '\n';
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["range"] = c.range;
    e["passed"] = c.passed;
    e["informational"] = c.informational;
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.passed) e["counterexample"] = c.counterexample;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["all_passed"] = all_passed();
  return j.dump();
}

namespace {

struct Computed {
  Family family;
  int n;
  Polynomial statistic;
  Polynomial cells;
};

// Known polynomials, ascending coefficients.
const std::map<std::pair<Family, int>, Polynomial>& golden() {
  static const std::map<std::pair<Family, int>, Polynomial> table = {
      {{Family::TypeA, 1}, {1}},
      {{Family::TypeA, 2}, {1, 1}},
      {{Family::TypeA, 3}, {1, 2, 3, 1}},
      {{Family::TypeA, 4}, {1, 3, 7, 10, 10, 6, 1}},
      {{Family::SpOdd, 1}, {1}},
      {{Family::SpOdd, 3}, {1, 1, 1}},
      {{Family::SpOdd, 5}, {1, 2, 4, 5, 5, 3, 1}},
      {{Family::SpOdd, 7}, {1, 3, 8, 15, 25, 35, 43, 45, 40, 29, 16, 6, 1}},
      {{Family::SpEven, 2}, {1, 1}},
      {{Family::SpEven, 4}, {1, 2, 3, 3, 1}},
      {{Family::SpEven, 6}, {1, 3, 7, 12, 17, 20, 18, 13, 6, 1}},
      {{Family::SpEven, 8},
       {1, 4, 12, 27, 52, 87, 130, 175, 211, 229, 220, 186, 134, 79, 36, 10, 1}},
      {{Family::SOOdd, 1}, {1}},
      {{Family::SOOdd, 3}, {1, 2}},
      {{Family::SOOdd, 5}, {1, 3, 6, 7, 4}},
      {{Family::SOOdd, 7}, {1, 4, 11, 23, 38, 52, 56, 47, 27, 8}},
      {{Family::SOEven, 2}, {2}},
      {{Family::SOEven, 4}, {2, 4, 4}},
      {{Family::SOEven, 6}, {2, 6, 14, 22, 26, 20, 8}},
      {{Family::SOEven, 8}, {2, 8, 24, 54, 102, 164, 228, 272, 276, 230, 150, 68, 16}},
  };
  return table;
}

std::string range_text(int lo, int hi, const char* parity = nullptr) {
  std::string r = "N=" + std::to_string(lo);
  if (hi != lo) r += ".." + std::to_string(hi);
  if (parity != nullptr) r += std::string(" ") + parity;
  return r;
}

std::vector<int> sizes(Family f, const VerifyBounds& b) {
  std::vector<int> out;
  switch (f) {
    case Family::TypeA:
      for (int n = 1; n <= b.max_type_a; ++n) out.push_back(n);
      break;
    case Family::SpEven:
    case Family::SOEven:
      for (int n = 2; n <= b.max_even; n += 2) out.push_back(n);
      break;
    case Family::SpOdd:
    case Family::SOOdd:
      for (int n = 1; n <= b.max_odd; n += 2) out.push_back(n);
      break;
  }
  return out;
}

std::string label(Family f, int n) {
  return std::string(family_name(f)) + " N=" + std::to_string(n);
}

// Runs `body`, turning an escaped exception into a failure.
CheckResult guarded(std::string name, std::string range,
                    const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = std::move(name);
  r.range = std::move(range);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.counterexample = std::string("exception: ") + e.what();
  }
  return r;
}

void fail(CheckResult& r, std::string counterexample) {
  if (!r.passed) return;  // keep the first counterexample
  r.passed = false;
  r.counterexample = std::move(counterexample);
}

Family symplectic_for(int n) { return n % 2 == 0 ? Family::SpEven : Family::SpOdd; }
Family orthogonal_for(int n) { return n % 2 == 0 ? Family::SOEven : Family::SOOdd; }

std::uint64_t family_count(Family f, int n, int threads) {
  return count(f == Family::TypeA ? ConfigurationSet::All : ConfigurationSet::Symmetric, n,
               threads);
}

IndexCollection worked_example() {
  return IndexCollection::make(Family::SpEven, 8, {{3}, {3, 7}, {1, 4, 7}, {1, 4, 6, 7}});
}

}  // namespace

VerificationReport run_verify(const VerifyBounds& b) {
  if (b.max_even < 2 || b.max_even > 12)
    throw DomainError("max-even must lie in 2..12");
  if (b.max_odd < 1 || b.max_odd > 13) throw DomainError("max-odd must lie in 1..13");
  if (b.max_type_a < 1 || b.max_type_a > 9)
    throw DomainError("max-type-a must lie in 1..9");
  if (b.threads < 1) throw DomainError("thread count must be >= 1");

  const int t = b.threads;
  const int max_sym = std::max(b.max_even, b.max_odd);
  VerificationReport report;
  auto& checks = report.checks;

  checks.push_back(guarded("counts", "genocchi N=1..5, r n=1..4, l n=0..4", [&](CheckResult& r) {
    const auto g = reference_sequence("genocchi");
    const auto rs = reference_sequence("r");
    const auto ls = reference_sequence("l");
    for (int i = 0; i < 5; ++i) {
      if (auto c = count(ConfigurationSet::All, i + 1, t); c != g[i])
        fail(r, "|DC_" + std::to_string(i + 1) + "| = " + std::to_string(c));
      if (i < 4)
        if (auto c = count(ConfigurationSet::Symmetric, 2 * (i + 1), t); c != rs[i + 1])
          fail(r, "|SDC_" + std::to_string(2 * (i + 1)) + "| = " + std::to_string(c));
      if (auto c = count(ConfigurationSet::Symmetric, 2 * i + 1, t); c != ls[i])
        fail(r, "|SDC_" + std::to_string(2 * i + 1) + "| = " + std::to_string(c));
    }
  }));

  const int filter_max = std::min(7, max_sym);
  checks.push_back(guarded("symmetric-equals-filtered", range_text(1, filter_max),
                           [&](CheckResult& r) {
    for (int n = 1; n <= filter_max; ++n) {
      std::vector<DellacConfiguration> filtered;
      for (auto& d : enumerate_dellac(n, t))
        if (is_symmetric(d)) filtered.push_back(std::move(d));
      auto direct = enumerate_symmetric(n, t);
      std::sort(filtered.begin(), filtered.end());
      std::sort(direct.begin(), direct.end());
      if (filtered != direct) {
        std::vector<DellacConfiguration> diff;
        std::set_symmetric_difference(filtered.begin(), filtered.end(), direct.begin(),
                                      direct.end(), std::back_inserter(diff));
        fail(r, diff.empty() ? "N=" + std::to_string(n) : to_string(diff.front()));
      }
    }
  }));

  checks.push_back(guarded("reflection-preserves-band", range_text(1, 6), [&](CheckResult& r) {
    for (int n = 1; n <= 6; ++n)
      for (const auto& d : enumerate_dellac(n, t)) {
        const auto img = central_reflection(d);
        if (!validate_configuration(img).empty() || central_reflection(img) != d)
          fail(r, to_string(d));
      }
  }));

  checks.push_back(guarded("statistic-identity", range_text(1, max_sym), [&](CheckResult& r) {
    for (int n = 1; n <= max_sym; ++n)
      for (const auto& d : enumerate_symmetric(n, t)) {
        const auto cls = classify_inversions(d);
        const int total = inv(d);
        if (cls.total != total || cls.paired % 2 != 0 ||
            inv_tilde(d) + inv_prime(d) != total ||
            static_cast<int>(inversions(d).size()) != total)
          fail(r, to_string(d));
      }
  }));

  const int trip_max = std::min(7, max_sym);
  checks.push_back(guarded("bijection-roundtrip", range_text(1, trip_max), [&](CheckResult& r) {
    for (int n = 1; n <= trip_max; ++n) {
      for (Family f : {symplectic_for(n), orthogonal_for(n)}) {
        for (const auto& c : enumerate_collections(f, n, t))
          if (from_dellac(to_dellac(c), f) != c) fail(r, to_string(c));
        for (const auto& d : enumerate_symmetric(n, t))
          if (to_dellac(from_dellac(d, f)) != d) fail(r, to_string(d));
      }
    }
  }));

  int disk_disagreements = 0;
  std::string disk_detail;
  checks.push_back(guarded("even-symplectic-routes", range_text(2, b.max_even, "even"),
                           [&](CheckResult& r) {
    for (int n = 2; n <= b.max_even; n += 2) {
      int disagree = 0;
      std::uint64_t total = 0;
      for (const auto& c : enumerate_collections(Family::SpEven, n, t)) {
        const auto trace = dim_sp_even(c);
        const int a = trace.dimension();
        if (a != dim_sp_even_via_correction(c) || a != inv_tilde(to_dellac(c)))
          fail(r, to_string(c));
        if (!trace.agrees_with_disk_form()) ++disagree;
        ++total;
      }
      disk_disagreements += disagree;
      if (!disk_detail.empty()) disk_detail += ", ";
      disk_detail += "N=" + std::to_string(n) + ": " + std::to_string(disagree) + "/" +
                     std::to_string(total);
    }
    r.detail = "inductive, type-A-minus-correction and inv-tilde of the image";
  }));

  checks.push_back(guarded("odd-symplectic-route", range_text(1, b.max_odd, "odd"),
                           [&](CheckResult& r) {
    for (int n = 1; n <= b.max_odd; n += 2)
      for (const auto& c : enumerate_collections(Family::SpOdd, n, t))
        if (dim_sp_odd(c) != inv_tilde(to_dellac(c))) fail(r, to_string(c));
  }));

  std::vector<Computed> computed;
  checks.push_back(guarded("method-agreement", "all families within bounds", [&](CheckResult& r) {
    for (Family f : kAllFamilies)
      for (int n : sizes(f, b)) {
        Computed c{f, n, poincare_polynomial(f, n, Method::Statistic, t),
                   poincare_polynomial(f, n, Method::Cells, t)};
        if (c.statistic != c.cells)
          fail(r, label(f, n) + ": statistic " + c.statistic.to_string() + " vs cells " +
                      c.cells.to_string());
        computed.push_back(std::move(c));
      }
    r.detail = std::to_string(computed.size()) + " polynomials";
  }));

  checks.push_back(guarded("golden-polynomials", "a N<=4, others N<=8",
                           [&](CheckResult& r) {
    int matched = 0;
    for (const auto& c : computed) {
      auto it = golden().find({c.family, c.n});
      if (it == golden().end()) continue;
      ++matched;
      if (c.statistic != it->second || c.cells != it->second)
        fail(r, label(c.family, c.n) + ": got " + c.statistic.to_string() + ", expected " +
                    it->second.to_string());
    }
    r.detail = std::to_string(matched) + " compared";
  }));

  checks.push_back(guarded("degree-equals-dimension", "all computed", [&](CheckResult& r) {
    for (const auto& c : computed)
      if (c.statistic.degree() != expected_dimension(c.family, c.n))
        fail(r, label(c.family, c.n) + ": degree " + std::to_string(c.statistic.degree()));
  }));

  checks.push_back(guarded("value-at-one-equals-count", "all computed", [&](CheckResult& r) {
    for (const auto& c : computed)
      if (c.statistic.at_one() != family_count(c.family, c.n, t))
        fail(r, label(c.family, c.n) + ": P(1) = " + c.statistic.at_one().str());
  }));

  std::string beyond;
  checks.push_back(guarded("so-leading-coefficient", "N<=8", [&](CheckResult& r) {
    for (const auto& c : computed) {
      if (!is_orthogonal(c.family)) continue;
      const Coefficient expected = Coefficient(1) << (c.n / 2);
      if (c.n <= 8) {
        if (c.statistic.leading() != expected)
          fail(r, label(c.family, c.n) + ": leading " + c.statistic.leading().str());
      } else {
        beyond += (beyond.empty() ? "" : ", ") + label(c.family, c.n) + " leading " +
                  c.statistic.leading().str();
      }
    }
  }));
  if (!beyond.empty()) {
    CheckResult info;
    info.name = "so-leading-coefficient-large";
    info.range = "N>8";
    info.informational = true;
    info.detail = beyond + " (not asserted)";
    checks.push_back(std::move(info));
  }

  checks.push_back(guarded("constant-coefficient", "all computed", [&](CheckResult& r) {
    for (const auto& c : computed) {
      const int expected = c.family == Family::SOEven ? 2 : 1;
      if (c.statistic.constant() != expected)
        fail(r, label(c.family, c.n) + ": constant " + c.statistic.constant().str());
    }
    r.detail = "1 for a, sp and odd so; 2 for even so";
  }));

  checks.push_back(guarded("unimodality", "all computed", [&](CheckResult& r) {
    for (const auto& c : computed)
      if (!is_unimodal(c.statistic)) fail(r, label(c.family, c.n) + ": " + c.statistic.to_string());
  }));

  checks.push_back(guarded("worked-example-trace", "sp-even N=8", [&](CheckResult& r) {
    const auto c = worked_example();
    const auto trace = dim_sp_even(c);
    const std::vector<int> expected{1, 4, 7, 9};
    if (trace.values != expected) {
      std::string got;
      for (int v : trace.values) got += (got.empty() ? "" : ",") + std::to_string(v);
      fail(r, "trace (" + got + ")");
    }
    const auto image = to_dellac(c);
    if (inv_tilde(image) != 9) fail(r, "inv_tilde = " + std::to_string(inv_tilde(image)));
    const std::vector<Point> points{{1, 1},  {1, 3},  {2, 2},  {2, 7},  {3, 4},  {3, 9},
                                    {4, 6},  {4, 12}, {5, 5},  {5, 11}, {6, 8},  {6, 13},
                                    {7, 10}, {7, 15}, {8, 14}, {8, 16}};
    auto got = image.points();
    std::sort(got.begin(), got.end());
    if (got != points) fail(r, "image " + to_string(image));
    r.detail = "trace (1,4,7,9), inv_tilde 9";
  }));

  checks.push_back(guarded("sdc4-tables", "N=4", [&](CheckResult& r) {
    const auto h = statistic_histogram(ConfigurationSet::Symmetric, 4, Statistic::InvTilde, t);
    const std::vector<std::uint64_t> tilde(h.counts().begin(), h.counts().end());
    if (tilde != std::vector<std::uint64_t>{1, 2, 3, 3, 1}) fail(r, "inv_tilde distribution");
    std::vector<int> primes;
    for (const auto& d : enumerate_symmetric(4, t)) primes.push_back(inv_prime(d));
    std::sort(primes.begin(), primes.end());
    if (primes != std::vector<int>{0, 0, 1, 1, 1, 1, 2, 2, 2, 2}) fail(r, "inv_prime values");
  }));

  CheckResult disk;
  disk.name = "disk-form-agreement";
  disk.range = range_text(2, b.max_even, "even");
  disk.informational = true;
  disk.detail = (disk_disagreements == 0 ? "all agree" : "collections where the disk form differs: ") +
                (disk_disagreements == 0 ? std::string() : disk_detail);
  checks.push_back(std::move(disk));

  return report;
}

}  // namespace dellac
