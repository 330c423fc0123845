#pragma once

// Poincare polynomials of the five degenerate flag families, by two routes:
//   statistic: sum of q^stat over configurations (inv over DC_N for type A,
//              inv_tilde over SDC_N for Sp, inv_prime over SDC_N for SO);
//   cells:     sum of q^dim over index collections with the family's own
//              dimension algorithm.

#include <cstdint>
#include <string_view>
#include <vector>

#include "dellac/enumerate.hpp"
#include "dellac/flag_index.hpp"
#include "dellac/polynomial.hpp"

namespace dellac {

enum class Method { Statistic, Cells };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

/// A family at a concrete size. Construction checks parity.
class VarietyFamily {
 public:
  VarietyFamily(Family tag, int n_ambient);

  Family tag() const noexcept { return tag_; }
  int n_ambient() const noexcept { return n_ambient_; }
  /// floor(N/2).
  int rank() const noexcept { return n_ambient_ / 2; }
  int expected_dimension() const noexcept;

  /// Configurations whose statistic gives the polynomial.
  ConfigurationSet configurations() const noexcept;
  Statistic statistic() const noexcept;

 private:
  Family tag_;
  int n_ambient_;
};

Polynomial poincare_polynomial(Family family, int n_ambient, Method method, int threads = 1);

/// P(1), computed from the statistic route.
Coefficient euler_characteristic(Family family, int n_ambient, int threads = 1);

/// TypeA: N(N-1)/2; SpEven: n^2; SpOdd: n(n+1); SO: ceil((N-1)/2) floor((N-1)/2).
int expected_dimension(Family family, int n_ambient);

/// Known prefixes: "genocchi" (|DC_N|, N >= 1), "r" (|SDC_2n|, n >= 0,
/// the empty configuration counting once), "l" (|SDC_2n+1|, n >= 0). "genocchi_normalized" is
/// accepted as an alias.
std::vector<std::uint64_t> reference_sequence(std::string_view name);

}  // namespace dellac
