#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dellac/histogram.hpp"

namespace dellac {

using Coefficient = boost::multiprecision::cpp_int;

/// Polynomial in q with nonnegative integer coefficients, stored ascending.
/// The highest stored coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coefficient> ascending);
  Polynomial(std::initializer_list<unsigned long long> ascending);

  static Polynomial from_histogram(const Histogram& h);

  /// Inverse of to_string(): "q^6 + 3q^5 + 2q + 1", "q+1", "2", "0".
  static Polynomial parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// 0 outside the stored range.
  Coefficient coefficient(int d) const;
  std::span<const Coefficient> coefficients() const noexcept { return coeffs_; }

  Coefficient leading() const { return coefficient(degree()); }
  Coefficient constant() const { return coefficient(0); }
  Coefficient at_one() const;

  /// Descending powers, "q^k" exponents, unit coefficients suppressed,
  /// terms joined by " + ".
  std::string to_string() const;

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();

  std::vector<Coefficient> coeffs_;
};

/// Coefficients weakly rise, then weakly fall.
bool is_unimodal(const Polynomial& p);

}  // namespace dellac
