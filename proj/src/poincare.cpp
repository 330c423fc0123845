#include "dellac/poincare.hpp"

#include <string>

#include "dellac/errors.hpp"

namespace dellac {

std::string_view method_name(Method m) {
  return m == Method::Statistic ? "statistic" : "cells";
}

Method parse_method(std::string_view name) {
  if (name == "statistic") return Method::Statistic;
  if (name == "cells") return Method::Cells;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

VarietyFamily::VarietyFamily(Family tag, int n_ambient) : tag_(tag), n_ambient_(n_ambient) {
  require_family(tag, n_ambient);
}

int VarietyFamily::expected_dimension() const noexcept {
  const int big_n = n_ambient_;
  const int n = rank();
  switch (tag_) {
    case Family::TypeA: return big_n * (big_n - 1) / 2;
    case Family::SpEven: return n * n;
    case Family::SpOdd: return n * (n + 1);
    case Family::SOEven:
    case Family::SOOdd: return (big_n / 2) * ((big_n - 1) / 2);  // ceil((N-1)/2) = floor(N/2)
  }
  return 0;
}

ConfigurationSet VarietyFamily::configurations() const noexcept {
  return tag_ == Family::TypeA ? ConfigurationSet::All : ConfigurationSet::Symmetric;
}

Statistic VarietyFamily::statistic() const noexcept {
  if (tag_ == Family::TypeA) return Statistic::Inv;
  return is_symplectic(tag_) ? Statistic::InvTilde : Statistic::InvPrime;
}

Polynomial poincare_polynomial(Family family, int n_ambient, Method method, int threads) {
  const VarietyFamily v(family, n_ambient);
  if (method == Method::Statistic)
    return Polynomial::from_histogram(
        statistic_histogram(v.configurations(), n_ambient, v.statistic(), threads));
  return Polynomial::from_histogram(cell_histogram(family, n_ambient, threads));
}

Coefficient euler_characteristic(Family family, int n_ambient, int threads) {
  return poincare_polynomial(family, n_ambient, Method::Statistic, threads).at_one();
}

int expected_dimension(Family family, int n_ambient) {
  return VarietyFamily(family, n_ambient).expected_dimension();
}

std::vector<std::uint64_t> reference_sequence(std::string_view name) {
  if (name == "genocchi" || name == "genocchi_normalized") return {1, 2, 7, 38, 295};
  if (name == "r") return {1, 2, 10, 98, 1594};
  if (name == "l") return {1, 3, 21, 267, 5349};
  throw DomainError("unknown sequence '" + std::string(name) + "' (expected genocchi, r, l)");
}

}  // namespace dellac
