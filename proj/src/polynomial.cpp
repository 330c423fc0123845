#include "dellac/polynomial.hpp"

#include <cctype>

#include "dellac/errors.hpp"

namespace dellac {

Polynomial::Polynomial(std::vector<Coefficient> ascending) : coeffs_(std::move(ascending)) {
  for (const auto& c : coeffs_)
    if (c < 0) throw DomainError("polynomial coefficients must be nonnegative");
  trim();
}

Polynomial::Polynomial(std::initializer_list<unsigned long long> ascending) {
  coeffs_.reserve(ascending.size());
  for (auto c : ascending) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::from_histogram(const Histogram& h) {
  std::vector<Coefficient> c;
  c.reserve(h.counts().size());
  for (auto v : h.counts()) c.emplace_back(v);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Coefficient Polynomial::coefficient(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[d];
}

Coefficient Polynomial::at_one() const {
  Coefficient sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Coefficient& c = coeffs_[d];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || d == 0) out += c.str();
    if (d >= 1) out += "q";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::vector<Coefficient> coeffs;
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) -> Polynomial {
    throw ParseError("polynomial: " + why, 1, static_cast<int>(pos) + 1);
  };
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto digits = [&] {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };

  bool expect_term = true;
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    if (!expect_term) {
      if (text[pos] != '+') return fail("expected '+'");
      ++pos;
      expect_term = true;
      continue;
    }
    Coefficient c = 1;
    const auto num = digits();
    if (!num.empty()) c = Coefficient(std::string(num));
    int exponent = 0;
    if (pos < text.size() && text[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const bool braced = pos < text.size() && text[pos] == '{';
        if (braced) ++pos;
        const auto e = digits();
        if (e.empty()) return fail("missing exponent");
        exponent = std::stoi(std::string(e));
        if (braced) {
          if (pos >= text.size() || text[pos] != '}') return fail("missing '}'");
          ++pos;
        }
      }
    } else if (num.empty()) {
      return fail("expected a term");
    }
    if (static_cast<std::size_t>(exponent) >= coeffs.size()) coeffs.resize(exponent + 1, 0);
    coeffs[exponent] += c;
    expect_term = false;
  }
  if (expect_term && !coeffs.empty()) return fail("dangling '+'");
  if (coeffs.empty()) return fail("empty polynomial");
  return Polynomial(std::move(coeffs));
}

bool is_unimodal(const Polynomial& p) {
  const auto c = p.coefficients();
  std::size_t i = 1;
  while (i < c.size() && c[i] >= c[i - 1]) ++i;
  while (i < c.size() && c[i] <= c[i - 1]) ++i;
  return i >= c.size();
}

}  // namespace dellac
