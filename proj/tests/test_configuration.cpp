#include "doctest.h"

#include <algorithm>

#include "dellac/configuration.hpp"
#include "dellac/errors.hpp"
#include "oracles.hpp"

using namespace dellac;

namespace {

DellacConfiguration cfg(int n, std::vector<int> rows) {
  return DellacConfiguration::from_rows(n, std::move(rows));
}

}  // namespace

TEST_CASE("validation accepts a valid configuration") {
  CHECK(validate_configuration(3, std::vector<int>{1, 2, 3, 1, 2, 3}).empty());
  CHECK(validate_configuration(1, std::vector<int>{1, 1}).empty());
}

TEST_CASE("validation reports column counts") {
  const auto v = validate_configuration(3, std::vector<int>{1, 1, 1, 2, 3, 3});
  REQUIRE_FALSE(v.empty());
  const bool found = std::any_of(v.begin(), v.end(), [](const Violation& x) {
    return x.kind == Violation::Kind::ColumnCount && x.message == "column 1 has 3 points";
  });
  CHECK(found);
}

TEST_CASE("validation reports band violations") {
  // Column 2 cannot hold row 1.
  const auto v = validate_configuration(2, std::vector<int>{2, 1, 1, 2});
  const bool band = std::any_of(v.begin(), v.end(), [](const Violation& x) {
    return x.kind == Violation::Kind::Band && x.row == 1 && x.col == 2;
  });
  CHECK(band);
}

TEST_CASE("malformed shapes are structural errors") {
  CHECK_THROWS_AS(validate_configuration(2, std::vector<int>{1, 2, 1}), StructuralError);
  CHECK_THROWS_AS(validate_configuration(2, std::vector<int>{1, 2, 1, 3}), StructuralError);
  CHECK_THROWS_AS(validate_configuration(0, std::vector<int>{}), StructuralError);
  CHECK_THROWS_AS(cfg(3, {1, 1, 1, 2, 3, 3}), DomainError);
}

TEST_CASE("inversions of a small configuration") {
  const auto d = cfg(3, {1, 2, 3, 1, 2, 3});
  const auto v = inversions(d);
  std::vector<Inversion> expected{{{1, 4}, {2, 2}}, {{1, 4}, {3, 3}}, {{2, 5}, {3, 3}}};
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == expected);
  CHECK(inv(d) == 3);
}

TEST_CASE("symmetric statistics") {
  const auto d = cfg(3, {1, 2, 3, 1, 2, 3});
  CHECK(is_symmetric(d));
  CHECK(inv_tilde(d) == 2);
  CHECK(inv_prime(d) == 1);
  CHECK(is_symmetric(cfg(2, {1, 2, 1, 2})));
  CHECK_FALSE(is_symmetric(cfg(3, {1, 1, 2, 3, 2, 3})));
  CHECK_THROWS_AS(inv_tilde(cfg(3, {1, 1, 2, 3, 2, 3})), DomainError);
  CHECK_THROWS_AS(inv_prime(cfg(3, {1, 1, 2, 3, 2, 3})), DomainError);
}

TEST_CASE("central reflection") {
  CHECK(reflect({1, 1}, 3) == Point{3, 6});
  CHECK(reflect({2, 4}, 3) == Point{2, 3});
  const auto d = cfg(3, {1, 1, 2, 3, 2, 3});
  const auto r = central_reflection(d);
  CHECK(validate_configuration(r).empty());
  CHECK(central_reflection(r) == d);
}

TEST_CASE("statistics agree with the brute-force oracle") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& rows : oracle::all_dellac(n)) {
      const auto d = cfg(n, rows);
      CHECK(inv(d) == oracle::inv(n, rows));
      CHECK(is_symmetric(d) == oracle::is_symmetric(n, rows));
      if (!is_symmetric(d)) continue;
      CHECK(inv_tilde(d) == oracle::inv_tilde(n, rows));
      CHECK(inv_prime(d) == oracle::inv_prime(n, rows));
    }
}

TEST_CASE("to_string") {
  CHECK(to_string(cfg(2, {1, 2, 1, 2})) == "N=2 rows(1,2,1,2)");
}
