#include "doctest.h"

#include <random>

#include "dellac/enumerate.hpp"
#include "dellac/flag_index.hpp"
#include "dellac/poincare.hpp"
#include "oracles.hpp"

using namespace dellac;

TEST_CASE("symmetric configurations are fixed by the reflection") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& d : enumerate_symmetric(n)) {
      CHECK(central_reflection(d) == d);
      CHECK(validate_configuration(d).empty());
    }
}

TEST_CASE("inversions split into orbits") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& d : enumerate_symmetric(n)) {
      const auto cls = classify_inversions(d);
      CHECK(cls.paired % 2 == 0);
      CHECK(cls.total == cls.self_symmetric + cls.paired);
      CHECK(inv(d) == inv_tilde(d) + inv_prime(d));
      if (n <= 5) {
        const std::vector<int> rows(d.rows().begin(), d.rows().end());
        const auto o = oracle::inversion_orbits(n, rows);
        CHECK(cls.self_symmetric == o.fixed);
        CHECK(cls.paired == 2 * o.two_element);
      }
    }
}

TEST_CASE("the bijection is a bijection") {
  for (int n = 1; n <= 7; ++n) {
    const Family f = n % 2 == 0 ? Family::SpEven : Family::SpOdd;
    const auto colls = enumerate_collections(f, n);
    CHECK(colls.size() == count(ConfigurationSet::Symmetric, n));
    std::vector<DellacConfiguration> images;
    for (const auto& c : colls) {
      images.push_back(to_dellac(c));
      CHECK(from_dellac(images.back(), f) == c);
    }
    std::sort(images.begin(), images.end());
    CHECK(images == enumerate_symmetric(n));
  }
}

TEST_CASE("cell dimensions stay within the expected dimension") {
  for (Family f : kAllFamilies)
    for (int n = 1; n <= 7; ++n) {
      if (!parity_matches(f, n)) continue;
      const auto h = cell_histogram(f, n);
      CHECK(h.max_value() == expected_dimension(f, n));
    }
}

TEST_CASE("dimension routes agree on small sizes") {
  for (int n = 2; n <= 6; n += 2)
    for (const auto& c : enumerate_collections(Family::SpEven, n)) {
      const int d = dim_sp_even(c).dimension();
      CHECK(d == dim_sp_even_via_correction(c));
      CHECK(d == inv_tilde(to_dellac(c)));
    }
  for (int n = 1; n <= 7; n += 2)
    for (const auto& c : enumerate_collections(Family::SpOdd, n))
      CHECK(dim_sp_odd(c) == inv_tilde(to_dellac(c)));
}

TEST_CASE("histogram merge is order independent") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> value(0, 20);
  std::vector<Histogram> parts(6);
  for (auto& h : parts)
    for (int i = 0; i < 50; ++i) h.add(value(rng));
  Histogram forward;
  for (const auto& h : parts) forward.merge(h);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(parts.begin(), parts.end(), rng);
    Histogram shuffled;
    for (const auto& h : parts) shuffled.merge(h);
    CHECK(shuffled == forward);
  }
  CHECK(forward.total() == 300);
}
