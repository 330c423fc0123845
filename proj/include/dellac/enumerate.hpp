#pragma once

// Enumeration kernels over DC_N and SDC_N.
//
// Every kernel exists twice: a serial reference in namespace `serial`, which
// walks the whole search tree in one pass, and an OpenMP version that splits
// the tree into fixed-prefix jobs and merges the results in prefix order.
// Output of the parallel version is identical for every thread count.

#include <cstdint>
#include <string_view>
#include <vector>

#include "dellac/configuration.hpp"
#include "dellac/histogram.hpp"

namespace dellac {

enum class ConfigurationSet { All, Symmetric };

enum class Statistic { Inv, InvTilde, InvPrime };

std::string_view statistic_name(Statistic s);
Statistic parse_statistic(std::string_view name);

/// inv / inv_tilde / inv_prime. The last two require a symmetric input.
int evaluate(Statistic s, const DellacConfiguration& cfg);

namespace serial {

std::vector<DellacConfiguration> enumerate(ConfigurationSet set, int n);
Histogram statistic_histogram(ConfigurationSet set, int n, Statistic s);
std::uint64_t count(ConfigurationSet set, int n);

}  // namespace serial

std::vector<DellacConfiguration> enumerate(ConfigurationSet set, int n, int threads = 1);

inline std::vector<DellacConfiguration> enumerate_dellac(int n, int threads = 1) {
  return enumerate(ConfigurationSet::All, n, threads);
}

inline std::vector<DellacConfiguration> enumerate_symmetric(int n, int threads = 1) {
  return enumerate(ConfigurationSet::Symmetric, n, threads);
}

/// Distribution of a statistic without materialising the configurations.
Histogram statistic_histogram(ConfigurationSet set, int n, Statistic s, int threads = 1);

std::uint64_t count(ConfigurationSet set, int n, int threads = 1);

}  // namespace dellac
