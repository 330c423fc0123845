#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace dellac {

/// value -> count map over small nonnegative integers. Merging is
/// associative and commutative, so partial histograms from workers combine
/// to the same result in any order.
class Histogram {
 public:
  void add(int value, std::uint64_t times = 1) {
    if (value < 0) throw std::invalid_argument("histogram value must be >= 0");
    if (static_cast<std::size_t>(value) >= counts_.size()) counts_.resize(value + 1, 0);
    counts_[value] += times;
  }

  void merge(const Histogram& other) {
    if (other.counts_.size() > counts_.size()) counts_.resize(other.counts_.size(), 0);
    for (std::size_t v = 0; v < other.counts_.size(); ++v) counts_[v] += other.counts_[v];
  }

  std::uint64_t count(int value) const {
    return value >= 0 && static_cast<std::size_t>(value) < counts_.size() ? counts_[value] : 0;
  }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts_) t += c;
    return t;
  }

  /// -1 when empty.
  int max_value() const { return static_cast<int>(counts_.size()) - 1; }

  std::span<const std::uint64_t> counts() const noexcept { return counts_; }

  bool operator==(const Histogram&) const = default;

 private:
  std::vector<std::uint64_t> counts_;
};

}  // namespace dellac
