#pragma once

// Backtracking cores for Dellac configurations. Both searches visit
// completions in lexicographic order of the row vector and can resume from
// a fixed prefix, which is what the parallel kernels partition on.

#include <algorithm>
#include <span>
#include <vector>

namespace dellac::detail {

/// All of DC_N. Rows are filled bottom to top; row i may use a column c with
/// i - N <= c <= i that holds fewer than two points.
class DellacSearch {
 public:
  explicit DellacSearch(int n) : n_(n), rows_(2 * n, 0), count_(n + 2, 0) {}

  int depth_limit() const noexcept { return 2 * n_; }

  /// Calls visit(prefix) for every valid prefix of length `depth`.
  template <class Visit>
  void prefixes(int depth, Visit&& visit) {
    reset();
    extend(1, depth, visit);
  }

  /// Calls visit(rows) for every completion of `prefix`. The prefix must be
  /// one produced by prefixes().
  template <class Visit>
  void complete(std::span<const int> prefix, Visit&& visit) {
    reset();
    for (std::size_t r = 0; r < prefix.size(); ++r) {
      rows_[r] = prefix[r];
      ++count_[prefix[r]];
    }
    extend(static_cast<int>(prefix.size()) + 1, 2 * n_, visit);
  }

 private:
  void reset() {
    std::fill(rows_.begin(), rows_.end(), 0);
    std::fill(count_.begin(), count_.end(), 0);
  }

  template <class Visit>
  void extend(int row, int stop, Visit& visit) {
    if (row > stop) {
      visit(std::span<const int>(rows_.data(), stop));
      return;
    }
    // Column row-N-1 leaves the band at this row; it must already be full.
    const int closing = row - n_ - 1;
    if (closing >= 1 && count_[closing] != 2) return;

    const int lo = std::max(1, row - n_);
    const int hi = std::min(n_, row);
    for (int c = lo; c <= hi; ++c) {
      if (count_[c] == 2) continue;
      ++count_[c];
      rows_[row - 1] = c;
      extend(row + 1, stop, visit);
      --count_[c];
    }
    rows_[row - 1] = 0;
  }

  int n_;
  std::vector<int> rows_;
  std::vector<int> count_;
};

/// SDC_N through the bottom half: rows 1..N choose c_i <= i, the top half is
/// forced by c_{2N+1-i} = N+1-c_i, and column j then holds b_j + b_{N+1-j}
/// points where b counts bottom-half points. Pruned on that sum exceeding 2;
/// at full depth every sum is exactly 2 because the sums add up to 2N.
class SymmetricSearch {
 public:
  explicit SymmetricSearch(int n) : n_(n), rows_(2 * n, 0), bottom_(n + 2, 0) {}

  int depth_limit() const noexcept { return n_; }

  template <class Visit>
  void prefixes(int depth, Visit&& visit) {
    reset();
    extend(1, depth, /*full=*/false, visit);
  }

  template <class Visit>
  void complete(std::span<const int> prefix, Visit&& visit) {
    reset();
    for (std::size_t r = 0; r < prefix.size(); ++r) {
      rows_[r] = prefix[r];
      ++bottom_[prefix[r]];
    }
    extend(static_cast<int>(prefix.size()) + 1, n_, /*full=*/true, visit);
  }

 private:
  void reset() {
    std::fill(rows_.begin(), rows_.end(), 0);
    std::fill(bottom_.begin(), bottom_.end(), 0);
  }

  int column_load(int c) const { return bottom_[c] + bottom_[n_ + 1 - c]; }

  template <class Visit>
  void extend(int row, int stop, bool full, Visit& visit) {
    if (row > stop) {
      if (!full) {
        visit(std::span<const int>(rows_.data(), stop));
        return;
      }
      for (int c = 1; c <= n_; ++c)
        if (column_load(c) != 2) return;
      for (int i = 1; i <= n_; ++i) rows_[2 * n_ - i] = n_ + 1 - rows_[i - 1];
      visit(std::span<const int>(rows_.data(), 2 * n_));
      return;
    }
    const int hi = std::min(n_, row);
    for (int c = 1; c <= hi; ++c) {
      ++bottom_[c];
      if (column_load(c) <= 2) {
        rows_[row - 1] = c;
        extend(row + 1, stop, full, visit);
      }
      --bottom_[c];
    }
    rows_[row - 1] = 0;
  }

  int n_;
  std::vector<int> rows_;
  std::vector<int> bottom_;
};

}  // namespace dellac::detail
