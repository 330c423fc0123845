#pragma once

// Dellac configurations: N columns, 2N rows, one point per row, two points
// per column, every point (j,i) inside the band j <= i <= N + j.
//
// Coordinates are 1-based. Rows are counted bottom to top. A configuration
// is stored as its row -> column map.

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace dellac {

struct Point {
  int col = 0;
  int row = 0;

  auto operator<=>(const Point&) const = default;
};

class DellacConfiguration {
 public:
  /// Validates the input. Throws StructuralError for a bad shape and
  /// DomainError listing every invariant violation otherwise.
  static DellacConfiguration from_rows(int n_cols, std::vector<int> rows);

  /// Trusts the caller. Used by the enumerators, which build valid
  /// configurations by construction.
  static DellacConfiguration unchecked(int n_cols, std::vector<int> rows) {
    return DellacConfiguration(n_cols, std::move(rows));
  }

  int n_cols() const noexcept { return n_cols_; }
  int n_rows() const noexcept { return 2 * n_cols_; }
  std::span<const int> rows() const noexcept { return rows_; }

  /// Column of the point in `row` (1-based).
  int column_of(int row) const { return rows_[row - 1]; }

  std::vector<Point> points() const;

  // Lexicographic on the row vector, read from row 1 upward.
  auto operator<=>(const DellacConfiguration&) const = default;

 private:
  DellacConfiguration(int n_cols, std::vector<int> rows)
      : n_cols_(n_cols), rows_(std::move(rows)) {}

  int n_cols_ = 0;
  std::vector<int> rows_;
};

struct Violation {
  enum class Kind { ColumnCount, Band };

  Kind kind;
  int row;  // 0 when the violation concerns a whole column
  int col;
  std::string message;
};

/// Empty result means the configuration is valid. A malformed shape (length
/// other than 2N, entries outside 1..N, N < 1) throws StructuralError.
std::vector<Violation> validate_configuration(int n_cols,
                                              std::span<const int> rows);
std::vector<Violation> validate_configuration(const DellacConfiguration& cfg);

/// (j,i) -> (N+1-j, 2N+1-i).
Point reflect(Point p, int n_cols) noexcept;
DellacConfiguration central_reflection(const DellacConfiguration& cfg);
bool is_symmetric(const DellacConfiguration& cfg) noexcept;

/// A pair of points with first.col < second.col and first.row > second.row.
struct Inversion {
  Point first;
  Point second;

  auto operator<=>(const Inversion&) const = default;
};

std::vector<Inversion> inversions(const DellacConfiguration& cfg);
int inv(const DellacConfiguration& cfg) noexcept;

/// An inversion is self-symmetric when R maps its point pair onto itself,
/// i.e. second == R(first). Every other inversion has a distinct partner.
struct InversionClassification {
  int total = 0;
  int self_symmetric = 0;
  int paired = 0;
};

InversionClassification classify_inversions(const DellacConfiguration& cfg) noexcept;

/// Same scan on a raw row vector; used by the histogram kernels.
InversionClassification classify_inversions(int n_cols, std::span<const int> rows) noexcept;

/// Number of R-orbits on the inversion set. Requires a symmetric input.
int inv_tilde(const DellacConfiguration& cfg);

/// Half the number of inversions not fixed by R. Requires a symmetric input.
int inv_prime(const DellacConfiguration& cfg);

std::string to_string(const DellacConfiguration& cfg);

}  // namespace dellac
