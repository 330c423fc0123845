#include "dellac/configuration.hpp"

#include <sstream>

#include "dellac/errors.hpp"

namespace dellac {

std::vector<Point> DellacConfiguration::points() const {
  std::vector<Point> pts;
  pts.reserve(rows_.size());
  for (int i = 1; i <= n_rows(); ++i) pts.push_back({column_of(i), i});
  return pts;
}

DellacConfiguration DellacConfiguration::from_rows(int n_cols,
                                                   std::vector<int> rows) {
  auto violations = validate_configuration(n_cols, rows);
  if (!violations.empty()) {
    std::string msg = "invalid Dellac configuration:";
    for (const auto& v : violations) msg += " " + v.message + ";";
    throw DomainError(msg);
  }
  return DellacConfiguration(n_cols, std::move(rows));
}

std::vector<Violation> validate_configuration(int n_cols,
                                              std::span<const int> rows) {
  if (n_cols < 1)
    throw StructuralError("n_cols must be >= 1, got " + std::to_string(n_cols));
  if (rows.size() != static_cast<std::size_t>(2 * n_cols))
    throw StructuralError("expected " + std::to_string(2 * n_cols) +
                          " rows, got " + std::to_string(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] < 1 || rows[r] > n_cols)
      throw StructuralError("row " + std::to_string(r + 1) + " has column " +
                            std::to_string(rows[r]) + " outside 1.." +
                            std::to_string(n_cols));
  }

  std::vector<Violation> out;
  std::vector<int> count(n_cols + 1, 0);
  for (int i = 1; i <= 2 * n_cols; ++i) {
    const int c = rows[i - 1];
    ++count[c];
    if (!(c <= i && i <= n_cols + c)) {
      out.push_back({Violation::Kind::Band, i, c,
                     "point (" + std::to_string(c) + "," + std::to_string(i) +
                         ") violates " + std::to_string(c) + " <= row <= " +
                         std::to_string(n_cols + c)});
    }
  }
  for (int c = 1; c <= n_cols; ++c) {
    if (count[c] != 2) {
      out.push_back({Violation::Kind::ColumnCount, 0, c,
                     "column " + std::to_string(c) + " has " +
                         std::to_string(count[c]) + " points"});
    }
  }
  return out;
}

std::vector<Violation> validate_configuration(const DellacConfiguration& cfg) {
  return validate_configuration(cfg.n_cols(), cfg.rows());
}

Point reflect(Point p, int n_cols) noexcept {
  return {n_cols + 1 - p.col, 2 * n_cols + 1 - p.row};
}

DellacConfiguration central_reflection(const DellacConfiguration& cfg) {
  const int n = cfg.n_cols();
  std::vector<int> rows(2 * n);
  for (int i = 1; i <= 2 * n; ++i)
    rows[2 * n - i] = n + 1 - cfg.column_of(i);
  return DellacConfiguration::unchecked(n, std::move(rows));
}

bool is_symmetric(const DellacConfiguration& cfg) noexcept {
  const int n = cfg.n_cols();
  for (int i = 1; i <= n; ++i) {
    if (cfg.column_of(2 * n + 1 - i) != n + 1 - cfg.column_of(i)) return false;
  }
  return true;
}

std::vector<Inversion> inversions(const DellacConfiguration& cfg) {
  std::vector<Inversion> out;
  const int rows = cfg.n_rows();
  for (int hi = 2; hi <= rows; ++hi) {
    const int c_hi = cfg.column_of(hi);
    for (int lo = 1; lo < hi; ++lo) {
      const int c_lo = cfg.column_of(lo);
      if (c_hi < c_lo) out.push_back({{c_hi, hi}, {c_lo, lo}});
    }
  }
  return out;
}

int inv(const DellacConfiguration& cfg) noexcept {
  return classify_inversions(cfg).total;
}

InversionClassification classify_inversions(
    const DellacConfiguration& cfg) noexcept {
  return classify_inversions(cfg.n_cols(), cfg.rows());
}

InversionClassification classify_inversions(int n,
                                            std::span<const int> cols) noexcept {
  InversionClassification out;
  const int rows = static_cast<int>(cols.size());
  for (int hi = 2; hi <= rows; ++hi) {
    const int c_hi = cols[hi - 1];
    for (int lo = 1; lo < hi; ++lo) {
      const int c_lo = cols[lo - 1];
      if (c_hi >= c_lo) continue;
      ++out.total;
      // R({p,p'}) = {p,p'} with p != R(p) forces p' = R(p).
      if (lo == 2 * n + 1 - hi && c_lo == n + 1 - c_hi)
        ++out.self_symmetric;
      else
        ++out.paired;
    }
  }
  return out;
}

namespace {

InversionClassification symmetric_classification(const DellacConfiguration& cfg,
                                                  const char* op) {
  if (!is_symmetric(cfg))
    throw DomainError(std::string(op) +
                      " requires a centrally symmetric configuration, got " +
                      to_string(cfg));
  auto cls = classify_inversions(cfg);
  if (cls.paired % 2 != 0)
    throw InconsistencyError("odd number of non-self-symmetric inversions in " +
                             to_string(cfg));
  return cls;
}

}  // namespace

int inv_tilde(const DellacConfiguration& cfg) {
  auto cls = symmetric_classification(cfg, "inv_tilde");
  return cls.self_symmetric + cls.paired / 2;
}

int inv_prime(const DellacConfiguration& cfg) {
  return symmetric_classification(cfg, "inv_prime").paired / 2;
}

std::string to_string(const DellacConfiguration& cfg) {
  std::ostringstream os;
  os << "N=" << cfg.n_cols() << " rows(";
  for (int i = 1; i <= cfg.n_rows(); ++i)
    os << (i > 1 ? "," : "") << cfg.column_of(i);
  os << ")";
  return os.str();
}

}  // namespace dellac
