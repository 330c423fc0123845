#pragma once

// Line-oriented wire forms.
//
//   configuration  {"n_cols":N,"rows":[c_1,...,c_2N]}
//                  or CSV: N,c_1,...,c_2N
//   collection     {"family":"sp-even","n_ambient":N,"sets":[[...],...]}
//   polynomial     {"variety":"sp-even","n_ambient":N,"coeffs_ascending":[...]}
//   histogram      CSV with header "value,count"
//
// Readers take the 1-based line number so errors point into the file.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dellac/configuration.hpp"
#include "dellac/flag_index.hpp"
#include "dellac/histogram.hpp"
#include "dellac/polynomial.hpp"

namespace dellac {

enum class ConfigFormat { Json, Csv };

ConfigFormat parse_config_format(std::string_view name);

std::string to_json_line(const DellacConfiguration& cfg);
std::string to_csv_line(const DellacConfiguration& cfg);
std::string to_line(const DellacConfiguration& cfg, ConfigFormat format);

/// Accepts either form (a line starting with '{' is JSON). Validates the
/// configuration invariants.
DellacConfiguration configuration_from_line(std::string_view line, int line_no = 1);

/// Reads every non-blank line of a stream.
std::vector<DellacConfiguration> read_configurations(std::istream& in);

std::string to_json_line(const IndexCollection& c);
IndexCollection collection_from_json(std::string_view line, int line_no = 1);

struct PolynomialRecord {
  Family variety;
  int n_ambient;
  Polynomial polynomial;
};

std::string to_json_line(const PolynomialRecord& rec);
PolynomialRecord polynomial_from_json(std::string_view line, int line_no = 1);

/// Step-by-step breakdown of the even symplectic induction.
std::string to_json(const DimensionTrace& trace);

std::string histogram_csv(const Histogram& h);

}  // namespace dellac
