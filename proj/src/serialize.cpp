#include "dellac/serialize.hpp"

#include <charconv>
#include <istream>
#include <limits>

#include "json.hpp"

#include "dellac/errors.hpp"

namespace dellac {

using nlohmann::json;
using nlohmann::ordered_json;

ConfigFormat parse_config_format(std::string_view name) {
  if (name == "json") return ConfigFormat::Json;
  if (name == "csv") return ConfigFormat::Csv;
  throw DomainError("unknown configuration format '" + std::string(name) + "'");
}

std::string to_json_line(const DellacConfiguration& cfg) {
  ordered_json j;
  j["n_cols"] = cfg.n_cols();
  j["rows"] = std::vector<int>(cfg.rows().begin(), cfg.rows().end());
  return j.dump();
}

std::string to_csv_line(const DellacConfiguration& cfg) {
  std::string out = std::to_string(cfg.n_cols());
  for (int c : cfg.rows()) out += "," + std::to_string(c);
  return out;
}

std::string to_line(const DellacConfiguration& cfg, ConfigFormat format) {
  return format == ConfigFormat::Json ? to_json_line(cfg) : to_csv_line(cfg);
}

namespace {

json parse_json(std::string_view line, int line_no) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_no, static_cast<int>(e.byte));
  }
}

template <class T>
T field(const json& j, const char* key, int line_no) {
  if (!j.is_object()) throw ParseError("expected a JSON object", line_no, 1);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'", line_no, 1);
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what(), line_no, 1);
  }
}

DellacConfiguration checked_configuration(int n, std::vector<int> rows, int line_no) {
  try {
    return DellacConfiguration::from_rows(n, std::move(rows));
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), line_no, 1);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

DellacConfiguration configuration_from_csv(std::string_view line, int line_no) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t end = line.find(',', pos);
    if (end == std::string_view::npos) end = line.size();
    auto token = line.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\r')) token.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("expected an integer, got '" + std::string(token) + "'", line_no,
                       static_cast<int>(pos) + 1);
    values.push_back(v);
    pos = end + 1;
  }
  const int n = values.front();
  return checked_configuration(n, std::vector<int>(values.begin() + 1, values.end()), line_no);
}

}  // namespace

DellacConfiguration configuration_from_line(std::string_view line, int line_no) {
  std::size_t first = line.find_first_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError("empty line", line_no, 1);
  if (line[first] != '{') return configuration_from_csv(line, line_no);
  const json j = parse_json(line, line_no);
  const int n = field<int>(j, "n_cols", line_no);
  auto rows = field<std::vector<int>>(j, "rows", line_no);
  return checked_configuration(n, std::move(rows), line_no);
}

std::vector<DellacConfiguration> read_configurations(std::istream& in) {
  std::vector<DellacConfiguration> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(configuration_from_line(line, line_no));
  }
  return out;
}

std::string to_json_line(const IndexCollection& c) {
  ordered_json j;
  j["family"] = family_name(c.family());
  j["n_ambient"] = c.n_ambient();
  auto sets = ordered_json::array();
  for (Subset s : c.sets()) sets.push_back(s.elements());
  j["sets"] = std::move(sets);
  return j.dump();
}

IndexCollection collection_from_json(std::string_view line, int line_no) {
  const json j = parse_json(line, line_no);
  const auto family_tag = field<std::string>(j, "family", line_no);
  const int n = field<int>(j, "n_ambient", line_no);
  const auto raw = field<std::vector<std::vector<int>>>(j, "sets", line_no);
  try {
    const Family family = parse_family(family_tag);
    std::vector<Subset> sets;
    for (const auto& elems : raw) {
      Subset s;
      for (int a : elems) {
        if (s.contains(a)) throw DomainError("repeated element " + std::to_string(a));
        s.insert(a);
      }
      sets.push_back(s);
    }
    return IndexCollection::make(family, n, std::move(sets));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

std::string to_json_line(const PolynomialRecord& rec) {
  ordered_json j;
  j["variety"] = family_name(rec.variety);
  j["n_ambient"] = rec.n_ambient;
  auto coeffs = ordered_json::array();
  for (const auto& c : rec.polynomial.coefficients()) {
    if (c <= std::numeric_limits<std::uint64_t>::max())
      coeffs.push_back(c.convert_to<std::uint64_t>());
    else
      coeffs.push_back(c.str());  // beyond 64 bits: decimal string
  }
  j["coeffs_ascending"] = std::move(coeffs);
  return j.dump();
}

PolynomialRecord polynomial_from_json(std::string_view line, int line_no) {
  const json j = parse_json(line, line_no);
  const auto tag = field<std::string>(j, "variety", line_no);
  const int n = field<int>(j, "n_ambient", line_no);
  const auto raw = field<json>(j, "coeffs_ascending", line_no);
  if (!raw.is_array()) throw ParseError("'coeffs_ascending' must be an array", line_no, 1);
  std::vector<Coefficient> coeffs;
  for (const auto& c : raw) {
    if (c.is_number_unsigned())
      coeffs.emplace_back(c.get<std::uint64_t>());
    else if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else
      throw ParseError("coefficients must be nonnegative integers", line_no, 1);
  }
  try {
    return {parse_family(tag), n, Polynomial(std::move(coeffs))};
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

std::string to_json(const DimensionTrace& trace) {
  ordered_json j;
  j["values"] = trace.values;
  j["disk_form_values"] = trace.disk_form_values;
  j["boundary_s_evaluations"] = trace.boundary_s_evaluations;
  auto steps = ordered_json::array();
  for (const auto& s : trace.steps) {
    ordered_json step;
    step["k"] = s.k;
    step["k_in_previous"] = s.k_in_previous;
    auto terms = ordered_json::array();
    for (const auto& t : s.terms) terms.push_back({{"element", t.element}, {"slots", t.slots}});
    step["initiating"] = std::move(terms);
    step["overlap_adjustment"] = s.overlap_adjustment;
    auto sub = ordered_json::array();
    for (const auto& v : s.subtracted) {
      ordered_json e;
      e["a"] = v.a;
      e["b"] = v.b;
      e["value"] = v.value;
      if (v.boundary) e["boundary"] = true;
      sub.push_back(std::move(e));
    }
    step["subtracted"] = std::move(sub);
    step["increment"] = s.increment;
    step["disk_form_increment"] = s.disk_form_increment;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  return j.dump();
}

std::string histogram_csv(const Histogram& h) {
  std::string out = "value,count\n";
  for (int v = 0; v <= h.max_value(); ++v) {
    if (h.count(v) == 0) continue;
    out += std::to_string(v) + "," + std::to_string(h.count(v)) + "\n";
  }
  return out;
}

}  // namespace dellac
