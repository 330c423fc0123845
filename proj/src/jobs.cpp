#include "dellac/jobs.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "dellac/cache.hpp"
#include "dellac/enumerate.hpp"
#include "dellac/errors.hpp"
#include "dellac/poincare.hpp"
#include "dellac/serialize.hpp"
#include "dellac/verify.hpp"

namespace dellac {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "text";
}

std::optional<ResultCache> open_cache(const JobSpec& spec) {
  if (spec.cache_dir) return ResultCache(*spec.cache_dir);
  if (auto dir = ResultCache::default_dir()) return ResultCache(*dir);
  return std::nullopt;
}

void emit(const JobSpec& spec, std::ostream& out, const std::string& content) {
  if (!spec.out_path) {
    out << content;
    out.flush();
    return;
  }
  std::ofstream file(*spec.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file " + spec.out_path->string());
  file << content;
  file.flush();
  if (!file) throw IoError("write failed for " + spec.out_path->string());
}

// Looks the result up in the cache, computing and storing it on a miss.
template <class Compute>
std::string cached(const JobSpec& spec, const CacheKey& key, Compute&& compute) {
  auto cache = open_cache(spec);
  if (cache)
    if (auto hit = cache->load(key)) return *hit;
  std::string content = compute();
  if (cache) cache->store(key, content);
  return content;
}

void require_n(int n) {
  if (n < 1) throw DomainError("N must be >= 1");
}

int run_enumerate(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  require_n(spec.n);
  ConfigurationSet set;
  if (spec.family == "dellac")
    set = ConfigurationSet::All;
  else if (spec.family == "symmetric")
    set = ConfigurationSet::Symmetric;
  else
    throw DomainError("unknown configuration family '" + spec.family +
                      "' (expected dellac or symmetric)");
  const OutputFormat fmt = spec.format.value_or(OutputFormat::Json);
  if (fmt == OutputFormat::Text) throw DomainError("enumerate writes json or csv");
  const ConfigFormat cfmt = fmt == OutputFormat::Json ? ConfigFormat::Json : ConfigFormat::Csv;

  const CacheKey key{"enumerate", spec.family, spec.n, std::string(format_name(fmt))};
  const std::string content = cached(spec, key, [&] {
    std::string text;
    for (const auto& d : enumerate(set, spec.n, spec.threads)) {
      text += to_line(d, cfmt);
      text += '\n';
    }
    return text;
  });
  emit(spec, out, content);
  err << "# count: " << std::count(content.begin(), content.end(), '\n') << '\n';
  return kExitOk;
}

int run_stats(const JobSpec& spec, std::ostream& out) {
  if (!spec.in_path) throw DomainError("stats needs --in");
  const Statistic stat = parse_statistic(spec.statistic);
  std::vector<DellacConfiguration> configs;
  if (*spec.in_path == "-") {
    configs = read_configurations(std::cin);
  } else {
    std::ifstream in(*spec.in_path);
    if (!in) throw IoError("cannot open input file " + spec.in_path->string());
    configs = read_configurations(in);
  }
  Histogram h;
  for (const auto& d : configs) h.add(evaluate(stat, d));

  const OutputFormat fmt = spec.format.value_or(OutputFormat::Csv);
  if (fmt != OutputFormat::Json) {
    emit(spec, out, histogram_csv(h));
    return kExitOk;
  }
  nlohmann::ordered_json j;
  j["statistic"] = statistic_name(stat);
  j["total"] = h.total();
  auto counts = nlohmann::ordered_json::object();
  for (int v = 0; v <= h.max_value(); ++v)
    if (h.count(v) != 0) counts[std::to_string(v)] = h.count(v);
  j["counts"] = std::move(counts);
  emit(spec, out, j.dump() + "\n");
  return kExitOk;
}

nlohmann::ordered_json coefficient_array(const Polynomial& p) {
  return nlohmann::ordered_json::parse(to_json_line(PolynomialRecord{Family::TypeA, 1, p}))
      .at("coeffs_ascending");
}

int run_poincare(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  require_n(spec.n);
  const Family family = parse_family(spec.family);
  require_family(family, spec.n);
  const bool both = spec.method == "both";
  if (!both) parse_method(spec.method);
  const OutputFormat fmt = spec.format.value_or(OutputFormat::Text);
  if (fmt == OutputFormat::Csv) throw DomainError("poincare writes text or json");

  bool agree = true;
  const CacheKey key{"poincare", std::string(family_name(family)), spec.n,
                     std::string(format_name(fmt)) + "-" + spec.method};
  // Disagreeing results are not cached, so a hit always agrees.
  auto cache = open_cache(spec);
  if (cache)
    if (auto hit = cache->load(key)) {
      emit(spec, out, *hit);
      return kExitOk;
    }

  std::string content;
  if (!both) {
    const auto p = poincare_polynomial(family, spec.n, parse_method(spec.method), spec.threads);
    content = fmt == OutputFormat::Json ? to_json_line({family, spec.n, p}) + "\n"
                                        : p.to_string() + "\n";
  } else {
    const auto ps = poincare_polynomial(family, spec.n, Method::Statistic, spec.threads);
    const auto pc = poincare_polynomial(family, spec.n, Method::Cells, spec.threads);
    agree = ps == pc;
    if (fmt == OutputFormat::Json) {
      auto j = nlohmann::ordered_json::parse(to_json_line({family, spec.n, ps}));
      j["methods"] = {{"statistic", coefficient_array(ps)}, {"cells", coefficient_array(pc)}};
      j["agree"] = agree;
      content = j.dump() + "\n";
    } else {
      content = std::string(family_name(family)) + " N=" + std::to_string(spec.n) + "\n" +
                "statistic: " + ps.to_string() + "\n" + "cells: " + pc.to_string() + "\n" +
                "agree: " + (agree ? "yes" : "no") + "\n";
    }
  }
  emit(spec, out, content);
  if (!agree) {
    err << "error: statistic and cell polynomials differ\n";
    return kExitVerificationFailed;
  }
  if (cache) cache->store(key, content);
  return kExitOk;
}

int run_verify_job(const JobSpec& spec, std::ostream& out) {
  const OutputFormat fmt = spec.format.value_or(OutputFormat::Text);
  if (fmt == OutputFormat::Csv) throw DomainError("verify writes text or json");
  const auto report =
      run_verify({spec.max_even, spec.max_odd, spec.max_type_a, spec.threads});
  emit(spec, out, fmt == OutputFormat::Json ? report.to_json() + "\n" : report.to_text());
  return report.exit_code();
}

int run_sequence(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  const auto reference = reference_sequence(spec.sequence_name);
  std::vector<std::uint64_t> computed;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const int k = static_cast<int>(i);
    if (spec.sequence_name == "r")
      computed.push_back(k == 0 ? 1 : count(ConfigurationSet::Symmetric, 2 * k, spec.threads));
    else if (spec.sequence_name == "l")
      computed.push_back(count(ConfigurationSet::Symmetric, 2 * k + 1, spec.threads));
    else
      computed.push_back(count(ConfigurationSet::All, k + 1, spec.threads));
  }
  const bool match = computed == reference;
  const auto join = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  if (spec.format.value_or(OutputFormat::Text) == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["name"] = spec.sequence_name;
    j["reference"] = reference;
    j["computed"] = computed;
    j["match"] = match;
    emit(spec, out, j.dump() + "\n");
  } else {
    emit(spec, out, join(reference) + "\n");
  }
  if (!match) {
    err << "error: enumeration gives " << join(computed) << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw DomainError("unknown format '" + std::string(name) + "'");
}

int run_job(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    if (spec.threads < 1) throw DomainError("thread count must be >= 1");
    switch (spec.command) {
      case Command::Enumerate: return run_enumerate(spec, out, err);
      case Command::Stats: return run_stats(spec, out);
      case Command::Poincare: return run_poincare(spec, out, err);
      case Command::Verify: return run_verify_job(spec, out);
      case Command::Sequence: return run_sequence(spec, out, err);
    }
    throw DomainError("unknown command");
  } catch (const InconsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace dellac
