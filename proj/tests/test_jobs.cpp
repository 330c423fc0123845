#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dellac/cache.hpp"
#include "dellac/jobs.hpp"

using namespace dellac;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(JobSpec spec) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_job(spec, out, err);
  return {code, out.str(), err.str()};
}

JobSpec enumerate_job(const char* family, int n, int threads = 1) {
  JobSpec s;
  s.command = Command::Enumerate;
  s.family = family;
  s.n = n;
  s.threads = threads;
  return s;
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("enumerate line counts") {
  ::unsetenv(kCacheDirEnv);
  auto r = run(enumerate_job("symmetric", 4));
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == 10);
  CHECK(r.err == "# count: 10\n");
  CHECK(lines(run(enumerate_job("dellac", 3)).out) == 7);
  CHECK(lines(run(enumerate_job("dellac", 1)).out) == 1);
}

TEST_CASE("enumerate output is identical for every thread count") {
  for (const char* family : {"dellac", "symmetric"})
    for (auto fmt : {OutputFormat::Json, OutputFormat::Csv}) {
      auto base = enumerate_job(family, 6, 1);
      base.format = fmt;
      const auto one = run(base).out;
      for (int t : {2, 8}) {
        auto s = base;
        s.threads = t;
        CHECK(run(s).out == one);
      }
    }
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run(enumerate_job("other", 3)).code == kExitInvalidInput);
  CHECK(run(enumerate_job("dellac", 0)).code == kExitInvalidInput);
  CHECK(run(enumerate_job("dellac", 3, 0)).code == kExitInvalidInput);
  auto text = enumerate_job("dellac", 3);
  text.format = OutputFormat::Text;
  CHECK(run(text).code == kExitInvalidInput);
  auto unwritable = enumerate_job("dellac", 3);
  unwritable.out_path = "/nonexistent-dir/out.jsonl";
  const auto r = run(unwritable);
  CHECK(r.code == kExitInvalidInput);
  CHECK(r.err.find("error:") == 0);

  JobSpec p;
  p.command = Command::Poincare;
  p.family = "sp-even";
  p.n = 5;
  CHECK(run(p).code == kExitInvalidInput);
  p.family = "gl";
  p.n = 4;
  CHECK(run(p).code == kExitInvalidInput);

  JobSpec q;
  q.command = Command::Sequence;
  q.sequence_name = "fibonacci";
  CHECK(run(q).code == kExitInvalidInput);
}

TEST_CASE("stats over an enumerated file") {
  const auto path = fs::temp_directory_path() / "dellac_jobs_sdc4.jsonl";
  auto e = enumerate_job("symmetric", 4);
  e.out_path = path;
  REQUIRE(run(e).code == kExitOk);

  JobSpec s;
  s.command = Command::Stats;
  s.in_path = path;
  s.statistic = "inv-tilde";
  auto r = run(s);
  CHECK(r.code == kExitOk);
  CHECK(r.out == "value,count\n0,1\n1,2\n2,3\n3,3\n4,1\n");

  s.statistic = "inv-prime";
  CHECK(run(s).out == "value,count\n0,2\n1,4\n2,4\n");

  s.format = OutputFormat::Json;
  const auto j = nlohmann::json::parse(run(s).out);
  CHECK(j["total"] == 10);
  CHECK(j["counts"]["1"] == 4);

  // inv-tilde needs symmetric input.
  const auto dc = fs::temp_directory_path() / "dellac_jobs_dc3.jsonl";
  auto e3 = enumerate_job("dellac", 3);
  e3.out_path = dc;
  REQUIRE(run(e3).code == kExitOk);
  s.in_path = dc;
  s.statistic = "inv-tilde";
  CHECK(run(s).code == kExitInvalidInput);
  s.statistic = "inv";
  s.format.reset();
  CHECK(run(s).out == "value,count\n0,1\n1,2\n2,3\n3,1\n");

  s.in_path = "/nonexistent/file";
  CHECK(run(s).code == kExitInvalidInput);
}

TEST_CASE("poincare report") {
  JobSpec p;
  p.command = Command::Poincare;
  p.family = "sp-odd";
  p.n = 5;
  auto r = run(p);
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "sp-odd N=5\n"
        "statistic: q^6 + 3q^5 + 5q^4 + 5q^3 + 4q^2 + 2q + 1\n"
        "cells: q^6 + 3q^5 + 5q^4 + 5q^3 + 4q^2 + 2q + 1\n"
        "agree: yes\n");

  p.method = "statistic";
  p.family = "a";
  p.n = 2;
  CHECK(run(p).out == "q + 1\n");

  p.method = "both";
  p.family = "so-even";
  p.n = 4;
  p.format = OutputFormat::Json;
  const auto j = nlohmann::json::parse(run(p).out);
  CHECK(j["variety"] == "so-even");
  CHECK(j["coeffs_ascending"] == nlohmann::json::array({2, 4, 4}));
  CHECK(j["agree"] == true);
}

TEST_CASE("cached results replay identically") {
  const auto dir = fs::temp_directory_path() / "dellac_jobs_cache";
  fs::remove_all(dir);
  auto e = enumerate_job("symmetric", 7, 2);
  e.cache_dir = dir;
  const auto fresh = run(e);
  CHECK(fs::exists(dir));
  const auto replay = run(e);
  CHECK(replay.out == fresh.out);
  CHECK(replay.err == fresh.err);

  JobSpec p;
  p.command = Command::Poincare;
  p.family = "sp-even";
  p.n = 6;
  p.cache_dir = dir;
  const auto pf = run(p);
  CHECK(run(p).out == pf.out);

  // The environment variable is the fallback.
  ::setenv(kCacheDirEnv, dir.c_str(), 1);
  auto env = enumerate_job("symmetric", 7, 1);
  CHECK(run(env).out == fresh.out);
  ::unsetenv(kCacheDirEnv);
}

TEST_CASE("sequence and verify") {
  JobSpec q;
  q.command = Command::Sequence;
  q.sequence_name = "r";
  auto r = run(q);
  CHECK(r.code == kExitOk);
  CHECK(r.out == "1,2,10,98,1594\n");
  q.sequence_name = "genocchi";
  CHECK(run(q).out == "1,2,7,38,295\n");

  JobSpec v;
  v.command = Command::Verify;
  v.max_even = 6;
  v.max_odd = 7;
  v.max_type_a = 5;
  v.format = OutputFormat::Json;
  const auto out = run(v);
  CHECK(out.code == kExitOk);
  const auto j = nlohmann::json::parse(out.out);
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() >= 10);

  v.max_even = 40;
  CHECK(run(v).code == kExitInvalidInput);
}
