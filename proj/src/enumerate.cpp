#include "dellac/enumerate.hpp"

#include <string>

#include "dellac/detail/partition.hpp"
#include "dellac/detail/search.hpp"
#include "dellac/errors.hpp"

namespace dellac {

std::string_view statistic_name(Statistic s) {
  switch (s) {
    case Statistic::Inv: return "inv";
    case Statistic::InvTilde: return "inv-tilde";
    case Statistic::InvPrime: return "inv-prime";
  }
  return "?";
}

Statistic parse_statistic(std::string_view name) {
  if (name == "inv") return Statistic::Inv;
  if (name == "inv-tilde") return Statistic::InvTilde;
  if (name == "inv-prime") return Statistic::InvPrime;
  throw DomainError("unknown statistic '" + std::string(name) + "'");
}

int evaluate(Statistic s, const DellacConfiguration& cfg) {
  switch (s) {
    case Statistic::Inv: return inv(cfg);
    case Statistic::InvTilde: return inv_tilde(cfg);
    case Statistic::InvPrime: return inv_prime(cfg);
  }
  throw DomainError("unknown statistic");
}

namespace {

void require_size(int n) {
  if (n < 1) throw DomainError("N must be >= 1, got " + std::to_string(n));
}

// Statistic on a raw row vector. Symmetric inputs only for the R-based ones;
// the kernels guarantee that by construction.
int evaluate_rows(Statistic s, int n, std::span<const int> rows) {
  const auto cls = classify_inversions(n, rows);
  switch (s) {
    case Statistic::Inv: return cls.total;
    case Statistic::InvTilde: return cls.self_symmetric + cls.paired / 2;
    case Statistic::InvPrime: return cls.paired / 2;
  }
  return 0;
}

void require_statistic_fits(ConfigurationSet set, Statistic s) {
  if (set == ConfigurationSet::All && s != Statistic::Inv)
    throw DomainError(std::string(statistic_name(s)) +
                      " is only defined on symmetric configurations");
}

template <class Search, class Visit>
void walk_all(int n, Visit&& visit) {
  Search search(n);
  search.complete(std::span<const int>{}, visit);
}

template <class Visit>
void walk_serial(ConfigurationSet set, int n, Visit&& visit) {
  if (set == ConfigurationSet::All)
    walk_all<detail::DellacSearch>(n, visit);
  else
    walk_all<detail::SymmetricSearch>(n, visit);
}

// Shallowest prefix depth giving enough jobs to keep `threads` workers busy.
template <class Search>
std::vector<std::vector<int>> make_prefixes(int n, int threads) {
  const std::size_t wanted = 16 * static_cast<std::size_t>(threads < 1 ? 1 : threads);
  Search search(n);
  std::vector<std::vector<int>> out;
  for (int depth = 1; depth <= search.depth_limit(); ++depth) {
    out.clear();
    search.prefixes(depth, [&](std::span<const int> p) {
      out.emplace_back(p.begin(), p.end());
    });
    if (out.size() >= wanted) break;
  }
  return out;
}

template <class Search, class Chunk, class Work>
std::vector<Chunk> run_kernel(int n, int threads, Work&& work) {
  const auto prefixes = make_prefixes<Search>(n, threads);
  return detail::run_partitioned<Chunk>(prefixes, threads, [&](const std::vector<int>& p) {
    Search search(n);
    return work(search, std::span<const int>(p));
  });
}

template <class Search>
std::vector<DellacConfiguration> enumerate_parallel(int n, int threads) {
  auto chunks = run_kernel<Search, std::vector<DellacConfiguration>>(
      n, threads, [n](Search& search, std::span<const int> prefix) {
        std::vector<DellacConfiguration> local;
        search.complete(prefix, [&](std::span<const int> rows) {
          local.push_back(DellacConfiguration::unchecked(
              n, std::vector<int>(rows.begin(), rows.end())));
        });
        return local;
      });
  std::size_t total = 0;
  for (const auto& c : chunks) total += c.size();
  std::vector<DellacConfiguration> out;
  out.reserve(total);
  for (auto& c : chunks)
    for (auto& cfg : c) out.push_back(std::move(cfg));
  return out;
}

template <class Search>
Histogram histogram_parallel(int n, Statistic s, int threads) {
  auto chunks = run_kernel<Search, Histogram>(
      n, threads, [n, s](Search& search, std::span<const int> prefix) {
        Histogram local;
        search.complete(prefix, [&](std::span<const int> rows) {
          local.add(evaluate_rows(s, n, rows));
        });
        return local;
      });
  Histogram out;
  for (const auto& h : chunks) out.merge(h);
  return out;
}

}  // namespace

namespace serial {

std::vector<DellacConfiguration> enumerate(ConfigurationSet set, int n) {
  require_size(n);
  std::vector<DellacConfiguration> out;
  walk_serial(set, n, [&](std::span<const int> rows) {
    out.push_back(DellacConfiguration::unchecked(n, std::vector<int>(rows.begin(), rows.end())));
  });
  return out;
}

Histogram statistic_histogram(ConfigurationSet set, int n, Statistic s) {
  require_size(n);
  require_statistic_fits(set, s);
  Histogram out;
  walk_serial(set, n, [&](std::span<const int> rows) {
    out.add(evaluate_rows(s, n, rows));
  });
  return out;
}

std::uint64_t count(ConfigurationSet set, int n) {
  require_size(n);
  std::uint64_t total = 0;
  walk_serial(set, n, [&](std::span<const int>) { ++total; });
  return total;
}

}  // namespace serial

std::vector<DellacConfiguration> enumerate(ConfigurationSet set, int n, int threads) {
  require_size(n);
  return set == ConfigurationSet::All ? enumerate_parallel<detail::DellacSearch>(n, threads)
                                      : enumerate_parallel<detail::SymmetricSearch>(n, threads);
}

Histogram statistic_histogram(ConfigurationSet set, int n, Statistic s, int threads) {
  require_size(n);
  require_statistic_fits(set, s);
  return set == ConfigurationSet::All
             ? histogram_parallel<detail::DellacSearch>(n, s, threads)
             : histogram_parallel<detail::SymmetricSearch>(n, s, threads);
}

std::uint64_t count(ConfigurationSet set, int n, int threads) {
  return statistic_histogram(set, n, Statistic::Inv, threads).total();
}

}  // namespace dellac
