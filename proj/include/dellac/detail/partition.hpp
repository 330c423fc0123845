#pragma once

// Runs independent prefix jobs on an OpenMP worker pool. Each job writes its
// own slot; slots are returned in prefix order so callers can merge them
// deterministically regardless of the thread count or schedule.

#include <exception>
#include <vector>

#include <omp.h>

namespace dellac::detail {

template <class Chunk, class Prefix, class Work>
std::vector<Chunk> run_partitioned(const std::vector<Prefix>& prefixes, int threads,
                                   Work&& work) {
  std::vector<Chunk> chunks(prefixes.size());
  std::exception_ptr failure;
  const long jobs = static_cast<long>(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads < 1 ? 1 : threads)
  for (long i = 0; i < jobs; ++i) {
    try {
      chunks[i] = work(prefixes[i]);
    } catch (...) {
#pragma omp critical(dellac_partition_failure)
      if (!failure) failure = std::current_exception();
    }
  }

  if (failure) std::rethrow_exception(failure);
  return chunks;
}

}  // namespace dellac::detail
