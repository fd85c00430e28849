#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace smoothwords {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into contiguous chunks, runs `work(begin, end)` on up to
/// `jobs` threads and returns the per-chunk results in index order, so the
/// merged output never depends on scheduling.
template <class Work>
auto parallel_chunks(std::size_t n, unsigned jobs, Work work)
    -> std::vector<decltype(work(std::size_t{}, std::size_t{}))> {
  using Result = decltype(work(std::size_t{}, std::size_t{}));
  jobs = resolve_jobs(jobs);
  if (jobs == 1 || n < 2) {
    std::vector<Result> one;
    one.push_back(work(0, n));
    return one;
  }
  const std::size_t chunks = std::min<std::size_t>(n, std::size_t{jobs} * 8);
  std::vector<Result> results(chunks);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](unsigned t) {
    try {
      for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
        results[c] = work(n * c / chunks, n * (c + 1) / chunks);
      }
    } catch (...) {
      errors[t] = std::current_exception();
      next = chunks;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace smoothwords
