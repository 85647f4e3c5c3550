// Fork-join over independent work items with a deterministic merge order.
// Results land in an index-addressed vector, so the outcome is identical for
// any worker count.

#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace pla {

inline int resolve_threads(int requested) {
  if (requested > 0)
    return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, int threads, Fn&& fn) {
  std::vector<T> out(n);
  int t = resolve_threads(threads);
  if (t <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(t), n);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace pla
