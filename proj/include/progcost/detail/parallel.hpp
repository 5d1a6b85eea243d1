// Fixed-partition parallel map; results come back in chunk order so any
// reduction over them is independent of the thread count.
#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace progcost::detail {

template <typename Result, typename F>
std::vector<Result> map_chunks(int chunks, F&& work) {
  std::vector<Result> results(static_cast<std::size_t>(chunks));
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = std::min<int>(chunks, static_cast<int>(hw));
  std::atomic<int> next{0};
  auto loop = [&] {
    for (int c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
      results[static_cast<std::size_t>(c)] = work(c);
  };
  std::vector<std::jthread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(loop);
  loop();
  return results;
}

}  // namespace progcost::detail
