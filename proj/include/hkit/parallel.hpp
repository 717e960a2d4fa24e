#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace hkit {

/// out[k] = f(k) for k < count on up to hardware_concurrency threads.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F f) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < count;) out[k] = f(k);
  };
  std::size_t n = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace hkit
