// Copyright 2026 The artifact authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRC_PARALLEL_HPP
#define QRC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace qrc {

// Runs fn(begin, end, worker) over contiguous chunks of [0, n). Workers write
// to disjoint slots indexed by `worker`; callers merge in fixed order so the
// result is independent of scheduling. The first exception thrown by any
// worker is rethrown after all workers join.
template <typename F>
void parallel_for_chunks(std::size_t n, unsigned max_threads, F&& fn) {
  unsigned k = max_threads ? max_threads : std::thread::hardware_concurrency();
  if (k == 0) k = 1;
  k = static_cast<unsigned>(std::min<std::size_t>(k, n == 0 ? 1 : n));
  if (k <= 1) {
    fn(std::size_t{0}, n, 0u);
    return;
  }

  std::vector<std::thread> pool;
  pool.reserve(k);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const std::size_t base = n / k;
  const std::size_t rem = n % k;
  std::size_t begin = 0;
  for (unsigned w = 0; w < k; ++w) {
    const std::size_t len = base + (w < rem ? 1 : 0);
    const std::size_t end = begin + len;
    pool.emplace_back([&, begin, end, w]() {
      try {
        fn(begin, end, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline unsigned worker_count(std::size_t n, unsigned max_threads) {
  unsigned k = max_threads ? max_threads : std::thread::hardware_concurrency();
  if (k == 0) k = 1;
  return static_cast<unsigned>(std::min<std::size_t>(k, n == 0 ? 1 : n));
}

}  // namespace qrc

#endif  // QRC_PARALLEL_HPP
