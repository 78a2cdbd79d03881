// Copyright 2026 The paucity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace paucity {

/// Splits [0, n) into fixed chunks of `chunk` items and runs fn(begin, end, index)
/// for each chunk on up to `threads` workers. The chunking does not depend on
/// the thread count, so callers that reduce per-chunk results in index order get
/// identical output for any number of workers. The exception from the lowest
/// failing chunk is rethrown.
template <class Fn>
void parallel_chunks(std::size_t n, std::size_t chunk, unsigned threads, Fn&& fn) {
  if (n == 0) return;
  chunk = std::max<std::size_t>(chunk, 1);
  const std::size_t chunks = (n + chunk - 1) / chunk;
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1U), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c * chunk, std::min(n, (c + 1) * chunk), c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = chunks;
  std::exception_ptr error;
  auto work = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      try {
        fn(c * chunk, std::min(n, (c + 1) * chunk), c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (c < failed_at) {
          failed_at = c;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

inline unsigned hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace paucity
