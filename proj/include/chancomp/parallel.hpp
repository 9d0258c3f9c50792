// Copyright 2026 The chancomp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace chancomp {

/// Worker count: CHANCOMP_THREADS if set, else hardware concurrency, capped at 8.
inline int thread_count() {
  if (const char* env = std::getenv("CHANCOMP_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return std::min(n, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp<int>(static_cast<int>(hw), 1, 8);
}

/// Runs fn(chunk_index, begin, end) over [0, n) split into contiguous chunks.
/// Chunking depends only on n and the worker count, so per-chunk results can
/// be merged in deterministic index order.
inline void parallel_chunks(long n, const std::function<void(int, long, long)>& fn) {
  const int workers = std::min<long>(thread_count(), std::max<long>(n, 1));
  if (workers <= 1 || n < 256) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const long chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long lo = w * chunk;
    const long hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace chancomp
