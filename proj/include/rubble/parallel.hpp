// Copyright 2026 The rubble Authors
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
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace rubble {

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Smallest index i in [0, count) with pred(i, worker) true, or nullopt.
//
// Workers claim fixed-size chunks in increasing order. A chunk starting past
// the best hit so far cannot hold a smaller one and is skipped, so the result
// is the same for any worker count.
template <class Pred>
std::optional<std::size_t> parallel_find_first(std::size_t count, unsigned workers, Pred pred,
                                               const ProgressFn& progress = {},
                                               std::size_t chunk = 32) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  workers = std::max(1u, workers);
  std::atomic<std::size_t> next_chunk{0};
  std::atomic<std::size_t> best{none};
  std::atomic<std::size_t> done{0};
  std::mutex report_mutex;
  std::exception_ptr failure;

  auto work = [&](unsigned worker) {
    try {
      for (;;) {
        const std::size_t begin = next_chunk.fetch_add(1) * chunk;
        if (begin >= count || begin > best.load()) return;
        const std::size_t end = std::min(count, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) {
          if (i > best.load()) break;
          if (pred(i, worker)) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
        const std::size_t finished = done.fetch_add(end - begin) + (end - begin);
        if (progress) {
          std::lock_guard lock(report_mutex);
          progress(finished, count);
        }
      }
    } catch (...) {
      std::lock_guard lock(report_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  if (failure) std::rethrow_exception(failure);
  if (best.load() == none) return std::nullopt;
  return best.load();
}

}  // namespace rubble
