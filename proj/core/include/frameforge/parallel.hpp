// Copyright 2026 The frameforge Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace frameforge {

// Worker count used by the enumeration and Monte Carlo loops.
// Zero restores the hardware default.
void set_thread_count(unsigned count) noexcept;
unsigned thread_count() noexcept;

// Number of contiguous chunks for_each_chunk splits `count` items into.
inline std::size_t chunk_count(std::size_t count) noexcept {
  return std::max<std::size_t>(1, std::min<std::size_t>(thread_count(), count));
}

// Calls fn(chunk, begin, end) over contiguous ranges of [0, count).
// Callers store per-chunk partials and combine them in chunk order, which
// keeps reductions identical to a sequential scan.
template <typename Fn>
void for_each_chunk(std::size_t count, Fn&& fn) {
  const std::size_t chunks = chunk_count(count);
  auto bounds = [&](std::size_t c) { return count * c / chunks; };
  if (chunks == 1) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        try {
          fn(c, bounds(c), bounds(c + 1));
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace frameforge
