// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace hisa {

/// Worker count for grid fan-out: hardware concurrency, capped by the
/// HISA_THREADS environment variable when set (minimum 1).
uint32_t worker_count();

/// Runs fn(i) for every i in [0, n) across up to `threads` workers. Work
/// items must be independent; writing results keyed by index keeps output
/// deterministic regardless of scheduling. The first exception thrown by a
/// worker is rethrown on the calling thread.
void parallel_for(std::size_t n, uint32_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace hisa
