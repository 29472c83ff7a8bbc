// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace lisscheb {

/// Worker count: LISSCHEB_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
[[nodiscard]] std::size_t thread_count();

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// body(begin, end, worker) for each. Runs inline when one worker suffices.
/// The first exception thrown by any chunk is rethrown after all workers join.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                  std::size_t max_workers = 0);

}  // namespace lisscheb
