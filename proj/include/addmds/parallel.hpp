/**************************************************************************
 * Copyright 2026 The addmds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace addmds {

/// Runs fn(i) for i in [0, count) on `shards` threads, each thread taking a
/// contiguous block. Results are written by index, so the caller's merge is
/// independent of scheduling. The first exception (by shard order) is rethrown.
template <class Fn>
void parallel_for(std::size_t count, std::size_t shards, Fn&& fn) {
    shards = std::max<std::size_t>(1, std::min(shards, count));
    if (shards <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(shards);
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + shards - 1) / shards;
    for (std::size_t s = 0; s < shards; ++s) {
        pool.emplace_back([&, s] {
            try {
                const std::size_t lo = s * chunk, hi = std::min(count, lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[s] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace addmds
