// Copyright 2026 The GTR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gtr::detail {

/// Runs fn(chunk) for chunk in [0, n_chunks) on up to `threads` workers.
/// Chunks are claimed dynamically, so fn must only write chunk-local state.
/// The first exception thrown by any chunk is rethrown on the caller.
template <class Fn>
void for_each_chunk(std::uint64_t n_chunks, unsigned threads, Fn &&fn) {
    const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, threads), n_chunks));
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) {
            fn(c);
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::uint64_t c = next++; c < n_chunks; c = next++) {
            try {
                fn(c);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = n_chunks;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) {
        pool.emplace_back(work);
    }
    work();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace gtr::detail
