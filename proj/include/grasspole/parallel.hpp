/*
   Copyright 2026 The grasspole Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GRASSPOLE_PARALLEL_HPP
#define GRASSPOLE_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace grasspole {

/// Worker count: GRASSPOLE_THREADS if set and positive, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("GRASSPOLE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Splits [0, count) into contiguous chunks, runs `work(begin, end)` on each and returns the chunk
 * results in index order, so merged output does not depend on scheduling.
 */
template <class Result, class Work>
std::vector<Result> parallel_chunks(std::uint64_t count, Work work, std::uint64_t min_chunk = 256) {
    const std::uint64_t workers = std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(1, count / min_chunk));
    std::vector<Result> results(workers);
    if (workers <= 1) {
        results[0] = work(std::uint64_t{0}, count);
        return results;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                results[w] = work(count * w / workers, count * (w + 1) / workers);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

}  // namespace grasspole

#endif  // GRASSPOLE_PARALLEL_HPP
