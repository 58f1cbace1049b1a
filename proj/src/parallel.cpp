/*
   Copyright 2026 The agqc Authors

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

#include "agqc/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace agqc {

unsigned default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    if (n == 0) return;
    jobs = std::max(1u, jobs);
    std::size_t chunks = std::min<std::size_t>(jobs, n);
    if (chunks == 1) {
        body(0, n, 0);
        return;
    }
    std::size_t step = (n + chunks - 1) / chunks;
    std::exception_ptr failure;
    std::mutex mu;
    std::vector<std::jthread> workers;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t begin = c * step;
        std::size_t end = std::min(n, begin + step);
        if (begin >= end) break;
        workers.emplace_back([&, begin, end, c] {
            try {
                body(begin, end, c);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    workers.clear();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace agqc
