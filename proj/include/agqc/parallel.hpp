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

#ifndef AGQC_PARALLEL_HPP
#define AGQC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace agqc {

unsigned default_jobs();

/// Splits [0, n) into contiguous chunks and runs body(begin, end, chunk) on up
/// to `jobs` threads. Chunk boundaries depend only on (n, jobs); callers that
/// collect per-chunk output and concatenate by chunk index get
/// schedule-independent results.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace agqc

#endif
