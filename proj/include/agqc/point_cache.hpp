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

#ifndef AGQC_POINT_CACHE_HPP
#define AGQC_POINT_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "agqc/curves.hpp"

namespace agqc {

inline constexpr const char* kCacheEnv = "AGQC_CACHE_DIR";
inline constexpr const char* kDefaultCacheDir = ".agqc-cache";

/// Explicit override, else $AGQC_CACHE_DIR, else ".agqc-cache".
std::filesystem::path cache_dir(const std::optional<std::string>& override_dir = std::nullopt);
std::filesystem::path cache_file(const std::filesystem::path& dir, const CurveDescriptor& desc, const Field& F);

enum class CacheStatus { kMiss, kHit, kCorrupt };

struct CachedPlaces {
    std::vector<AffinePlace> places;
    CacheStatus status = CacheStatus::kMiss;
    std::string reason;  // set for kCorrupt
};

/// Header "agqc-points <family> <q> <n> <modulus hash> <count>", then one
/// "x y z" line of enc values per place. A header mismatch, wrong count,
/// unsorted or off-curve line marks the file corrupt.
CachedPlaces read_cache(const std::filesystem::path& file, const CurveDescriptor& desc, const Field& F);
void write_cache(const std::filesystem::path& file, const CurveDescriptor& desc, const Field& F,
                 const std::vector<AffinePlace>& places);

/// Cached places when valid; otherwise enumerate (with the count check) and
/// rewrite the cache. The returned status says what was found on disk.
CachedPlaces load_or_enumerate(const CurveDescriptor& desc, const Field& F, const std::filesystem::path& dir,
                               unsigned jobs = 1);

}  // namespace agqc

#endif
