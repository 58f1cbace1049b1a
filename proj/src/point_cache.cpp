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

#include "agqc/point_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace agqc {

namespace fs = std::filesystem;

fs::path cache_dir(const std::optional<std::string>& override_dir) {
    if (override_dir && !override_dir->empty()) return *override_dir;
    if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
    return kDefaultCacheDir;
}

fs::path cache_file(const fs::path& dir, const CurveDescriptor& desc, const Field& F) {
    std::ostringstream name;
    name << family_name(desc.family) << "_q" << desc.q << "_n" << desc.n << '_' << std::hex << F.modulus_hash()
         << ".pts";
    return dir / name.str();
}

namespace {

std::string header(const CurveDescriptor& desc, const Field& F, std::size_t count) {
    std::ostringstream h;
    h << "agqc-points " << family_name(desc.family) << ' ' << desc.q << ' ' << desc.n << ' ' << F.modulus_hash() << ' '
      << count;
    return h.str();
}

CachedPlaces corrupt(std::string why) { return {{}, CacheStatus::kCorrupt, std::move(why)}; }

}  // namespace

CachedPlaces read_cache(const fs::path& file, const CurveDescriptor& desc, const Field& F) {
    std::ifstream in(file);
    if (!in) return {};
    std::string line;
    if (!std::getline(in, line)) return corrupt("empty file");
    std::istringstream hs(line);
    std::string magic, fam;
    long q = 0;
    int n = 0;
    std::uint64_t hash = 0;
    std::size_t count = 0;
    if (!(hs >> magic >> fam >> q >> n >> hash >> count) || magic != "agqc-points") return corrupt("bad header");
    if (fam != family_name(desc.family) || q != desc.q || n != desc.n) return corrupt("header names another curve");
    if (hash != F.modulus_hash()) return corrupt("modulus hash mismatch");
    if (count != static_cast<std::size_t>(desc.expected_places - desc.infinity.count)) {
        return corrupt("stored count differs from the expected count");
    }

    CachedPlaces out;
    out.places.reserve(count);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        AffinePlace P;
        std::uint64_t v[3] = {0, 0, 0};
        if (!(ls >> v[0] >> v[1] >> v[2])) return corrupt("malformed place line");
        for (int c = 0; c < 3; ++c) {
            if (v[c] >= F.size()) return corrupt("entry outside the field");
            P.c[c] = Elem{static_cast<std::uint32_t>(v[c])};
        }
        if (!out.places.empty() && !(out.places.back() < P)) return corrupt("places not strictly sorted");
        if (!satisfies_equations(desc, F, P)) return corrupt("place off the curve");
        out.places.push_back(P);
    }
    if (out.places.size() != count) return corrupt("place count differs from header");
    out.status = CacheStatus::kHit;
    return out;
}

void write_cache(const fs::path& file, const CurveDescriptor& desc, const Field& F,
                 const std::vector<AffinePlace>& places) {
    fs::create_directories(file.parent_path().empty() ? fs::path(".") : file.parent_path());
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << header(desc, F, places.size()) << '\n';
        for (const auto& P : places) out << P.c[0].v << ' ' << P.c[1].v << ' ' << P.c[2].v << '\n';
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, file);
}

CachedPlaces load_or_enumerate(const CurveDescriptor& desc, const Field& F, const fs::path& dir, unsigned jobs) {
    const fs::path file = cache_file(dir, desc, F);
    CachedPlaces got = read_cache(file, desc, F);
    if (got.status == CacheStatus::kHit) return got;
    got.places = enumerate_affine_places(desc, F, jobs);
    write_cache(file, desc, F, got.places);
    return got;
}

}  // namespace agqc
