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

#ifndef AGQC_TESTS_FIXTURES_HPP
#define AGQC_TESTS_FIXTURES_HPP

#include <map>
#include <tuple>

#include "agqc/codes.hpp"

namespace agqc::test {

/// Places and Swiss data of one instance, built once per process.
struct Built {
    CurveDescriptor desc;
    FieldPtr field;
    std::vector<AffinePlace> places;
    SwissData swiss;
};

inline const Built& built(Family fam, long q, int n = 0) {
    static std::map<std::tuple<Family, long, int>, Built> cache;
    auto key = std::make_tuple(fam, q, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Built b;
    b.desc = make_descriptor(fam, q, n);
    b.field = build_field(b.desc.field);
    b.places = enumerate_affine_places(b.desc, *b.field);
    b.swiss = build_swiss_data(b.desc, b.field, b.places);
    return cache.emplace(key, std::move(b)).first->second;
}

inline const Built& gk2() { return built(Family::GK, 2); }
inline const Built& abq23() { return built(Family::ABQ, 2, 3); }
inline const Built& ggk23() { return built(Family::GGK2, 2, 3); }

}  // namespace agqc::test

#endif
