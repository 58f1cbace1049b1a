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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "agqc/point_cache.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace agqc;

namespace {

Elem npow(const Field& F, Elem a, int e) {
    Elem r = F.one();
    for (int i = 0; i < e; ++i) r = F.mul(r, a);
    return r;
}

// Brute force over every coordinate triple with naive powers.
std::vector<AffinePlace> brute_force(Family fam, const Field& F) {
    std::vector<AffinePlace> out;
    auto els = F.elements();
    for (Elem x : els)
        for (Elem y : els) {
            switch (fam) {
                case Family::GK: {  // q = 2: Y^3 = X^2 + X, Z^3 = Y^4 - Y
                    if (npow(F, y, 3) != F.add(npow(F, x, 2), x)) break;
                    Elem rhs = F.sub(npow(F, y, 4), y);
                    for (Elem z : els)
                        if (npow(F, z, 3) == rhs) out.push_back({{x, y, z}});
                    break;
                }
                case Family::ABQ:  // q = 2, n = 3: Y^4 - Y = X^3
                    if (F.sub(npow(F, y, 4), y) == npow(F, x, 3)) out.push_back({{x, y, Elem{0}}});
                    break;
                case Family::GGK2: {  // q = 2, n = 3: X^3 - 1 = Y^3, Y X = Z^3
                    if (F.sub(npow(F, x, 3), F.one()) != npow(F, y, 3)) break;
                    Elem rhs = F.mul(y, x);
                    for (Elem z : els)
                        if (npow(F, z, 3) == rhs) out.push_back({{x, y, z}});
                    break;
                }
                default: break;
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("curves") {
    TEST_CASE("descriptor constants") {
        auto gk = make_descriptor(Family::GK, 2);
        CHECK(gk.genus == 10);
        CHECK(gk.m == 3);
        CHECK(gk.field_size() == 64);
        CHECK(gk.expected_places == 225);
        CHECK(gk.infinity.pole_orders.front() == std::array<long, 3>{9, 6, 8});
        auto abq = make_descriptor(Family::ABQ, 2, 3);
        CHECK(abq.genus == 3);
        CHECK(abq.expected_places == 113);
        auto gg = make_descriptor(Family::GGK2, 2, 3);
        CHECK(gg.genus == 10);
        CHECK(gg.infinity.count == 3);
        CHECK(gg.expected_places == 225);
        auto ggs = make_descriptor(Family::GGS, 2, 5);
        CHECK(ggs.genus == 46);
        CHECK(ggs.expected_places == 3969);
        for (const auto* d : {&gk, &abq, &gg, &ggs}) CHECK(hasse_weil_count(*d) == d->expected_places);
    }

    TEST_CASE("descriptor errors") {
        CHECK_THROWS_AS(make_descriptor(Family::GK, 6), std::invalid_argument);
        CHECK_THROWS_AS(make_descriptor(Family::GGS, 2, 4), std::invalid_argument);
        CHECK_THROWS_AS(make_descriptor(Family::GGS, 2, 3), std::invalid_argument);
        CHECK_THROWS_AS(make_descriptor(Family::GK, 2, 5), std::invalid_argument);
        CHECK_THROWS_AS(make_descriptor(Family::GK, 8), std::invalid_argument);  // GF(2^18)
        CHECK_THROWS_AS(parse_family("hermitian"), std::invalid_argument);
        CHECK(parse_family("GGK2") == Family::GGK2);
    }

    TEST_CASE("enumeration matches brute force") {
        for (auto [fam, n] : {std::pair{Family::GK, 0}, {Family::ABQ, 3}, {Family::GGK2, 3}}) {
            const auto& b = test::built(fam, 2, n);
            INFO(b.desc.label());
            CHECK(b.places == brute_force(fam, *b.field));
            CHECK(static_cast<long>(b.places.size()) + b.desc.infinity.count == b.desc.expected_places);
            CHECK(maximality_check(b.desc, b.places.size()).maximal);
            for (const auto& P : b.places) {
                CHECK(satisfies_equations(b.desc, *b.field, P));
                CHECK(is_nonsingular(b.desc, *b.field, P));
            }
        }
    }

    TEST_CASE("parallel enumeration is identical") {
        const auto& b = test::gk2();
        CHECK(enumerate_points(b.desc, *b.field, 3) == b.places);
    }

    TEST_CASE("odd characteristic") {
        auto d = make_descriptor(Family::ABQ, 3, 3);
        auto F = build_field(d.field);
        auto pl = enumerate_affine_places(d, *F);
        CHECK(static_cast<long>(pl.size()) + 1 == d.expected_places);
    }

    TEST_CASE("count mismatch is reported") {
        auto d = make_descriptor(Family::ABQ, 2, 3);
        d.expected_places += 1;
        auto F = build_field(d.field);
        CHECK_THROWS_AS(enumerate_affine_places(d, *F), CountMismatch);
    }

    TEST_CASE("point cache round trip and corruption") {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / "agqc-cache-test";
        fs::remove_all(dir);
        const auto& b = test::abq23();
        auto first = load_or_enumerate(b.desc, *b.field, dir);
        CHECK(first.status == CacheStatus::kMiss);
        auto second = load_or_enumerate(b.desc, *b.field, dir);
        CHECK(second.status == CacheStatus::kHit);
        CHECK(second.places == b.places);

        fs::path file = cache_file(dir, b.desc, *b.field);
        {
            std::ifstream in(file);
            std::string all((std::istreambuf_iterator<char>(in)), {});
            auto cut = all.rfind('\n', all.size() - 2);
            std::ofstream out(file, std::ios::trunc);
            out << all.substr(0, cut + 1);  // drop the last place
        }
        auto third = read_cache(file, b.desc, *b.field);
        CHECK(third.status == CacheStatus::kCorrupt);
        CHECK(load_or_enumerate(b.desc, *b.field, dir).status == CacheStatus::kCorrupt);
        CHECK(read_cache(file, b.desc, *b.field).status == CacheStatus::kHit);

        // A cache written under another modulus is rejected by hash.
        ModuliTable other = ModuliTable::builtin();
        other.set(2, 6, {1, 1, 0, 0, 0, 0, 1});
        auto G = build_field(2, 6, std::nullopt, other);
        fs::copy_file(file, cache_file(dir, b.desc, *G), fs::copy_options::overwrite_existing);
        CHECK(read_cache(cache_file(dir, b.desc, *G), b.desc, *G).status == CacheStatus::kCorrupt);
        fs::remove_all(dir);
    }

    TEST_CASE("cache directory resolution") {
        CHECK(cache_dir(std::string("/tmp/x")) == "/tmp/x");
        setenv(kCacheEnv, "/tmp/from-env", 1);
        CHECK(cache_dir() == "/tmp/from-env");
        unsetenv(kCacheEnv);
        CHECK(cache_dir() == kDefaultCacheDir);
    }
}
