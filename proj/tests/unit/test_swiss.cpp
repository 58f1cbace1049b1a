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

#include <set>

#include "agqc/swiss.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace agqc;

namespace {

std::vector<std::size_t> supp(const Poly& p) { return p.support(); }

}  // namespace

TEST_SUITE("swiss") {
    TEST_CASE("GK(2)") {
        const auto& sw = test::gk2().swiss;
        CHECK(sw.a_set.size() == 28);
        CHECK(supp(sw.f) == std::vector<std::size_t>{1, 19, 28});
        CHECK(supp(sw.f_prime) == std::vector<std::size_t>{0, 18});
        CHECK(sw.deg_D == 224);
        CHECK(sw.deg_M == 144);
        CHECK(sw.omega_coeff == std::vector<long>{98});
        CHECK(sw.s_min == 18);
        CHECK(sw.s_max == 49);
    }

    TEST_CASE("ABQ(2,3) uses the same polynomial in x") {
        const auto& sw = test::abq23().swiss;
        CHECK(sw.desc.fiber_coord == kX);
        CHECK(supp(sw.f) == std::vector<std::size_t>{1, 19, 28});
        CHECK(sw.deg_D == 112);
        CHECK(sw.deg_M == 72);
        CHECK(sw.omega_coeff == std::vector<long>{44});
        CHECK(sw.s_max == 22);
    }

    TEST_CASE("GGK2(2,3) excludes the fiber over zero") {
        const auto& b = test::ggk23();
        const auto& sw = b.swiss;
        CHECK(sw.a_set.size() == 36);
        CHECK(std::find(sw.a_set.begin(), sw.a_set.end(), Elem{0}) == sw.a_set.end());
        long over_zero = std::count_if(b.places.begin(), b.places.end(), [](const AffinePlace& P) { return P.c[kZ].v == 0; });
        CHECK(over_zero == 6);
        CHECK(sw.deg_D + over_zero == static_cast<long>(b.places.size()));
        CHECK(supp(sw.f) == std::vector<std::size_t>{0, 18, 27, 36});
        CHECK(supp(sw.f_prime) == std::vector<std::size_t>{26});
        CHECK(sw.deg_M == 156);
        CHECK(sw.omega_coeff == std::vector<long>{26, 26, 26});
        CHECK(sw.s_min == 6);
        CHECK(sw.s_max == 13);
    }

    TEST_CASE("divisor degree identity and certificates") {
        for (const auto* b : {&test::gk2(), &test::abq23(), &test::ggk23()}) {
            const auto& sw = b->swiss;
            long total = 0;
            for (long c : sw.omega_coeff) total += c;
            CHECK(sw.deg_M - sw.deg_D + total == 2 * sw.desc.genus - 2);
            CHECK(simple_zero_certificate(sw, b->places).ok);
            CHECK(closed_form_check(sw).ok);
            CHECK(expected_A_size(sw.desc) == static_cast<long>(sw.a_set.size()));
            CHECK(a_set_from_condition(sw.desc, *sw.field) == a_set_from_fibers(sw.desc, *sw.field, b->places));
            for (Elem a : sw.a_set) CHECK(sw.f.eval(a).v == 0);
        }
    }

    TEST_CASE("closed forms hold in characteristic 3") {
        auto d = make_descriptor(Family::GK, 3);
        auto F = build_field(d.field);
        auto pl = enumerate_affine_places(d, *F);
        auto sw = build_swiss_data(d, F, pl);
        CHECK(static_cast<long>(sw.a_set.size()) == *expected_A_size(d));
        CHECK(closed_form_check(sw).ok);
    }

    TEST_CASE("a damaged place list is caught") {
        const auto& b = test::gk2();
        auto pl = b.places;
        // Remove one place from a full fiber: the fiber method drops the value, the condition keeps it.
        auto it = std::find_if(pl.begin(), pl.end(), [&](const AffinePlace& P) { return P.c[kZ] == b.swiss.a_set[3]; });
        pl.erase(it);
        CHECK_THROWS_AS(compute_A_set(b.desc, *b.field, pl), VerificationFailure);
    }

    TEST_CASE("no condition for GGK2 with q != 2") {
        auto d = make_descriptor(Family::GGK2, 3, 3);
        CHECK_FALSE(expected_A_size(d).has_value());
    }
}
