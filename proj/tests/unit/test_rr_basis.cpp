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

#include "agqc/rr_basis.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace agqc;

namespace {

// Elements <= limit of the numerical semigroup generated by gens.
std::vector<long> semigroup(std::vector<long> gens, long limit) {
    std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
    in[0] = true;
    for (long v = 1; v <= limit; ++v)
        for (long g : gens)
            if (v >= g && in[static_cast<std::size_t>(v - g)]) in[static_cast<std::size_t>(v)] = true;
    std::vector<long> out;
    for (long v = 0; v <= limit; ++v)
        if (in[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<long> poles(const std::vector<Monomial>& ms) {
    std::vector<long> out;
    for (const auto& m : ms) out.push_back(m.pole);
    return out;
}

}  // namespace

TEST_SUITE("rr_basis") {
    TEST_CASE("candidate pole orders are the Weierstrass semigroup") {
        const auto& gk = test::gk2().desc;
        CHECK(poles(candidate_monomials(gk, {80, 1})) == semigroup({6, 8, 9}, 80));
        CHECK(semigroup({6, 8, 9}, 80).size() == 81 - 10);  // genus many gaps
        const auto& abq = test::abq23().desc;
        CHECK(poles(candidate_monomials(abq, {40, 1})) == semigroup({3, 4}, 40));
    }

    TEST_CASE("ordering and text") {
        auto c = candidate_monomials(test::gk2().desc, {20, 1});
        CHECK(monomial_text(c[0]) == "1");
        CHECK(monomial_text(c[1]) == "y");
        CHECK(monomial_text(c[2]) == "z");
        CHECK(monomial_text(c[3]) == "x");
        for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].pole < c[i].pole);
        auto g = candidate_monomials(test::ggk23().desc, {7, 3});
        for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i - 1].pole <= g[i].pole);
        CHECK(monomial_text(Monomial{{2, 0, 3}, 0}) == "x^2*z^3");
    }

    TEST_CASE("rank contract") {
        const auto& gk = test::gk2();
        for (long s = 19; s <= 49; ++s)
            CHECK(select_basis(gk.desc, gk.field, divisor_for(gk.desc, s), gk.swiss.d_places).basis.size() == size_t(s - 9));
        CHECK(select_basis(gk.desc, gk.field, divisor_for(gk.desc, 18), gk.swiss.d_places).basis.size() == 10);
        const auto& abq = test::abq23();
        for (long s = 5; s <= 22; ++s)
            CHECK(select_basis(abq.desc, abq.field, divisor_for(abq.desc, s), abq.swiss.d_places).basis.size() == size_t(s - 2));
        const auto& gg = test::ggk23();
        for (long s = 7; s <= 13; ++s)
            CHECK(select_basis(gg.desc, gg.field, divisor_for(gg.desc, s), gg.swiss.d_places).basis.size() == size_t(3 * s - 9));
        CHECK(select_basis(gg.desc, gg.field, divisor_for(gg.desc, 6), gg.swiss.d_places).basis.size() == 10);
    }

    TEST_CASE("bases are nested prefixes") {
        const auto& b = test::ggk23();
        auto big = select_basis(b.desc, b.field, divisor_for(b.desc, 13), b.swiss.d_places);
        for (long s = 0; s <= 13; ++s) {
            auto small = select_basis(b.desc, b.field, divisor_for(b.desc, s), b.swiss.d_places);
            REQUIRE(small.basis.size() == prefix_dimension(big, s));
            CHECK(std::equal(small.basis.begin(), small.basis.end(), big.basis.begin()));
        }
    }

    TEST_CASE("evaluation agrees with field powers") {
        const auto& b = test::gk2();
        MonomialEvaluator ev(b.field, b.swiss.d_places);
        Monomial m{{1, 3, 2}, 0};
        auto v = ev.evaluate(m);
        const Field& F = *b.field;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& P = b.swiss.d_places[i];
            CHECK(v[i] == F.mul(P.c[0], F.mul(F.pow(P.c[1], 3), F.pow(P.c[2], 2))));
        }
    }

    TEST_CASE("degree must stay below the length") {
        const auto& b = test::abq23();
        CHECK_THROWS_AS(select_basis(b.desc, b.field, divisor_for(b.desc, 112), b.swiss.d_places), std::invalid_argument);
        CHECK_THROWS_AS(divisor_for(b.desc, -1), std::invalid_argument);
    }
}
