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

#include <algorithm>
#include <random>

#include "agqc/poly.hpp"
#include "doctest.h"

using namespace agqc;

TEST_SUITE("poly") {
    TEST_CASE("degree, text and evaluation") {
        auto F = build_field(2, 4);
        Poly z(F);
        CHECK(z.degree() == -1);
        CHECK(z.to_text() == "0");
        Poly p = Poly::from_text(F, "3 0 1 0");
        CHECK(p.degree() == 2);
        CHECK(p.to_text() == "3 0 1");
        for (Elem x : F->elements()) CHECK(p.eval(x) == F->add(Elem{3}, F->mul(x, x)));
    }

    TEST_CASE("derivative in characteristic p") {
        auto F = build_field(3, 1);
        // Z^3 + 2Z^2 + Z -> 4Z + 1 = Z + 1
        Poly p = Poly::from_text(F, "0 1 2 1");
        CHECK(p.derivative().to_text() == "1 1");
        auto G = build_field(2, 1);
        CHECK(Poly::from_text(G, "1 1 1 1 1").derivative().to_text() == "1 0 1");
    }

    TEST_CASE("root and product round trips") {
        std::mt19937_64 rng(11);
        for (auto [p, k] : {std::pair{2u, 6u}, {3u, 2u}, {5u, 2u}}) {
            auto F = build_field(p, k);
            auto all = F->elements();
            for (int t = 0; t < 50; ++t) {
                std::shuffle(all.begin(), all.end(), rng);
                std::size_t r = rng() % (all.size() / 2);
                std::vector<Elem> roots(all.begin(), all.begin() + static_cast<long>(r));
                Poly f = Poly::from_roots(F, roots);
                CHECK(f.degree() == static_cast<int>(r));
                std::sort(roots.begin(), roots.end());
                CHECK(roots_in_field(f) == roots);
                CHECK(gcd(f, f.derivative()).degree() == 0);
            }
        }
    }

    TEST_CASE("from_roots rejects a repeated root") {
        auto F = build_field(2, 3);
        std::vector<Elem> r{Elem{2}, Elem{5}, Elem{2}};
        CHECK_THROWS_AS(Poly::from_roots(F, r), std::invalid_argument);
    }

    TEST_CASE("divmod identity and gcd") {
        std::mt19937_64 rng(3);
        auto F = build_field(2, 5);
        auto rnd = [&](int deg) {
            std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
            for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng() % 32)};
            c.back() = Elem{1};
            return Poly(F, c);
        };
        for (int t = 0; t < 100; ++t) {
            Poly a = rnd(static_cast<int>(rng() % 12)), b = rnd(static_cast<int>(rng() % 6));
            auto [qq, r] = a.divmod(b);
            CHECK(qq * b + r == a);
            CHECK(r.degree() < b.degree());
            Poly c = rnd(3);
            Poly g = gcd(a * c, b * c);
            CHECK(g.leading().v == 1);
            CHECK((a * c).divmod(g).second.is_zero());
            CHECK(g.divmod(c.monic()).second.is_zero());
        }
        CHECK_THROWS_AS(gcd(Poly(F), Poly(F)), std::invalid_argument);
        CHECK_THROWS_AS(roots_in_field(Poly(F)), std::invalid_argument);
        CHECK_THROWS(rnd(3).divmod(Poly(F)));
    }

    TEST_CASE("sparse construction") {
        auto F = build_field(2, 6);
        std::vector<std::pair<std::size_t, Elem>> terms{{28, Elem{1}}, {19, Elem{1}}, {1, Elem{1}}};
        Poly f = Poly::from_terms(F, terms);
        CHECK(f.support() == std::vector<std::size_t>{1, 19, 28});
        CHECK(f.derivative().support() == std::vector<std::size_t>{0, 18});
    }
}
