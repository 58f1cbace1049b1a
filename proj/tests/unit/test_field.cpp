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

#include <fstream>
#include <random>
#include <sstream>

#include "agqc/field.hpp"
#include "doctest.h"

using namespace agqc;

namespace {

// Schoolbook arithmetic on coefficient vectors, reduced by the modulus.
std::vector<unsigned> oracle_mul(const FieldSpec& s, std::vector<unsigned> a, std::vector<unsigned> b) {
    const unsigned p = s.p, k = s.k;
    std::vector<unsigned> prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (unsigned d = 2 * k - 1; d >= k; --d) {
        unsigned c = prod[d];
        if (c == 0) continue;
        for (unsigned i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * s.modulus[i]) % p;
    }
    prod.resize(k);
    return prod;
}

std::vector<unsigned> oracle_add(unsigned p, std::vector<unsigned> a, const std::vector<unsigned>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % p;
    return a;
}

}  // namespace

TEST_SUITE("field") {
    TEST_CASE("GF(4) tables") {
        auto F = build_field(2, 2);
        // enc: 0, 1, a = 2, a + 1 = 3 with a^2 = a + 1
        CHECK(F->mul(Elem{2}, Elem{2}).v == 3);
        CHECK(F->mul(Elem{2}, Elem{3}).v == 1);
        CHECK(F->add(Elem{2}, Elem{3}).v == 1);
        CHECK(F->inv(Elem{3}).v == 2);
        CHECK(F->size() == 4);
    }

    TEST_CASE("GF(9) against coefficient arithmetic") {
        auto F = build_field(3, 2);
        for (Elem a : F->elements())
            for (Elem b : F->elements()) {
                CHECK(F->coeffs(F->mul(a, b)) == oracle_mul(F->spec(), F->coeffs(a), F->coeffs(b)));
                CHECK(F->coeffs(F->add(a, b)) == oracle_add(3, F->coeffs(a), F->coeffs(b)));
            }
    }

    TEST_CASE("laws on 10^4 seeded triples per default field") {
        std::mt19937_64 rng(7);
        for (const auto& [key, mod] : ModuliTable::builtin().entries()) {
            auto F = build_field(key.first, key.second);
            std::uniform_int_distribution<std::uint32_t> pick(0, F->size() - 1);
            INFO("GF(" << key.first << "^" << key.second << ")");
            bool ok = true;
            for (int t = 0; t < 10000 && ok; ++t) {
                Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
                ok &= F->add(a, F->add(b, c)) == F->add(F->add(a, b), c);
                ok &= F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c);
                ok &= F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c));
                ok &= F->add(a, b) == F->add(b, a) && F->mul(a, b) == F->mul(b, a);
                ok &= F->add(a, F->neg(a)).v == 0 && F->sub(F->add(a, b), b) == a;
                if (a.v != 0) ok &= F->mul(a, F->inv(a)).v == 1;
                ok &= F->coeffs(F->mul(a, b)) == oracle_mul(F->spec(), F->coeffs(a), F->coeffs(b));
            }
            CHECK(ok);
        }
    }

    TEST_CASE("pow and Frobenius") {
        auto F = build_field(2, 6);
        for (Elem a : F->elements()) {
            Elem r = F->one();
            for (int e = 0; e < 10; ++e) {
                CHECK(F->pow(a, e) == r);
                r = F->mul(r, a);
            }
            CHECK(F->pow(a, 64) == a);
        }
        CHECK(F->pow(F->zero(), 0) == F->one());
        auto G = build_field(5, 2);
        for (Elem a : G->elements())
            for (Elem b : G->elements()) CHECK(G->pow(G->add(a, b), 5) == G->add(G->pow(a, 5), G->pow(b, 5)));
    }

    TEST_CASE("generator has full order") {
        for (auto [p, k] : {std::pair{2u, 4u}, {3u, 2u}, {2u, 10u}}) {
            auto F = build_field(p, k);
            Elem g = F->generator();
            std::uint32_t ord = 1;
            for (Elem x = g; x.v != 1; x = F->mul(x, g)) ++ord;
            CHECK(ord == F->size() - 1);
        }
    }

    TEST_CASE("a non-primitive irreducible modulus still works") {
        // x^4 + x^3 + x^2 + x + 1 is irreducible over GF(2) but x has order 5.
        auto F = build_field(2, 4, std::vector<unsigned>{1, 1, 1, 1, 1});
        CHECK(F->size() == 16);
        for (Elem a : F->elements())
            if (a.v) CHECK(F->mul(a, F->inv(a)).v == 1);
    }

    TEST_CASE("errors") {
        auto F = build_field(2, 3);
        CHECK_THROWS_AS(F->inv(F->zero()), std::domain_error);
        CHECK_THROWS_AS(build_field(4, 1), std::invalid_argument);
        CHECK_THROWS_AS(build_field(2, 3, std::vector<unsigned>{1, 0, 0, 1}), std::invalid_argument);  // (x+1)(x^2+x+1)
        CHECK_THROWS_AS(build_field(2, 7), std::invalid_argument);  // no default
        CHECK_THROWS_AS(F->from_enc(8), std::out_of_range);
        auto G = build_field(2, 4);
        FieldValue a(F, Elem{3}), b(G, Elem{3});
        CHECK_THROWS_AS(a + b, std::invalid_argument);
        CHECK_THROWS_AS(FieldValue(F, F->zero()).inverse(), std::domain_error);
    }

    TEST_CASE("FieldValue operators") {
        auto F = build_field(3, 2);
        FieldValue a(F, Elem{4}), b(F, Elem{7});
        CHECK((a + b).elem() == F->add(Elem{4}, Elem{7}));
        CHECK((a * b / b) == a);
        CHECK((a - a).elem().v == 0);
        CHECK((-a + a).elem().v == 0);
        CHECK(a.pow(8).elem().v == 1);
    }

    TEST_CASE("irreducibility test") {
        CHECK(is_irreducible_mod_p(2, std::vector<unsigned>{1, 1, 1}));
        CHECK_FALSE(is_irreducible_mod_p(2, std::vector<unsigned>{1, 0, 1}));
        CHECK(is_irreducible_mod_p(3, std::vector<unsigned>{1, 0, 1}));
        CHECK_FALSE(is_irreducible_mod_p(5, std::vector<unsigned>{1, 0, 1}));
    }

    TEST_CASE("config file matches the built-in table") {
        auto file = ModuliTable::load(AGQC_DEFAULT_MODULI_FILE);
        CHECK(file.entries() == ModuliTable::builtin().entries());
        for (const auto& [key, mod] : file.entries()) {
            CHECK(mod.size() == key.second + 1);
            CHECK(mod.back() == 1);
            CHECK(is_irreducible_mod_p(key.first, mod));
        }
    }

    TEST_CASE("config parsing") {
        std::istringstream in("# comment\n\ngf(2,3) = 1 0 1 1\n");
        auto t = ModuliTable::parse(in);
        CHECK(t.at(2, 3) == std::vector<unsigned>{1, 0, 1, 1});
        std::istringstream bad("gf(2,3) = 1 0 x 1\n");
        CHECK_THROWS_AS(ModuliTable::parse(bad), std::invalid_argument);
        auto F = build_field(2, 3, std::nullopt, t);
        CHECK(F->spec().modulus == std::vector<unsigned>{1, 0, 1, 1});
        CHECK(F->modulus_hash() != build_field(2, 3)->modulus_hash());
    }
}
