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

#include <random>

#include "agqc/linalg.hpp"
#include "doctest.h"

using namespace agqc;

namespace {

Matrix random_matrix(const FieldPtr& F, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
    Matrix m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, (zero_bias && rng() % zero_bias) ? Elem{0} : Elem{static_cast<std::uint32_t>(rng() % F->size())});
    return m;
}

}  // namespace

TEST_SUITE("linalg") {
    TEST_CASE("rref of a small matrix") {
        auto F = build_field(3, 1);
        Matrix m(F, 3, 3);
        // rows (1 2 0), (2 1 0), (0 0 1): first two are dependent mod 3
        unsigned v[3][3] = {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.set(i, j, Elem{v[i][j]});
        auto e = rref(m);
        CHECK(e.pivots == std::vector<std::size_t>{0, 2});
        CHECK(rank(m) == 2);
        auto ns = nullspace(m);
        CHECK(ns.rows() == 1);
        CHECK(ns.at(0, 0).v == 1);
        CHECK(ns.at(0, 1).v == 1);  // x + 2y = 0 -> (1, 1, 0)
        CHECK(ns.at(0, 2).v == 0);
    }

    TEST_CASE("rank-nullity and orthogonality, seeded") {
        std::mt19937_64 rng(5);
        for (auto [p, k] : {std::pair{2u, 6u}, {3u, 2u}, {2u, 1u}}) {
            auto F = build_field(p, k);
            for (int t = 0; t < 30; ++t) {
                std::size_t r = 1 + rng() % 12, c = 1 + rng() % 16;
                Matrix m = random_matrix(F, r, c, rng, t % 3 ? 0 : 3);
                Matrix ns = nullspace(m);
                CHECK(rank(m) + ns.rows() == c);
                CHECK(rank(ns) == ns.rows());
                CHECK(is_zero(gram(m, ns)));
                CHECK(rank(nullspace(ns)) == rank(m));
                CHECK(rowspace_contains(nullspace(ns), m));
            }
        }
    }

    TEST_CASE("incremental echelon agrees with rank") {
        std::mt19937_64 rng(9);
        auto F = build_field(2, 4);
        for (int t = 0; t < 20; ++t) {
            Matrix m = random_matrix(F, 20, 10, rng, 2);
            IncrementalEchelon inc(F, 10);
            Matrix kept(F, 0, 10);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                bool ind = inc.is_independent(m.row(i));
                CHECK(ind == inc.try_add(m.row(i)));
                if (ind) kept.append_row(m.row(i));
                CHECK(inc.rank() == rank(m.top(i + 1)));
            }
            CHECK(rowspace_contains(kept, m));
        }
    }

    TEST_CASE("gram is parallel-invariant") {
        std::mt19937_64 rng(1);
        auto F = build_field(2, 6);
        Matrix a = random_matrix(F, 17, 40, rng), b = random_matrix(F, 9, 40, rng);
        CHECK(gram(a, b, 1) == gram(a, b, 4));
        CHECK(vstack(a, b).rows() == 26);
    }
}
