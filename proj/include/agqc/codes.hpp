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

#ifndef AGQC_CODES_HPP
#define AGQC_CODES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "agqc/rr_basis.hpp"
#include "agqc/swiss.hpp"

namespace agqc {

/// C(D, G): evaluations of a basis of L(G) at the places of D.
struct EvaluationCode {
    Matrix generator;
    DivisorSpec divisor;
    std::vector<Monomial> basis;
    long genus = 0;

    std::size_t length() const { return generator.cols(); }
    std::size_t dimension() const { return generator.rows(); }
    const FieldPtr& field() const { return generator.field(); }
    long designed_distance() const { return static_cast<long>(length()) - divisor.degree(); }
    long designed_dual_distance() const { return divisor.degree() - 2 * genus + 2; }
};

/// Requires deg G < N. The generator rank is recomputed and must equal the
/// basis size.
EvaluationCode build_code(const SwissData& swiss, const DivisorSpec& G);

/// Every pair of generator rows, a row with itself included, has zero
/// Euclidean inner product. The empty code is self-orthogonal.
bool is_self_orthogonal(const Matrix& generator, unsigned jobs = 1);
inline bool is_self_orthogonal(const EvaluationCode& c, unsigned jobs = 1) { return is_self_orthogonal(c.generator, jobs); }

/// Full-rank (N - k) x N matrix spanning the Euclidean dual.
Matrix dual_code(const Matrix& generator);

struct WitnessReport {
    bool ok = false;
    long pole_bound = 0;          // largest pole order of w
    std::size_t witnesses = 0;
    std::size_t orthogonal = 0;
    std::size_t rank = 0;
    std::size_t dual_dimension = 0;
};

/// One-point families only. For every reduced monomial w with pole order at
/// most omega_coeff - s + deg M the vector (w / f'(t))(P), P in D, must be
/// orthogonal to C(D, sP); together these vectors must span the whole dual.
WitnessReport dual_membership_witnesses(const SwissData& swiss, const DivisorSpec& G);

enum class WeightMode { kExact, kSampled };

struct WeightResult {
    long weight = 0;  // 0 for the zero code
    WeightMode mode = WeightMode::kExact;
    std::uint64_t codewords = 0;  // examined
};

inline constexpr std::uint64_t kExactCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr std::uint64_t kDefaultSamples = 100000;

/// Exact mode walks one representative per projective point of the message
/// space (first nonzero coordinate one) in reflected Gray order, so each step
/// is one row update. Requires Q^k <= 2^24, else std::invalid_argument.
/// Sampled mode returns an upper bound from `samples` uniform messages.
WeightResult min_weight(const Matrix& generator, WeightMode mode, std::uint64_t seed = kDefaultSeed,
                        std::uint64_t samples = kDefaultSamples);

/// As above; exact mode on a code with deg G < N also asserts the designed
/// distance and throws std::logic_error if the bound is broken.
WeightResult min_weight(const EvaluationCode& code, WeightMode mode, std::uint64_t seed = kDefaultSeed,
                        std::uint64_t samples = kDefaultSamples);

std::string weight_mode_name(WeightMode m);

/// "p k_ext N k" then k rows of N enc integers.
void write_matrix(std::ostream& out, const Matrix& m);
Matrix read_matrix(std::istream& in, const ModuliTable& moduli = ModuliTable::builtin());

struct SweepRow {
    long s = 0;
    std::size_t dimension = 0;
    bool self_orthogonal = false;
};

/// One code is built at s_hi; for every s in [s_lo, s_hi] the code C(D, sG)
/// is the prefix of its basis with pole order <= s, and self-orthogonality is
/// read off the leading principal block of the Gram matrix.
std::vector<SweepRow> nested_sweep(const SwissData& swiss, long s_lo, long s_hi, unsigned jobs = 1);

}  // namespace agqc

#endif
