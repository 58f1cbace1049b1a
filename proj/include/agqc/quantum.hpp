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

#ifndef AGQC_QUANTUM_HPP
#define AGQC_QUANTUM_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agqc/codes.hpp"

namespace agqc {

enum class DistanceKind { kLowerBound, kExact, kAsPrinted };
enum class GvVerdict { kSatisfied, kViolated, kNotApplicable };
enum class GvCertificate { kNone, kHypothesis, kDominantTerm, kFullSum };

std::string_view to_string(DistanceKind k);
std::string_view to_string(GvVerdict v);
std::string_view to_string(GvCertificate c);

struct GvResult {
    GvVerdict verdict = GvVerdict::kNotApplicable;
    GvCertificate certificate = GvCertificate::kNone;
    /// Set when the full sum was evaluated alongside a dominant-term verdict.
    std::optional<bool> full_sum_agrees;
};

/// [[N, k, d]] over an alphabet of size Q.
struct QuantumCodeParams {
    std::uint64_t alphabet = 0;
    long N = 0;
    long k = 0;
    long d = 0;
    DistanceKind d_kind = DistanceKind::kLowerBound;
    bool pure = false;
    std::optional<GvResult> gv;

    long singleton_defect() const { return N - k - 2 * d + 2; }
    double relative_defect() const { return N ? static_cast<double>(singleton_defect()) / N : 0.0; }
};

/// Arithmetic core of the stabilizer construction from a self-orthogonal
/// [N, k_classical] evaluation code with divisor degree deg_G.
QuantumCodeParams stabilizer_params(std::uint64_t alphabet, long N, long k_classical, long deg_G, long genus);

/// [[N, N - 2k, >= deg G - 2g + 2]]; pure iff N - deg G > k + 1.
/// Throws std::invalid_argument if the code is not self-orthogonal.
QuantumCodeParams stabilizer_from_self_orthogonal(const EvaluationCode& code, unsigned jobs = 1);

/// [[N, k2 - k1, >= min(N - deg G2, deg G1 - (2g - 2))]] for C1 inside C2;
/// containment is checked exactly and its failure throws std::invalid_argument.
QuantumCodeParams css_params(const EvaluationCode& c1, const EvaluationCode& c2);

/// Pure arithmetic t-point construction. Requires a_i <= b_i, equal list
/// lengths and 2g - 2 < sum a <= sum b < N.
QuantumCodeParams t_point_params(long N, long genus, std::span<const long> a, std::span<const long> b);

/// (Q^{N-k+2} - 1)/(Q^2 - 1) > sum_{i=1}^{d-1} (Q^2 - 1)^{i-1} C(N, i), exactly.
/// The single term i = d - 1 is tried first; if it already reaches the left
/// side the verdict is "violated" without the full sum. With cross_check the
/// full sum is evaluated as well and its agreement recorded.
GvResult gv_check(std::uint64_t Q, long N, long k, long d, bool cross_check = false);

struct TableRow {
    long s = 0;  // m for GGK2
    QuantumCodeParams params;
    long deg_G = 0;
};

struct TableOptions {
    std::optional<long> s_lo;
    std::optional<long> s_hi;
    bool gv = false;
    bool gv_cross_check = false;
    unsigned jobs = 1;
};

/// Admissible s range of the theorem for this instance.
std::pair<long, long> theorem_range(const CurveDescriptor& desc);
/// First s of the GV corollary regime, 7q^5 - 14q^3 + 7q^2 + 12 (GK only).
long gv_corollary_start(long q);

/// Rows from closed formulas only; nothing is constructed. GGK2 needs q = 2
/// and n in {3, 5}.
std::vector<TableRow> theorem_table(const CurveDescriptor& desc, const TableOptions& opt = {});

struct RowMismatch {
    long s = 0;
    std::string what;
};

/// Builds C(D, sG) for every row (one nested build), checks self-orthogonality
/// and compares N, k and the distance bound with the stabilizer parameters of
/// the constructed code.
std::vector<RowMismatch> verify_table(const SwissData& swiss, const std::vector<TableRow>& rows, unsigned jobs = 1);

/// Lines of notes about the instance's printed tables (stderr material).
std::vector<std::string> table_notes(const CurveDescriptor& desc);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const CurveDescriptor& desc, const TableRow& row);

}  // namespace agqc

#endif
