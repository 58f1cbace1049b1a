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

#include "agqc/quantum.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <ostream>

#include "agqc/parallel.hpp"

namespace agqc {

std::string_view to_string(DistanceKind k) {
    switch (k) {
        case DistanceKind::kLowerBound: return "lower-bound";
        case DistanceKind::kExact: return "exact";
        case DistanceKind::kAsPrinted: return "as-printed";
    }
    return "?";
}

std::string_view to_string(GvVerdict v) {
    switch (v) {
        case GvVerdict::kSatisfied: return "satisfied";
        case GvVerdict::kViolated: return "violated";
        case GvVerdict::kNotApplicable: return "not-applicable";
    }
    return "?";
}

std::string_view to_string(GvCertificate c) {
    switch (c) {
        case GvCertificate::kNone: return "none";
        case GvCertificate::kHypothesis: return "hypothesis";
        case GvCertificate::kDominantTerm: return "dominant-term";
        case GvCertificate::kFullSum: return "full-sum";
    }
    return "?";
}

QuantumCodeParams stabilizer_params(std::uint64_t alphabet, long N, long k_classical, long deg_G, long genus) {
    QuantumCodeParams p;
    p.alphabet = alphabet;
    p.N = N;
    p.k = N - 2 * k_classical;
    p.d = deg_G - 2 * genus + 2;
    p.pure = N - deg_G > k_classical + 1;
    return p;
}

QuantumCodeParams stabilizer_from_self_orthogonal(const EvaluationCode& code, unsigned jobs) {
    if (!is_self_orthogonal(code, jobs)) throw std::invalid_argument("code is not self-orthogonal");
    return stabilizer_params(code.field()->size(), static_cast<long>(code.length()),
                             static_cast<long>(code.dimension()), code.divisor.degree(), code.genus);
}

QuantumCodeParams css_params(const EvaluationCode& c1, const EvaluationCode& c2) {
    if (c1.length() != c2.length() || !rowspace_contains(c2.generator, c1.generator)) {
        throw std::invalid_argument("C1 is not contained in C2");
    }
    QuantumCodeParams p;
    p.alphabet = c1.field()->size();
    p.N = static_cast<long>(c1.length());
    p.k = static_cast<long>(c2.dimension()) - static_cast<long>(c1.dimension());
    p.d = std::min(p.N - c2.divisor.degree(), c1.divisor.degree() - (2 * c1.genus - 2));
    return p;
}

QuantumCodeParams t_point_params(long N, long genus, std::span<const long> a, std::span<const long> b) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("a and b need the same positive length");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) throw std::invalid_argument("a_i > b_i");
    const long sa = std::accumulate(a.begin(), a.end(), 0L);
    const long sb = std::accumulate(b.begin(), b.end(), 0L);
    if (!(2 * genus - 2 < sa && sa <= sb && sb < N)) throw std::invalid_argument("need 2g - 2 < sum a <= sum b < N");
    QuantumCodeParams p;
    p.N = N;
    p.k = sb - sa;
    p.d = std::min(N - sb, sa - (2 * genus - 2));
    return p;
}

namespace {

mpz_class qpow(std::uint64_t Q, unsigned long e) {
    mpz_class r;
    mpz_class base(static_cast<unsigned long>(Q));
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// sum_{i=1}^{d-1} (Q^2-1)^{i-1} C(N, i), stopping early once it reaches `cap`.
mpz_class gv_sum(std::uint64_t Q, long N, long d, const mpz_class& cap) {
    const mpz_class a = qpow(Q, 2) - 1;
    mpz_class term = N;
    mpz_class sum = 0;
    for (long i = 1; i <= d - 1; ++i) {
        sum += term;
        if (sum >= cap) break;
        term *= static_cast<unsigned long>(N - i);
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(i + 1));
        term *= a;
    }
    return sum;
}

}  // namespace

GvResult gv_check(std::uint64_t Q, long N, long k, long d, bool cross_check) {
    GvResult r;
    if (!(N > k && k >= 2 && d >= 2 && (N - k) % 2 == 0) || Q < 2) {
        r.certificate = GvCertificate::kHypothesis;
        return r;
    }
    const mpz_class a = qpow(Q, 2) - 1;
    mpz_class lhs = qpow(Q, static_cast<unsigned long>(N - k + 2)) - 1;
    mpz_divexact(lhs.get_mpz_t(), lhs.get_mpz_t(), a.get_mpz_t());

    if (d - 1 <= N) {
        mpz_class dom;
        mpz_bin_uiui(dom.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(d - 1));
        mpz_class ap;
        mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(d - 2));
        dom *= ap;
        if (dom >= lhs) {
            r.verdict = GvVerdict::kViolated;
            r.certificate = GvCertificate::kDominantTerm;
            if (cross_check) r.full_sum_agrees = gv_sum(Q, N, d, lhs) >= lhs;
            return r;
        }
    }
    r.certificate = GvCertificate::kFullSum;
    r.verdict = lhs > gv_sum(Q, N, d, lhs) ? GvVerdict::kSatisfied : GvVerdict::kViolated;
    return r;
}

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long closed_degree(const CurveDescriptor& desc, bool derivative) {
    auto e = closed_form_exponents(desc, derivative);
    if (!e) throw std::invalid_argument("no table for " + desc.label());
    return static_cast<long>(*std::max_element(e->begin(), e->end()));
}

long table_length(const CurveDescriptor& desc) {
    const long q = desc.q;
    if (desc.family == Family::GK) return ipow(q, 8) - ipow(q, 6) + ipow(q, 5);
    auto a = expected_A_size(desc);
    if (!a) throw std::invalid_argument("no table for " + desc.label());
    return *a * desc.fiber_size();
}

void require_ggk2_table(const CurveDescriptor& desc) {
    if (desc.family == Family::GGK2 && !(desc.q == 2 && (desc.n == 3 || desc.n == 5))) {
        throw std::invalid_argument("GGK2 tables exist for q = 2, n in {3, 5}");
    }
}

}  // namespace

long gv_corollary_start(long q) { return 7 * ipow(q, 5) - 14 * ipow(q, 3) + 7 * q * q + 12; }

std::pair<long, long> theorem_range(const CurveDescriptor& desc) {
    require_ggk2_table(desc);
    const long q = desc.q;
    if (desc.family == Family::GK) {
        return {ipow(q, 5) - 2 * ipow(q, 3) + q * q - 2,
                (ipow(q, 7) - ipow(q, 6) + ipow(q, 5) + ipow(q, 4) - 2 * ipow(q, 3) + q * q - 2) / 2};
    }
    const long r = desc.infinity.count;
    const long base = (2 * desc.genus - 2) / r;
    const long omega = (closed_degree(desc, false) - closed_degree(desc, true)) * desc.fiber_pole_order() + base;
    return {base, omega / 2};
}

std::vector<TableRow> theorem_table(const CurveDescriptor& desc, const TableOptions& opt) {
    auto [lo, hi] = theorem_range(desc);
    if (opt.s_lo) lo = std::max(lo, *opt.s_lo);
    if (opt.s_hi) hi = std::min(hi, *opt.s_hi);
    if (lo > hi) return {};

    const long q = desc.q;
    const long N = table_length(desc);
    const long canon = 2 * desc.genus - 2;
    const std::uint64_t Q = desc.field_size();
    std::vector<TableRow> rows(static_cast<std::size_t>(hi - lo + 1));
    for (long s = lo; s <= hi; ++s) {
        TableRow& row = rows[static_cast<std::size_t>(s - lo)];
        row.s = s;
        row.deg_G = s * desc.infinity.count;
        QuantumCodeParams& p = row.params;
        p.alphabet = Q;
        p.N = N;
        switch (desc.family) {
            case Family::GK:
                p.k = ipow(q, 8) - ipow(q, 6) + 2 * ipow(q, 5) - 2 * ipow(q, 3) + q * q - 2 - 2 * s;
                p.d = s - ipow(q, 5) + 2 * ipow(q, 3) - q * q + 2;
                break;
            case Family::GGS:
            case Family::ABQ:
                p.k = N + canon - 2 * s;
                p.d = s - canon;
                break;
            case Family::GGK2:
                if (desc.n == 3) {
                    p.k = s == 6 ? 196 : 192 - 6 * (s - 7);
                    p.d = 3 * s - 18;
                } else {
                    p.k = s == 30 ? 3868 : 3864 - 6 * (s - 31);
                    p.d = 3 * s - 90;
                }
                p.d_kind = DistanceKind::kAsPrinted;
                break;
        }
        const long k_classical = (N - p.k) / 2;
        p.pure = N - row.deg_G > k_classical + 1;
    }
    if (opt.gv) {
        parallel_for(rows.size(), opt.jobs, [&](std::size_t b, std::size_t e, std::size_t) {
            for (std::size_t i = b; i < e; ++i) {
                auto& p = rows[i].params;
                p.gv = gv_check(p.alphabet, p.N, p.k, p.d, opt.gv_cross_check);
            }
        });
    }
    return rows;
}

std::vector<RowMismatch> verify_table(const SwissData& swiss, const std::vector<TableRow>& rows, unsigned jobs) {
    std::vector<RowMismatch> out;
    if (rows.empty()) return out;
    const auto& desc = swiss.desc;
    auto sweep = nested_sweep(swiss, rows.front().s, rows.back().s, jobs);
    for (const auto& row : rows) {
        const auto& sw = sweep[static_cast<std::size_t>(row.s - rows.front().s)];
        const auto& p = row.params;
        if (!sw.self_orthogonal) {
            out.push_back({row.s, "not self-orthogonal"});
            continue;
        }
        auto built = stabilizer_params(swiss.field->size(), swiss.deg_D, static_cast<long>(sw.dimension), row.deg_G,
                                       desc.genus);
        if (built.N != p.N) out.push_back({row.s, "N " + std::to_string(p.N) + " vs built " + std::to_string(built.N)});
        if (built.k != p.k) out.push_back({row.s, "k " + std::to_string(p.k) + " vs built " + std::to_string(built.k)});
        if (p.d > built.d) {
            out.push_back({row.s, "d " + std::to_string(p.d) + " exceeds built bound " + std::to_string(built.d)});
        }
        if (built.pure != p.pure) out.push_back({row.s, "purity flag differs from the built code"});
    }
    return out;
}

std::vector<std::string> table_notes(const CurveDescriptor& desc) {
    std::vector<std::string> notes;
    if (desc.family != Family::GGK2) return notes;
    if (desc.q == 2 && desc.n == 3) {
        notes.emplace_back("note: the GGK2(2,3) table is also labeled GGK2(2,6) after its field GF(2^6)");
        notes.emplace_back("note: d = 3m - 18 is emitted as printed; it is 0 at m = 6");
    } else if (desc.q == 2 && desc.n == 5) {
        notes.emplace_back("note: the GGK2(2,5) table is also labeled GGK2(2,10) after its field GF(2^10)");
        notes.emplace_back("note: d = 3m - 90 is emitted as printed");
    }
    return notes;
}

void write_csv_header(std::ostream& out) {
    out << "family,q,n,s,N,k,d_bound,d_kind,pure,singleton_defect,gv_verdict,gv_certificate\n";
}

void write_csv_row(std::ostream& out, const CurveDescriptor& desc, const TableRow& row) {
    const auto& p = row.params;
    out << family_name(desc.family) << ',' << desc.q << ',' << desc.n << ',' << row.s << ',' << p.N << ',' << p.k << ','
        << p.d << ',' << to_string(p.d_kind) << ',' << (p.pure ? "true" : "false") << ',' << p.singleton_defect() << ',';
    if (p.gv) {
        out << to_string(p.gv->verdict) << ',' << to_string(p.gv->certificate);
    } else {
        out << "unchecked,none";
    }
    out << '\n';
}

}  // namespace agqc
