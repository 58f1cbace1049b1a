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

#include "agqc/codes.hpp"

#include <atomic>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "agqc/parallel.hpp"

namespace agqc {

EvaluationCode build_code(const SwissData& swiss, const DivisorSpec& G) {
    auto sel = select_basis(swiss.desc, swiss.field, G, swiss.d_places);
    if (rank(sel.generator) != sel.basis.size()) throw std::logic_error("generator rows are dependent");
    return EvaluationCode{std::move(sel.generator), G, std::move(sel.basis), swiss.desc.genus};
}

bool is_self_orthogonal(const Matrix& g, unsigned jobs) {
    const Field& F = *g.field();
    std::atomic<bool> ok{true};
    parallel_for(g.rows(), jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t i = begin; i < end && ok.load(std::memory_order_relaxed); ++i) {
            for (std::size_t j = i; j < g.rows(); ++j) {
                if (dot(F, g.row(i), g.row(j)).v != 0) {
                    ok = false;
                    return;
                }
            }
        }
    });
    return ok;
}

Matrix dual_code(const Matrix& generator) { return nullspace(generator); }

WitnessReport dual_membership_witnesses(const SwissData& swiss, const DivisorSpec& G) {
    const auto& desc = swiss.desc;
    if (desc.infinity.count != 1) throw std::invalid_argument("dual witnesses need a one-point family");
    const Field& F = *swiss.field;
    auto code = build_code(swiss, G);

    WitnessReport rep;
    rep.pole_bound = swiss.omega_coeff.front() - G.s + swiss.deg_M;
    rep.dual_dimension = code.length() - code.dimension();

    std::vector<Elem> inv_fp;
    inv_fp.reserve(swiss.d_places.size());
    for (const auto& P : swiss.d_places) inv_fp.push_back(F.inv(swiss.f_prime.eval(P.c[desc.fiber_coord])));

    MonomialEvaluator ev(swiss.field, swiss.d_places);
    IncrementalEchelon span(swiss.field, code.length());
    for (const Monomial& w : candidate_monomials(desc, {rep.pole_bound, 1})) {
        auto v = ev.evaluate(w);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.mul(v[i], inv_fp[i]);
        ++rep.witnesses;
        bool orth = true;
        for (std::size_t r = 0; r < code.dimension() && orth; ++r) orth = dot(F, code.generator.row(r), v).v == 0;
        if (orth) ++rep.orthogonal;
        span.try_add(v);
    }
    rep.rank = span.rank();
    rep.ok = rep.orthogonal == rep.witnesses && rep.rank == rep.dual_dimension;
    return rep;
}

namespace {

long weight_of(const std::vector<Elem>& c) {
    long w = 0;
    for (Elem e : c) w += e.v != 0;
    return w;
}

WeightResult exact_min_weight(const Matrix& g) {
    const Field& F = *g.field();
    const std::size_t k = g.rows();
    const std::uint64_t Q = F.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > kExactCap / Q) throw std::invalid_argument("exact enumeration beyond 2^24 codewords");
        total *= Q;
    }
    WeightResult res{0, WeightMode::kExact, 0};
    if (k == 0) return res;
    long best = static_cast<long>(g.cols()) + 1;
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::vector<Elem> c(g.row(lead).begin(), g.row(lead).end());
        const std::size_t t = k - 1 - lead;
        std::vector<std::uint32_t> digit(t, 0);
        std::vector<int> dir(t, 1);
        for (;;) {
            best = std::min(best, weight_of(c));
            ++res.codewords;
            std::size_t j = 0;
            std::int64_t nd = 0;
            for (; j < t; ++j) {
                nd = static_cast<std::int64_t>(digit[j]) + dir[j];
                if (nd >= 0 && nd < static_cast<std::int64_t>(Q)) break;
                dir[j] = -dir[j];
            }
            if (j == t) break;
            Elem delta = F.sub(Elem{static_cast<std::uint32_t>(nd)}, Elem{digit[j]});
            digit[j] = static_cast<std::uint32_t>(nd);
            axpy(F, delta, g.row(lead + 1 + j), c);
        }
    }
    res.weight = best;
    return res;
}

WeightResult sampled_min_weight(const Matrix& g, std::uint64_t seed, std::uint64_t samples) {
    const Field& F = *g.field();
    WeightResult res{0, WeightMode::kSampled, 0};
    if (g.rows() == 0) return res;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.size() - 1));
    long best = static_cast<long>(g.cols()) + 1;
    std::vector<Elem> msg(g.rows());
    std::vector<Elem> c(g.cols());
    while (res.codewords < samples) {
        bool nonzero = false;
        for (auto& e : msg) {
            e = Elem{pick(rng)};
            nonzero |= e.v != 0;
        }
        if (!nonzero) continue;
        std::fill(c.begin(), c.end(), F.zero());
        for (std::size_t i = 0; i < g.rows(); ++i)
            if (msg[i].v != 0) axpy(F, msg[i], g.row(i), c);
        best = std::min(best, weight_of(c));
        ++res.codewords;
    }
    res.weight = best;
    return res;
}

}  // namespace

WeightResult min_weight(const Matrix& generator, WeightMode mode, std::uint64_t seed, std::uint64_t samples) {
    return mode == WeightMode::kExact ? exact_min_weight(generator) : sampled_min_weight(generator, seed, samples);
}

WeightResult min_weight(const EvaluationCode& code, WeightMode mode, std::uint64_t seed, std::uint64_t samples) {
    auto res = min_weight(code.generator, mode, seed, samples);
    if (mode == WeightMode::kExact && code.dimension() > 0 && code.divisor.degree() < static_cast<long>(code.length()) &&
        res.weight < code.designed_distance()) {
        throw std::logic_error("minimum weight " + std::to_string(res.weight) + " below designed distance " +
                               std::to_string(code.designed_distance()));
    }
    return res;
}

std::string weight_mode_name(WeightMode m) { return m == WeightMode::kExact ? "exact" : "sampled"; }

void write_matrix(std::ostream& out, const Matrix& m) {
    const auto& spec = m.field()->spec();
    out << spec.p << ' ' << spec.k << ' ' << m.cols() << ' ' << m.rows() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j).v;
        out << '\n';
    }
}

Matrix read_matrix(std::istream& in, const ModuliTable& moduli) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("matrix file: missing header");
    std::istringstream hs(line);
    unsigned p = 0, k_ext = 0;
    std::size_t n = 0, k = 0;
    if (!(hs >> p >> k_ext >> n >> k)) throw std::invalid_argument("matrix file: malformed header");
    auto F = build_field(p, k_ext, std::nullopt, moduli);
    Matrix m(F, k, n);
    for (std::size_t i = 0; i < k; ++i) {
        if (!std::getline(in, line)) throw std::invalid_argument("matrix file: missing row " + std::to_string(i));
        std::istringstream rs(line);
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t v = 0;
            if (!(rs >> v)) throw std::invalid_argument("matrix file: short row " + std::to_string(i));
            if (v >= F->size()) throw std::out_of_range("matrix file: entry outside the field");
            m.set(i, j, Elem{static_cast<std::uint32_t>(v)});
        }
        std::string extra;
        if (rs >> extra) throw std::invalid_argument("matrix file: long row " + std::to_string(i));
    }
    return m;
}

std::vector<SweepRow> nested_sweep(const SwissData& swiss, long s_lo, long s_hi, unsigned jobs) {
    if (s_lo > s_hi) return {};
    auto code = build_code(swiss, divisor_for(swiss.desc, s_hi));
    Matrix gm = gram(code.generator, code.generator, jobs);
    // Smallest prefix size whose leading principal block of the Gram matrix is nonzero.
    std::size_t bad_from = code.dimension() + 1;
    for (std::size_t i = 0; i < gm.rows() && bad_from > code.dimension(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (gm.at(i, j).v != 0) {
                bad_from = i + 1;
                break;
            }
    BasisSelection sel{code.divisor, code.basis, code.generator};
    std::vector<SweepRow> rows;
    for (long s = s_lo; s <= s_hi; ++s) {
        std::size_t dim = prefix_dimension(sel, s);
        rows.push_back({s, dim, dim < bad_from});
    }
    return rows;
}

}  // namespace agqc
