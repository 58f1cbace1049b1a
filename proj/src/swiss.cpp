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

#include "agqc/swiss.hpp"

#include <algorithm>
#include <map>

namespace agqc {

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Poly sparse_ones(const FieldPtr& F, const std::vector<std::size_t>& exps) {
    std::vector<std::pair<std::size_t, Elem>> terms;
    for (std::size_t e : exps) terms.emplace_back(e, F->one());
    return Poly::from_terms(F, terms);
}

std::string elems_text(const std::vector<Elem>& v, std::size_t limit = 8) {
    std::string s;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? " " : "") + std::to_string(v[i].v);
    if (v.size() > limit) s += " ...";
    return s;
}

}  // namespace

std::vector<Elem> a_set_from_fibers(const CurveDescriptor& desc, const Field& F, const std::vector<AffinePlace>& places) {
    std::vector<long> counts(F.size(), 0);
    for (const auto& P : places) ++counts[P.c[desc.fiber_coord].v];
    const long full = desc.fiber_size();
    std::vector<Elem> out;
    for (std::uint32_t a = 0; a < F.size(); ++a) {
        if (counts[a] > full) throw VerificationFailure("fiber larger than the degree of the fibering coordinate");
        if (counts[a] == full && !(desc.family == Family::GGK2 && a == 0)) out.push_back(Elem{a});
    }
    return out;
}

std::vector<Elem> a_set_from_condition(const CurveDescriptor& desc, const Field& F) {
    const auto q = static_cast<std::uint64_t>(desc.q);
    const auto m = static_cast<std::uint64_t>(desc.m);
    std::vector<Elem> out;
    switch (desc.family) {
        case Family::GK:
            for (Elem xi : F.elements()) {
                Elem t = F.pow(xi, m);
                Elem s = F.add(F.add(F.pow(t, q * q * q * q), F.pow(t, q * q)), t);
                if (s.v == 0) out.push_back(xi);
            }
            break;
        case Family::GGS:
        case Family::ABQ:
            for (Elem xi : F.elements()) {
                Elem t = F.pow(xi, m);
                Elem s{0};
                for (int i = 0; i < desc.n; ++i) {
                    s = F.add(s, t);
                    t = F.pow(t, q * q);
                }
                if (s.v == 0) out.push_back(xi);
            }
            break;
        case Family::GGK2: {
            if (desc.q != 2) throw std::invalid_argument("the GGK2 membership condition is only available for q = 2");
            std::vector<int> roots(F.size(), 0);
            for (Elem y : F.elements()) ++roots[F.add(F.pow(y, 6), F.pow(y, 3)).v];
            const std::uint64_t e = upow(2, desc.n) + 1;
            for (Elem a : F.elements()) {
                if (a.v == 0) continue;
                if (roots[F.pow(a, e).v] == 6) out.push_back(a);
            }
            break;
        }
    }
    return out;
}

std::vector<Elem> compute_A_set(const CurveDescriptor& desc, const Field& F, const std::vector<AffinePlace>& places) {
    auto by_fibers = a_set_from_fibers(desc, F, places);
    auto by_condition = a_set_from_condition(desc, F);
    if (by_fibers != by_condition) {
        throw VerificationFailure(desc.label() + ": A-set methods disagree (fibers: " + std::to_string(by_fibers.size()) +
                                  " values [" + elems_text(by_fibers) + "], condition: " +
                                  std::to_string(by_condition.size()) + " values [" + elems_text(by_condition) + "])");
    }
    return by_fibers;
}

std::optional<long> expected_A_size(const CurveDescriptor& d) {
    const auto q = static_cast<long>(d.q);
    auto p = [&](int e) { return static_cast<long>(upow(static_cast<std::uint64_t>(q), e)); };
    switch (d.family) {
        case Family::GK: return p(5) - p(3) + p(2);
        case Family::GGS:
        case Family::ABQ: return p(2 * d.n - 1) - p(d.n) + p(d.n - 1);
        case Family::GGK2:
            if (q != 2) return std::nullopt;
            return 4 * (p(d.n) + 1) * (p(d.n - 1) - 1) / 3;
    }
    return std::nullopt;
}

SwissData build_swiss_data(const CurveDescriptor& desc, FieldPtr field, const std::vector<AffinePlace>& places) {
    const Field& F = *field;
    SwissData sw;
    sw.desc = desc;
    sw.field = field;
    sw.a_set = compute_A_set(desc, F, places);
    sw.f = Poly::from_roots(field, sw.a_set);
    sw.f_prime = sw.f.derivative();
    if (gcd(sw.f, sw.f_prime).degree() != 0) throw VerificationFailure(desc.label() + ": f has a repeated root");

    std::vector<bool> in_a(F.size(), false);
    for (Elem a : sw.a_set) in_a[a.v] = true;
    for (const auto& P : places)
        if (in_a[P.c[desc.fiber_coord].v]) sw.d_places.push_back(P);
    sw.deg_D = static_cast<long>(sw.d_places.size());
    if (sw.deg_D != static_cast<long>(sw.a_set.size()) * desc.fiber_size()) {
        throw VerificationFailure(desc.label() + ": deg D does not equal |A| times the fiber size");
    }

    const long r = desc.infinity.count;
    const long pole = desc.fiber_pole_order();
    const long canon = 2 * desc.genus - 2;
    if (canon % r != 0) throw VerificationFailure(desc.label() + ": non-integral omega coefficient");
    sw.deg_M = sw.f_prime.degree() * pole * r;
    for (const auto& po : desc.infinity.pole_orders) {
        sw.omega_coeff.push_back((sw.f.degree() - sw.f_prime.degree()) * po[desc.fiber_coord] + canon / r);
    }
    if (std::adjacent_find(sw.omega_coeff.begin(), sw.omega_coeff.end(), std::not_equal_to<>()) != sw.omega_coeff.end()) {
        throw VerificationFailure(desc.label() + ": omega coefficients differ across infinite places");
    }
    long total = 0;
    for (long c : sw.omega_coeff) total += c;
    if (sw.deg_M - sw.deg_D + total - canon != 0) {
        throw VerificationFailure(desc.label() + ": principal divisor of f'(t)/f(t) has nonzero degree");
    }
    sw.s_min = canon / r;
    sw.s_max = sw.omega_coeff.front() / 2;
    return sw;
}

CheckReport simple_zero_certificate(const SwissData& sw, const std::vector<AffinePlace>& all_places) {
    const Field& F = *sw.field;
    std::vector<long> counts(F.size(), 0);
    for (const auto& P : all_places) ++counts[P.c[sw.desc.fiber_coord].v];
    const long full = sw.desc.fiber_size();
    for (Elem a : sw.a_set) {
        if (counts[a.v] != full) {
            return {false, "value " + std::to_string(a.v) + " has " + std::to_string(counts[a.v]) + " places, expected " +
                               std::to_string(full)};
        }
    }
    if (gcd(sw.f, sw.f_prime).degree() != 0) return {false, "gcd(f, f') is not 1"};
    return {true, std::to_string(sw.a_set.size()) + " values, each with " + std::to_string(full) +
                      " simple zeros; gcd(f, f') = 1"};
}

std::optional<std::vector<std::size_t>> closed_form_exponents(const CurveDescriptor& d, bool derivative) {
    const auto q = static_cast<std::uint64_t>(d.q);
    using V = std::vector<std::size_t>;
    switch (d.family) {
        case Family::GK:
            if (derivative) return V{upow(q, 5) - upow(q, 4) + upow(q, 2) - q, 0};
            return V{upow(q, 5) - upow(q, 3) + upow(q, 2), upow(q, 5) - upow(q, 4) + upow(q, 2) - q + 1, 1};
        case Family::GGS:
        case Family::ABQ: {
            // f(Z) = Z * p(Z^{(q^n+1)(q-1)}), p the separable polynomial with k = (n-1)/2.
            // Terms of f whose exponent is 0 mod p drop out of f'.
            const int k = (d.n - 1) / 2;
            const std::uint64_t scale = (upow(q, d.n) + 1) * (q - 1);
            std::uint64_t odd_sum = 0;
            for (int j = 0; j < k; ++j) odd_sum += upow(q, 2 * j + 1);
            V f{1}, fp{0};
            std::uint64_t even_partial = 0, odd_partial = 0;
            for (int i = 0; i < k; ++i) {
                even_partial += upow(q, 2 * i);
                odd_partial += upow(q, 2 * i + 1);
                f.push_back(1 + (even_partial + odd_sum) * scale);
                f.push_back(1 + odd_partial * scale);
                fp.push_back(odd_partial * scale);
            }
            return derivative ? fp : f;
        }
        case Family::GGK2:
            if (d.q != 2) return std::nullopt;
            if (d.n == 3) return derivative ? V{26} : V{36, 27, 18, 0};
            if (d.n == 5) {
                if (derivative) return V{626, 494, 362};
                return V{660, 627, 594, 528, 495, 396, 363, 330, 132, 66, 0};
            }
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Poly> closed_form_f(const CurveDescriptor& d, const FieldPtr& field) {
    auto e = closed_form_exponents(d, false);
    if (!e) return std::nullopt;
    return sparse_ones(field, *e);
}

std::optional<Poly> closed_form_f_prime(const CurveDescriptor& d, const FieldPtr& field) {
    auto e = closed_form_exponents(d, true);
    if (!e) return std::nullopt;
    return sparse_ones(field, *e);
}

CheckReport closed_form_check(const SwissData& sw) {
    auto f = closed_form_f(sw.desc, sw.field);
    auto fp = closed_form_f_prime(sw.desc, sw.field);
    if (!f || !fp) return {true, "no closed form for " + sw.desc.label()};
    if (!(*f == sw.f)) return {false, "f differs from the closed form"};
    if (!(*fp == sw.f_prime)) return {false, "f' differs from the closed form"};
    return {true, "f and f' match the closed forms"};
}

}  // namespace agqc
