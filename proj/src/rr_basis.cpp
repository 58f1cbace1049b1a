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

#include "agqc/rr_basis.hpp"

#include <algorithm>

namespace agqc {

DivisorSpec divisor_for(const CurveDescriptor& desc, long s) {
    if (s < 0) throw std::invalid_argument("s must be nonnegative");
    return {s, desc.infinity.count};
}

std::vector<long> pole_orders(const CurveDescriptor& desc, const std::array<long, 3>& exp) {
    std::vector<long> out;
    for (const auto& po : desc.infinity.pole_orders) out.push_back(exp[0] * po[0] + exp[1] * po[1] + exp[2] * po[2]);
    return out;
}

std::vector<Monomial> candidate_monomials(const CurveDescriptor& desc, const DivisorSpec& G) {
    std::array<long, 3> bound{0, 0, 0};
    for (int c : desc.tower) {
        long min_pole = desc.infinity.pole_orders.front()[c];
        for (const auto& po : desc.infinity.pole_orders) min_pole = std::min(min_pole, po[c]);
        long b = G.s / min_pole;
        if (desc.exp_bound[c] >= 0) b = std::min(b, desc.exp_bound[c]);
        bound[c] = b;
    }

    std::vector<Monomial> out;
    std::array<long, 3> e{0, 0, 0};
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == desc.tower.size()) {
            auto poles = pole_orders(desc, e);
            long mx = *std::max_element(poles.begin(), poles.end());
            if (mx <= G.s) out.push_back({e, mx});
            return;
        }
        int c = desc.tower[level];
        for (long v = 0; v <= bound[c]; ++v) {
            e[c] = v;
            self(self, level + 1);
        }
        e[c] = 0;
    };
    rec(rec, 0);

    auto key = [&](const Monomial& mo) {
        std::array<long, 4> k{mo.pole, 0, 0, 0};
        for (std::size_t i = 0; i < desc.tower.size(); ++i) k[i + 1] = mo.exp[desc.tower[i]];
        return k;
    };
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return key(a) < key(b); });

    if (desc.infinity.count == 1) {
        for (std::size_t i = 1; i < out.size(); ++i) {
            if (out[i].pole == out[i - 1].pole) {
                throw std::logic_error("two reduced monomials share pole order " + std::to_string(out[i].pole));
            }
        }
    }
    return out;
}

std::string monomial_text(const Monomial& mono) {
    static constexpr char kName[3] = {'x', 'y', 'z'};
    std::string s;
    for (int c = 0; c < 3; ++c) {
        if (mono.exp[c] == 0) continue;
        if (!s.empty()) s += '*';
        s += kName[c];
        if (mono.exp[c] > 1) s += '^' + std::to_string(mono.exp[c]);
    }
    return s.empty() ? "1" : s;
}

MonomialEvaluator::MonomialEvaluator(FieldPtr field, std::span<const AffinePlace> places)
    : field_(std::move(field)), count_(places.size()) {
    for (int c = 0; c < 3; ++c) {
        logs_[c].resize(count_);
        for (std::size_t i = 0; i < count_; ++i) {
            Elem v = places[i].c[c];
            logs_[c][i] = v.v == 0 ? Field::kNoLog : field_->log(v);
        }
    }
}

std::vector<Elem> MonomialEvaluator::evaluate(const Monomial& mono) const {
    const Field& F = *field_;
    const std::uint64_t order = F.size() - 1;
    std::vector<Elem> out(count_);
    for (std::size_t i = 0; i < count_; ++i) {
        std::uint64_t acc = 0;
        bool zero = false;
        for (int c = 0; c < 3; ++c) {
            if (mono.exp[c] == 0) continue;
            std::uint32_t l = logs_[c][i];
            if (l == Field::kNoLog) {
                zero = true;
                break;
            }
            acc = (acc + static_cast<std::uint64_t>(l) * static_cast<std::uint64_t>(mono.exp[c])) % order;
        }
        out[i] = zero ? F.zero() : F.exp(acc);
    }
    return out;
}

BasisSelection select_basis(const CurveDescriptor& desc, FieldPtr field, const DivisorSpec& G,
                            std::span<const AffinePlace> places) {
    if (G.degree() >= static_cast<long>(places.size())) {
        throw std::invalid_argument("deg G = " + std::to_string(G.degree()) + " must be below the number of places (" +
                                    std::to_string(places.size()) + ")");
    }
    MonomialEvaluator ev(field, places);
    IncrementalEchelon ech(field, places.size());
    BasisSelection sel{G, {}, Matrix(field, 0, places.size())};
    for (const Monomial& mono : candidate_monomials(desc, G)) {
        auto v = ev.evaluate(mono);
        if (ech.try_add(v)) {
            sel.basis.push_back(mono);
            sel.generator.append_row(v);
        }
    }
    if (G.degree() > 2 * desc.genus - 2) {
        const long want = G.degree() + 1 - desc.genus;
        if (static_cast<long>(sel.basis.size()) != want) {
            throw BasisShortfall(desc.label() + ": rank " + std::to_string(sel.basis.size()) + " at s = " +
                                 std::to_string(G.s) + ", expected " + std::to_string(want));
        }
    }
    return sel;
}

std::size_t prefix_dimension(const BasisSelection& sel, long s) {
    return static_cast<std::size_t>(
        std::count_if(sel.basis.begin(), sel.basis.end(), [&](const Monomial& m) { return m.pole <= s; }));
}

}  // namespace agqc
