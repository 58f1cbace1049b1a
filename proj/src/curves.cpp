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

#include "agqc/curves.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>

#include "agqc/parallel.hpp"

namespace agqc {

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// Preimages of a map F -> F in compressed-row form, indexed by image enc.
class PreimageTable {
public:
    PreimageTable(const Field& F, const std::function<Elem(Elem)>& map) : offsets_(F.size() + 1, 0) {
        std::vector<std::uint32_t> image(F.size());
        for (std::uint32_t u = 0; u < F.size(); ++u) {
            image[u] = map(Elem{u}).v;
            ++offsets_[image[u] + 1];
        }
        for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
        data_.resize(F.size());
        std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (std::uint32_t u = 0; u < F.size(); ++u) data_[fill[image[u]]++] = u;
    }

    std::span<const std::uint32_t> operator[](Elem image) const {
        return {data_.data() + offsets_[image.v], data_.data() + offsets_[image.v + 1]};
    }

private:
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> data_;
};

/// h(X) = (X^{q^2} - X) / (X^{q+1} - 1) = X * sum_{i=0}^{q-2} X^{i(q+1)}.
Elem ggk2_h(const Field& F, long q, Elem x) {
    Elem h{0};
    for (long i = 0; i <= q - 2; ++i) h = F.add(h, F.pow(x, static_cast<std::uint64_t>(1 + i * (q + 1))));
    return h;
}

Elem term(const Field& F, long coef, Elem base, long exp) {
    Elem c = F.from_int(coef);
    if (c.v == 0) return c;
    return F.mul(c, F.pow(base, static_cast<std::uint64_t>(exp)));
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::GK: return "gk";
        case Family::GGS: return "ggs";
        case Family::ABQ: return "abq";
        case Family::GGK2: return "ggk2";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "gk") return Family::GK;
    if (s == "ggs") return Family::GGS;
    if (s == "abq") return Family::ABQ;
    if (s == "ggk2") return Family::GGK2;
    throw std::invalid_argument("unknown curve family '" + std::string(name) + "'");
}

std::uint64_t CurveDescriptor::field_size() const {
    std::uint64_t s = 1;
    for (unsigned i = 0; i < field.k; ++i) s *= field.p;
    return s;
}

std::uint64_t CurveDescriptor::field_root() const {
    std::uint64_t s = 1;
    for (unsigned i = 0; i < field.k / 2; ++i) s *= field.p;
    return s;
}

long CurveDescriptor::fiber_size() const {
    long total = 0;
    for (const auto& po : infinity.pole_orders) total += po[fiber_coord];
    return total;
}

std::string CurveDescriptor::label() const {
    std::string s(family_name(family));
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (family == Family::GK) return s + "(" + std::to_string(q) + ")";
    return s + "(" + std::to_string(q) + "," + std::to_string(n) + ")";
}

CurveDescriptor make_descriptor(Family family, long q, int n, const ModuliTable& moduli) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    unsigned p = 0;
    for (long d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = static_cast<unsigned>(d);
            break;
        }
    }
    int e = 0;
    long t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");

    CurveDescriptor d;
    d.family = family;
    d.q = q;
    d.p = p;
    switch (family) {
        case Family::GK:
            if (n != 0 && n != 3) throw std::invalid_argument("the GK curve is defined with n = 3");
            d.n = 3;
            break;
        case Family::GGS:
            if (n < 5 || n % 2 == 0) throw std::invalid_argument("GGS(q,n) needs odd n >= 5");
            d.n = n;
            break;
        case Family::ABQ:
        case Family::GGK2:
            if (n < 3 || n % 2 == 0) throw std::invalid_argument(std::string(family_name(family)) + "(q,n) needs odd n >= 3");
            d.n = n;
            break;
    }
    const unsigned k = static_cast<unsigned>(e * 2 * d.n);
    {
        std::uint64_t size = 1;
        for (unsigned i = 0; i < k; ++i) {
            size *= p;
            if (size > (1u << 16)) throw std::invalid_argument("ambient field exceeds the supported size 2^16");
        }
    }
    d.field = default_spec(p, k, moduli);

    const long qn = ipow(q, d.n);
    switch (family) {
        case Family::GK:
            d.m = q * q - q + 1;
            d.genus = (ipow(q, 3) + 1) * (q * q - 2) / 2 + 1;
            d.expected_places = ipow(q, 8) - ipow(q, 6) + ipow(q, 5) + 1;
            break;
        case Family::GGS:
            d.m = (qn + 1) / (q + 1);
            d.genus = (q - 1) * (ipow(q, d.n + 1) + qn - q * q) / 2;
            d.expected_places = ipow(q, 2 * d.n + 2) - ipow(q, d.n + 3) + ipow(q, d.n + 2) + 1;
            break;
        case Family::ABQ:
            d.m = (qn + 1) / (q + 1);
            d.genus = (q - 1) * (qn - q) / 2;
            d.expected_places = ipow(q, 2 * d.n + 1) - ipow(q, d.n + 2) + ipow(q, d.n + 1) + 1;
            break;
        case Family::GGK2:
            d.m = (qn + 1) / (q + 1);
            d.genus = (q - 1) * (ipow(q, d.n + 1) + qn - q * q) / 2;
            d.expected_places = ipow(q, 2 * d.n) + 2 * d.genus * qn + 1;
            break;
    }

    switch (family) {
        case Family::GK:
        case Family::GGS:
            d.arity = 3;
            d.fiber_coord = kZ;
            d.infinity.count = 1;
            d.infinity.pole_orders = {{d.m * (q + 1), d.m * q, ipow(q, 3)}};
            d.exp_bound = {q - 1, q * q - 1, -1};
            d.tower = {kZ, kY, kX};
            break;
        case Family::ABQ:
            d.arity = 2;
            d.fiber_coord = kX;
            d.infinity.count = 1;
            d.infinity.pole_orders = {{q * q, d.m, 0}};
            d.exp_bound = {-1, q * q - 1, 0};
            d.tower = {kX, kY};
            break;
        case Family::GGK2:
            d.arity = 3;
            d.fiber_coord = kZ;
            d.infinity.count = static_cast<int>(q + 1);
            d.infinity.pole_orders.assign(static_cast<std::size_t>(q + 1), {d.m, d.m, q * q - q});
            d.exp_bound = {-1, q, d.m - 1};
            d.tower = {kX, kY, kZ};
            break;
    }

    if (d.expected_places != hasse_weil_count(d)) {
        throw std::logic_error("descriptor " + d.label() + ": place count formula disagrees with the Hasse-Weil bound");
    }
    return d;
}

long hasse_weil_count(const CurveDescriptor& desc) {
    return static_cast<long>(desc.field_size()) + 2 * desc.genus * static_cast<long>(desc.field_root()) + 1;
}

bool satisfies_equations(const CurveDescriptor& d, const Field& F, const AffinePlace& P) {
    const Elem x = P.c[kX], y = P.c[kY], z = P.c[kZ];
    const auto q = static_cast<std::uint64_t>(d.q);
    const auto m = static_cast<std::uint64_t>(d.m);
    switch (d.family) {
        case Family::GK:
        case Family::GGS:
            return F.pow(y, q + 1) == F.add(F.pow(x, q), x) && F.pow(z, m) == F.sub(F.pow(y, q * q), y);
        case Family::ABQ:
            return z.v == 0 && F.sub(F.pow(y, q * q), y) == F.pow(x, m);
        case Family::GGK2: {
            Elem lhs1 = F.sub(F.pow(x, q + 1), F.one());
            if (lhs1 != F.pow(y, q + 1)) return false;
            return F.mul(y, ggk2_h(F, d.q, x)) == F.pow(z, m);
        }
    }
    return false;
}

bool is_nonsingular(const CurveDescriptor& d, const Field& F, const AffinePlace& P) {
    const Elem x = P.c[kX], y = P.c[kY], z = P.c[kZ];
    const long q = d.q, m = d.m;
    if (d.family == Family::ABQ) {
        // F = Y^{q^2} - Y - X^m
        Elem dx = term(F, -m, x, m - 1);
        Elem dy = F.sub(term(F, q * q, y, q * q - 1), F.one());
        return dx.v != 0 || dy.v != 0;
    }
    std::array<Elem, 3> r1{}, r2{};
    if (d.family == Family::GGK2) {
        // F1 = X^{q+1} - 1 - Y^{q+1};  F2 = Y h(X) - Z^m
        r1 = {term(F, q + 1, x, q), term(F, -(q + 1), y, q), Elem{0}};
        Elem hx{0}, dhx{0};
        for (long i = 0; i <= q - 2; ++i) {
            long e = 1 + i * (q + 1);
            hx = F.add(hx, F.pow(x, static_cast<std::uint64_t>(e)));
            dhx = F.add(dhx, term(F, e, x, e - 1));
        }
        r2 = {F.mul(y, dhx), hx, term(F, -m, z, m - 1)};
    } else {
        // F1 = Y^{q+1} - X^q - X;  F2 = Z^m - Y^{q^2} + Y
        r1 = {F.sub(term(F, -q, x, q - 1), F.one()), term(F, q + 1, y, q), Elem{0}};
        r2 = {Elem{0}, F.add(term(F, -q * q, y, q * q - 1), F.one()), term(F, m, z, m - 1)};
    }
    auto minor = [&](int i, int j) { return F.sub(F.mul(r1[i], r2[j]), F.mul(r1[j], r2[i])); };
    return minor(0, 1).v != 0 || minor(0, 2).v != 0 || minor(1, 2).v != 0;
}

std::vector<AffinePlace> enumerate_points(const CurveDescriptor& d, const Field& F, unsigned jobs) {
    if (F.characteristic() != d.field.p || F.degree() != d.field.k) {
        throw std::invalid_argument("field does not match the descriptor's ambient field");
    }
    const auto q = static_cast<std::uint64_t>(d.q);
    const auto m = static_cast<std::uint64_t>(d.m);
    const std::size_t size = F.size();

    // Artin-Schreier layers for GK/GGS/ABQ, power maps for GGK2.
    std::unique_ptr<PreimageTable> layer1, layer2;
    switch (d.family) {
        case Family::GK:
        case Family::GGS:
            layer1 = std::make_unique<PreimageTable>(F, [&](Elem u) { return F.sub(F.pow(u, q * q), u); });
            layer2 = std::make_unique<PreimageTable>(F, [&](Elem u) { return F.add(F.pow(u, q), u); });
            break;
        case Family::ABQ:
            layer1 = std::make_unique<PreimageTable>(F, [&](Elem u) { return F.sub(F.pow(u, q * q), u); });
            break;
        case Family::GGK2: {
            layer1 = std::make_unique<PreimageTable>(F, [&](Elem u) { return F.pow(u, q + 1); });
            layer2 = std::make_unique<PreimageTable>(F, [&](Elem u) { return F.pow(u, m); });
            break;
        }
    }

    std::vector<std::vector<AffinePlace>> chunks(std::max(1u, jobs));
    parallel_for(size, jobs, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        auto& out = chunks[chunk];
        for (std::size_t b = begin; b < end; ++b) {
            const Elem bottom{static_cast<std::uint32_t>(b)};
            switch (d.family) {
                case Family::GK:
                case Family::GGS:
                    for (std::uint32_t yv : (*layer1)[F.pow(bottom, m)]) {
                        const Elem y{yv};
                        for (std::uint32_t xv : (*layer2)[F.pow(y, q + 1)]) out.push_back({{Elem{xv}, y, bottom}});
                    }
                    break;
                case Family::ABQ:
                    for (std::uint32_t yv : (*layer1)[F.pow(bottom, m)]) out.push_back({{bottom, Elem{yv}, Elem{0}}});
                    break;
                case Family::GGK2: {
                    const Elem hx = ggk2_h(F, d.q, bottom);
                    for (std::uint32_t yv : (*layer1)[F.sub(F.pow(bottom, q + 1), F.one())]) {
                        const Elem y{yv};
                        for (std::uint32_t zv : (*layer2)[F.mul(y, hx)]) out.push_back({{bottom, y, Elem{zv}}});
                    }
                    break;
                }
            }
        }
    });

    std::vector<AffinePlace> points;
    for (auto& c : chunks) points.insert(points.end(), c.begin(), c.end());
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
        throw std::logic_error("enumeration produced a repeated point");
    }
    for (const auto& P : points) {
        if (!satisfies_equations(d, F, P)) throw std::logic_error("enumeration produced a point off the curve");
        if (!is_nonsingular(d, F, P)) throw std::logic_error("singular affine point on " + d.label());
    }
    return points;
}

std::vector<AffinePlace> enumerate_affine_places(const CurveDescriptor& d, const Field& F, unsigned jobs) {
    auto points = enumerate_points(d, F, jobs);
    const long total = static_cast<long>(points.size()) + d.infinity.count;
    if (total != d.expected_places) {
        throw CountMismatch(d.label() + ": found " + std::to_string(total) + " rational places, expected " +
                            std::to_string(d.expected_places) + " (field or modulus misconfigured?)");
    }
    return points;
}

MaximalityReport maximality_check(const CurveDescriptor& desc, std::size_t affine_count) {
    MaximalityReport r;
    r.observed = static_cast<long>(affine_count) + desc.infinity.count;
    r.bound = hasse_weil_count(desc);
    r.maximal = r.observed == r.bound;
    return r;
}

}  // namespace agqc
