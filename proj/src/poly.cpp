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

#include "agqc/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace agqc {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Elem e : c_)
        if (!field_->contains(e)) throw std::out_of_range("polynomial coefficient outside field");
    normalize();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t degree) {
    std::vector<Elem> coeffs(degree + 1, Elem{0});
    coeffs[degree] = c;
    return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::from_terms(FieldPtr field, std::span<const std::pair<std::size_t, Elem>> terms) {
    std::size_t top = 0;
    for (const auto& t : terms) top = std::max(top, t.first);
    std::vector<Elem> coeffs(top + 1, Elem{0});
    for (const auto& [e, c] : terms) coeffs[e] = field->add(coeffs[e], c);
    return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::from_roots(FieldPtr field, std::span<const Elem> roots) {
    std::vector<Elem> sorted(roots.begin(), roots.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("product_from_roots: duplicate root");
    }
    const Field& F = *field;
    std::vector<Elem> c{F.one()};
    for (Elem r : roots) {
        if (!F.contains(r)) throw std::out_of_range("root outside field");
        Elem nr = F.neg(r);
        c.push_back(Elem{0});
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = F.add(c[i - 1], F.mul(nr, c[i]));
        c[0] = F.mul(nr, c[0]);
    }
    return Poly(std::move(field), std::move(c));
}

Poly Poly::from_text(FieldPtr field, const std::string& text) {
    std::istringstream in(text);
    std::vector<Elem> coeffs;
    long long v;
    while (in >> v) {
        if (v < 0) throw std::invalid_argument("negative coefficient in polynomial text");
        coeffs.push_back(field->from_enc(static_cast<std::uint32_t>(v)));
    }
    if (!in.eof()) throw std::invalid_argument("malformed polynomial text");
    return Poly(std::move(field), std::move(coeffs));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

bool Poly::same_field(const Poly& o) const { return field_ == o.field_ || field_->spec() == o.field_->spec(); }

const Field& Poly::check(const Poly& o) const {
    if (!same_field(o)) throw std::invalid_argument("cross-field polynomial operation");
    return *field_;
}

Elem Poly::eval(Elem x) const {
    const Field& F = *field_;
    Elem acc{0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    const Field& F = *field_;
    std::vector<Elem> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = F.mul(F.from_int(static_cast<long long>(i % F.characteristic())), c_[i]);
    return Poly(field_, std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading()));
}

std::vector<std::size_t> Poly::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i].v != 0) out.push_back(i);
    return out;
}

std::string Poly::to_text() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c_[i].v);
    }
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    const Field& F = check(o);
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), Elem{0});
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    const Field& F = check(o);
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), Elem{0});
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(coeff(i), o.coeff(i));
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    const Field& F = check(o);
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, Elem{0});
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].v == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(r));
}

Poly Poly::scaled(Elem c) const {
    std::vector<Elem> r(c_);
    for (Elem& e : r) e = field_->mul(e, c);
    return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    const Field& F = check(divisor);
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Elem> rem(c_);
    const std::size_t dd = divisor.c_.size() - 1;
    if (rem.size() <= dd) return {Poly(field_), *this};
    std::vector<Elem> quot(rem.size() - dd, Elem{0});
    const Elem lead_inv = F.inv(divisor.leading());
    for (std::size_t i = rem.size(); i-- > dd;) {
        Elem c = F.mul(rem[i], lead_inv);
        quot[i - dd] = c;
        if (c.v == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(c, divisor.c_[j]));
    }
    rem.resize(dd);
    return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<Elem> roots_in_field(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    std::vector<Elem> out;
    for (Elem x : f.field()->elements())
        if (f.eval(x).v == 0) out.push_back(x);
    return out;
}

}  // namespace agqc
