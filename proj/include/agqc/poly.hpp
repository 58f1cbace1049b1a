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

#ifndef AGQC_POLY_HPP
#define AGQC_POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "agqc/field.hpp"

namespace agqc {

/// Dense univariate polynomial over a Field, ascending coefficients with
/// trailing zeros stripped. The zero polynomial has degree -1.
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly constant(FieldPtr field, Elem c);
    static Poly monomial(FieldPtr field, Elem c, std::size_t degree);
    /// Sum of c * Z^e over the (exponent, coefficient) pairs.
    static Poly from_terms(FieldPtr field, std::span<const std::pair<std::size_t, Elem>> terms);
    /// prod (Z - r) over the roots; throws std::invalid_argument on a repeated root.
    static Poly from_roots(FieldPtr field, std::span<const Elem> roots);
    /// Parses the "c0 c1 c2 ..." enc-integer text form.
    static Poly from_text(FieldPtr field, const std::string& text);

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }
    Elem leading() const { return c_.empty() ? Elem{0} : c_.back(); }

    Elem eval(Elem x) const;
    Poly derivative() const;
    Poly monic() const;
    /// Exponents with nonzero coefficient, ascending.
    std::vector<std::size_t> support() const;
    /// "c0 c1 ... cd" with enc integers; "0" for the zero polynomial.
    std::string to_text() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem c) const;
    /// Quotient and remainder; throws std::domain_error on division by zero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    bool operator==(const Poly& o) const { return c_ == o.c_ && same_field(o); }

private:
    void normalize();
    bool same_field(const Poly& o) const;
    const Field& check(const Poly& o) const;

    FieldPtr field_;
    std::vector<Elem> c_;
};

/// Monic gcd by Euclid. Throws std::invalid_argument when both are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Every root in the ambient field by exhaustive evaluation, ascending enc.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<Elem> roots_in_field(const Poly& f);

}  // namespace agqc

#endif
