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

#ifndef AGQC_RR_BASIS_HPP
#define AGQC_RR_BASIS_HPP

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "agqc/curves.hpp"
#include "agqc/linalg.hpp"

namespace agqc {

/// x^a y^b z^c in reduced form. `pole` is the largest pole order over the
/// infinite places.
struct Monomial {
    std::array<long, 3> exp{};
    long pole = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// G = s * (sum of the infinite places).
struct DivisorSpec {
    long s = 0;
    int places = 1;

    long degree() const { return s * places; }
};

DivisorSpec divisor_for(const CurveDescriptor& desc, long s);

/// Pole order of a monomial at each infinite place.
std::vector<long> pole_orders(const CurveDescriptor& desc, const std::array<long, 3>& exp);

/// Reduced monomials with pole order <= s at every infinite place, sorted by
/// (pole, exponent tuple in tower order). One-point families have pairwise
/// distinct pole orders; a collision throws std::logic_error.
std::vector<Monomial> candidate_monomials(const CurveDescriptor& desc, const DivisorSpec& G);

std::string monomial_text(const Monomial& mono);

/// Evaluates monomials at a fixed list of affine places through discrete logs.
class MonomialEvaluator {
public:
    MonomialEvaluator(FieldPtr field, std::span<const AffinePlace> places);

    std::size_t size() const { return count_; }
    std::vector<Elem> evaluate(const Monomial& mono) const;

private:
    FieldPtr field_;
    std::size_t count_;
    std::array<std::vector<std::uint32_t>, 3> logs_;  // Field::kNoLog marks zero
};

class BasisShortfall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BasisSelection {
    DivisorSpec divisor;
    std::vector<Monomial> basis;
    Matrix generator;  // row i = basis[i] evaluated at the places
};

/// Greedy rank extension over the candidate order. Requires deg G < #places.
/// When deg G > 2g - 2 the rank must reach deg G + 1 - g, otherwise
/// BasisShortfall is thrown.
BasisSelection select_basis(const CurveDescriptor& desc, FieldPtr field, const DivisorSpec& G,
                            std::span<const AffinePlace> places);

/// Number of basis elements with pole order <= s. Because candidates are
/// sorted by pole order first, the basis for s is this prefix of any basis
/// selected for a larger s.
std::size_t prefix_dimension(const BasisSelection& sel, long s);

}  // namespace agqc

#endif
