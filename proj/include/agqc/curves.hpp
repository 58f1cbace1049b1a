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

#ifndef AGQC_CURVES_HPP
#define AGQC_CURVES_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "agqc/field.hpp"

namespace agqc {

enum class Family { GK, GGS, ABQ, GGK2 };

std::string_view family_name(Family f);
/// Accepts "gk", "ggs", "abq", "ggk2" (case-insensitive).
Family parse_family(std::string_view name);

/// Coordinate slots. ABQ uses only x and y.
enum Coord : int { kX = 0, kY = 1, kZ = 2 };

struct InfinitePlaceData {
    int count = 1;
    /// pole_orders[i][c]: pole order of coordinate c at infinite place i.
    std::vector<std::array<long, 3>> pole_orders;
};

/// One member of a curve family over its ambient field GF(q^6) (GK) or
/// GF(q^{2n}) (GGS, ABQ, GGK2), with every derived constant filled in.
struct CurveDescriptor {
    Family family = Family::GK;
    long q = 2;
    int n = 3;
    unsigned p = 2;
    FieldSpec field;
    long m = 0;
    long genus = 0;
    long expected_places = 0;
    InfinitePlaceData infinity;
    int arity = 3;
    int fiber_coord = kZ;
    /// Largest exponent allowed per coordinate in reduced monomials; -1 = unbounded.
    std::array<long, 3> exp_bound{-1, -1, -1};
    /// Coordinates in tower order, used for exponent tuples and sorting.
    std::vector<int> tower;

    std::uint64_t field_size() const;
    /// sqrt of the field size (q^3 or q^n).
    std::uint64_t field_root() const;
    /// Degree of the fibering coordinate, i.e. the size of a full fiber.
    long fiber_size() const;
    /// Pole order of the fibering coordinate at each infinite place (uniform).
    long fiber_pole_order() const { return infinity.pole_orders.front()[fiber_coord]; }
    std::string label() const;
};

/// Throws std::invalid_argument for q not a prime power, even n, an n outside
/// the family's range, or an ambient field larger than 2^16.
CurveDescriptor make_descriptor(Family family, long q, int n = 0, const ModuliTable& moduli = ModuliTable::builtin());

/// q^{2n} + 2 g q^n + 1 for the descriptor's own genus.
long hasse_weil_count(const CurveDescriptor& desc);

struct AffinePlace {
    std::array<Elem, 3> c{};

    friend auto operator<=>(const AffinePlace&, const AffinePlace&) = default;
};

class CountMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool satisfies_equations(const CurveDescriptor& desc, const Field& F, const AffinePlace& P);
/// Rank of the defining-equation Jacobian equals the codimension of the model.
bool is_nonsingular(const CurveDescriptor& desc, const Field& F, const AffinePlace& P);

/// All affine rational points, each once, sorted by (enc x, enc y, enc z).
/// Every point is re-verified against the equations and the Jacobian.
std::vector<AffinePlace> enumerate_points(const CurveDescriptor& desc, const Field& F, unsigned jobs = 1);

/// enumerate_points plus the count check against the descriptor's expected
/// total; throws CountMismatch on disagreement.
std::vector<AffinePlace> enumerate_affine_places(const CurveDescriptor& desc, const Field& F, unsigned jobs = 1);

struct MaximalityReport {
    bool maximal = false;
    long observed = 0;
    long bound = 0;
};

/// Observed total (affine + infinite places) against |F| + 2g sqrt|F| + 1.
MaximalityReport maximality_check(const CurveDescriptor& desc, std::size_t affine_count);

}  // namespace agqc

#endif
