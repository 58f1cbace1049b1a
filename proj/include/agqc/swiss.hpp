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

#ifndef AGQC_SWISS_HPP
#define AGQC_SWISS_HPP

#include <optional>
#include <string>
#include <vector>

#include "agqc/curves.hpp"
#include "agqc/poly.hpp"

namespace agqc {

/// Integer data of the differential omega = (f'(t)/f(t)) dt for the fibering
/// coordinate t, together with the evaluation set it induces.
///
/// (omega) = M - D + sum_i omega_coeff[i] P_i, where D is the sum of the places
/// over A_set, M is the affine zero divisor of f'(t), and P_i are the infinite
/// places. C(D, sG) is self-orthogonal for s <= s_max.
struct SwissData {
    CurveDescriptor desc;
    FieldPtr field;
    std::vector<Elem> a_set;  // ascending enc
    Poly f;
    Poly f_prime;
    std::vector<AffinePlace> d_places;  // canonical order
    long deg_D = 0;
    long deg_M = 0;
    std::vector<long> omega_coeff;
    long s_min = 0;
    long s_max = 0;

    SwissData() : f(nullptr), f_prime(nullptr) {}
};

/// Fibering-coordinate values whose fiber among `places` has full size.
/// For GGK2 the value 0 is excluded: its fiber holds the GF(q^2)-rational
/// points, which are not part of D.
std::vector<Elem> a_set_from_fibers(const CurveDescriptor& desc, const Field& F, const std::vector<AffinePlace>& places);

/// The algebraic membership test evaluated over the whole field:
///   GK       xi^{m q^4} + xi^{m q^2} + xi^m = 0
///   GGS/ABQ  sum_{i<n} (xi^m)^{q^{2i}} = 0
///   GGK2     a != 0 and Y^6 + Y^3 = a^{2^n+1} has 6 distinct roots (q = 2 only)
std::vector<Elem> a_set_from_condition(const CurveDescriptor& desc, const Field& F);

class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Both methods above; throws VerificationFailure if they disagree.
std::vector<Elem> compute_A_set(const CurveDescriptor& desc, const Field& F, const std::vector<AffinePlace>& places);

/// Closed-form |A| where one is known (GGK2 only for q = 2).
std::optional<long> expected_A_size(const CurveDescriptor& desc);

/// Throws VerificationFailure if f has a repeated root, deg D is not
/// |A| * fiber size, omega has a non-integral coefficient, or the degree of the
/// principal divisor of f'(t)/f(t) is nonzero.
SwissData build_swiss_data(const CurveDescriptor& desc, FieldPtr field, const std::vector<AffinePlace>& places);

struct CheckReport {
    bool ok = false;
    std::string detail;
};

/// Every a in A has exactly fiber-size distinct places above it, and
/// gcd(f, f') = 1, so each place of D is a simple zero of t - a.
CheckReport simple_zero_certificate(const SwissData& swiss, const std::vector<AffinePlace>& all_places);

/// Exponents of the closed forms of f (derivative = false) or f', all
/// coefficients one: GK, GGS, ABQ for any q; GGK2 for q = 2, n in {3, 5}.
std::optional<std::vector<std::size_t>> closed_form_exponents(const CurveDescriptor& desc, bool derivative);

/// Printed closed forms of f and f' (GK, GGS, ABQ for any q; GGK2 for q = 2,
/// n in {3, 5}). nullopt where no closed form exists.
std::optional<Poly> closed_form_f(const CurveDescriptor& desc, const FieldPtr& field);
std::optional<Poly> closed_form_f_prime(const CurveDescriptor& desc, const FieldPtr& field);

/// Coefficient-exact comparison of f and f' with the closed forms.
CheckReport closed_form_check(const SwissData& swiss);

}  // namespace agqc

#endif
