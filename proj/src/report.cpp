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

#include "agqc/report.hpp"

#include <sstream>

#include "json.hpp"

namespace agqc {

using Json = nlohmann::ordered_json;

namespace {

Json instance(const CurveDescriptor& d) {
    Json j;
    j["family"] = family_name(d.family);
    j["q"] = d.q;
    j["n"] = d.n;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json params_json(const CurveDescriptor& d, const TableRow& row) {
    const auto& p = row.params;
    Json j = instance(d);
    j["s"] = row.s;
    j["N"] = p.N;
    j["k"] = p.k;
    j["d_bound"] = p.d;
    j["d_kind"] = to_string(p.d_kind);
    j["pure"] = p.pure;
    j["singleton_defect"] = p.singleton_defect();
    j["gv_verdict"] = p.gv ? to_string(p.gv->verdict) : "unchecked";
    j["gv_certificate"] = p.gv ? to_string(p.gv->certificate) : "none";
    return j;
}

}  // namespace

std::string points_report(const CurveDescriptor& d, const std::vector<AffinePlace>& places) {
    auto mx = maximality_check(d, places.size());
    Json j = instance(d);
    j["field"] = "GF(" + std::to_string(d.field.p) + "^" + std::to_string(d.field.k) + ")";
    j["genus"] = d.genus;
    j["affine"] = places.size();
    j["infinite"] = d.infinity.count;
    j["total"] = mx.observed;
    j["expected"] = d.expected_places;
    j["hasse_weil_bound"] = mx.bound;
    j["maximal"] = mx.maximal;
    return dump(j);
}

std::string swiss_report(const SwissData& sw, const std::vector<AffinePlace>& all_places) {
    Json j = instance(sw.desc);
    j["A_size"] = sw.a_set.size();
    j["f_coeffs"] = sw.f.to_text();
    j["fprime_coeffs"] = sw.f_prime.to_text();
    j["deg_D"] = sw.deg_D;
    j["deg_M"] = sw.deg_M;
    j["omega_coeff"] = sw.omega_coeff.front();
    j["s_min"] = sw.s_min;
    j["s_max"] = sw.s_max;
    j["places_at_infinity"] = sw.desc.infinity.count;
    j["f_support"] = sw.f.support();
    j["fprime_support"] = sw.f_prime.support();
    auto cf = closed_form_check(sw);
    j["closed_form"] = {{"ok", cf.ok}, {"detail", cf.detail}};
    auto sz = simple_zero_certificate(sw, all_places);
    j["simple_zeros"] = {{"ok", sz.ok}, {"detail", sz.detail}};
    return dump(j);
}

std::string basis_report(const CurveDescriptor& d, const BasisSelection& sel) {
    Json j = instance(d);
    j["s"] = sel.divisor.s;
    j["deg_G"] = sel.divisor.degree();
    j["dimension"] = sel.basis.size();
    Json b = Json::array();
    for (const auto& m : sel.basis) b.push_back({{"monomial", monomial_text(m)}, {"pole", m.pole}});
    j["basis"] = b;
    return dump(j);
}

std::string code_report(const CodeSummary& c) {
    const auto& code = *c.code;
    Json j = instance(c.swiss->desc);
    j["s"] = code.divisor.s;
    j["deg_G"] = code.divisor.degree();
    j["N"] = code.length();
    j["k"] = code.dimension();
    j["designed_distance"] = code.designed_distance();
    j["designed_dual_distance"] = code.designed_dual_distance();
    j["s_max"] = c.swiss->s_max;
    j["self_orthogonal"] = c.self_orthogonal;
    if (c.witnesses) {
        const auto& w = *c.witnesses;
        j["dual_witnesses"] = {{"ok", w.ok},           {"pole_bound", w.pole_bound}, {"witnesses", w.witnesses},
                               {"orthogonal", w.orthogonal}, {"rank", w.rank},     {"dual_dimension", w.dual_dimension}};
    }
    if (c.weight) {
        j["min_weight"] = {{"mode", weight_mode_name(c.weight->mode)},
                           {"weight", c.weight->weight},
                           {"codewords", c.weight->codewords}};
    }
    return dump(j);
}

std::string matrix_text(const Matrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

std::string matrix_report(const Matrix& m, bool self_orthogonal, const std::optional<WeightResult>& weight) {
    Json j;
    j["field"] = "GF(" + std::to_string(m.field()->spec().p) + "^" + std::to_string(m.field()->spec().k) + ")";
    j["N"] = m.cols();
    j["rows"] = m.rows();
    j["rank"] = rank(m);
    j["self_orthogonal"] = self_orthogonal;
    if (weight) {
        j["min_weight"] = {{"mode", weight_mode_name(weight->mode)}, {"weight", weight->weight},
                           {"codewords", weight->codewords}};
    }
    return dump(j);
}

std::string table_csv(const CurveDescriptor& desc, const std::vector<TableRow>& rows) {
    std::ostringstream out;
    write_csv_header(out);
    for (const auto& r : rows) write_csv_row(out, desc, r);
    return out.str();
}

std::string table_json(const CurveDescriptor& desc, const std::vector<TableRow>& rows,
                       const std::vector<RowMismatch>& failures) {
    Json j = instance(desc);
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(params_json(desc, r));
    j["rows"] = arr;
    Json f = Json::array();
    for (const auto& m : failures) f.push_back({{"s", m.s}, {"what", m.what}});
    j["failures"] = f;
    return dump(j);
}

std::string gv_report(std::uint64_t Q, long N, long k, long d, const GvResult& r) {
    Json j;
    j["Q"] = Q;
    j["N"] = N;
    j["k"] = k;
    j["d"] = d;
    j["verdict"] = to_string(r.verdict);
    j["certificate"] = to_string(r.certificate);
    if (r.full_sum_agrees) j["full_sum_agrees"] = *r.full_sum_agrees;
    return dump(j);
}

}  // namespace agqc
