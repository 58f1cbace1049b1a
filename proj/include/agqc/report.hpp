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

#ifndef AGQC_REPORT_HPP
#define AGQC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "agqc/quantum.hpp"

namespace agqc {

// Text renderers shared by the command-line tool and the golden-file tests.
// JSON keys keep insertion order, so output is byte-stable.

std::string points_report(const CurveDescriptor& desc, const std::vector<AffinePlace>& places);

std::string swiss_report(const SwissData& swiss, const std::vector<AffinePlace>& all_places);

std::string basis_report(const CurveDescriptor& desc, const BasisSelection& sel);

struct CodeSummary {
    const SwissData* swiss = nullptr;
    const EvaluationCode* code = nullptr;
    bool self_orthogonal = false;
    std::optional<WitnessReport> witnesses;
    std::optional<WeightResult> weight;
};
std::string code_report(const CodeSummary& c);

std::string matrix_text(const Matrix& m);
/// Shape, rank and self-orthogonality of a matrix read from a file.
std::string matrix_report(const Matrix& m, bool self_orthogonal, const std::optional<WeightResult>& weight);

std::string table_csv(const CurveDescriptor& desc, const std::vector<TableRow>& rows);
std::string table_json(const CurveDescriptor& desc, const std::vector<TableRow>& rows,
                       const std::vector<RowMismatch>& failures);

std::string gv_report(std::uint64_t Q, long N, long k, long d, const GvResult& r);

}  // namespace agqc

#endif
