// Copyright 2026 The sargmax-lab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SMX_IO_HPP_
#define SMX_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "smx/argmax.hpp"
#include "smx/changepoint.hpp"
#include "smx/cox.hpp"
#include "smx/process.hpp"
#include "smx/processes.hpp"
#include "smx/step_function.hpp"
#include "smx/time_warp.hpp"

namespace smx {

using Json = nlohmann::json;

/// %.17g rendering of a double, locale independent.
std::string format_double(double v);

/// Serializes a JSON document with numbers printed to 17 significant digits
/// (object keys are emitted in sorted order). Emitted files are bitwise
/// stable for equal inputs.
std::string dump_json(const Json& j, int indent = -1);

Json to_json(const Interval& v);
Json to_json(const Rect& v);
Json to_json(const StepFunction& v);
Json to_json(const TimeWarp& v);
Json to_json(const PureJumpFunction& v);
Json to_json(const Section& v);
Json to_json(const PiecewiseProcess& v);
Json to_json(const MaximizerReport& v);
Json to_json(const ErrorLaw& v);
Json to_json(const ZLaw& v);
Json to_json(const JumpLaw& v);
Json to_json(const CompoundPoissonSpec& v);

Interval interval_from_json(const Json& j);
Rect rect_from_json(const Json& j);
StepFunction step_function_from_json(const Json& j);
TimeWarp time_warp_from_json(const Json& j);
PureJumpFunction pure_jump_from_json(const Json& j);
Section section_from_json(const Json& j);
PiecewiseProcess process_from_json(const Json& j);
ErrorLaw error_law_from_json(const Json& j);
ZLaw z_law_from_json(const Json& j);
JumpLaw jump_law_from_json(const Json& j);
CompoundPoissonSpec compound_poisson_from_json(const Json& j);

/// Structural validation against the minimal schema dialect shipped under
/// schemas/ (type / required / properties / items). Throws with a path
/// diagnostic on the first violation.
void validate_against_schema(const Json& value, const Json& schema);

/// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// CSV: '.' decimal point, ',' separator, LF line endings, one header row,
// numbers at 17 significant digits.
std::string dataset_to_csv(const Dataset& data);
Dataset dataset_from_csv(const std::string& text);
std::string survival_to_csv(const SurvivalDataset& data);
SurvivalDataset survival_from_csv(const std::string& text);
std::string table_to_csv(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows);

}  // namespace smx

#endif  // SMX_IO_HPP_
