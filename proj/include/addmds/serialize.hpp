/**************************************************************************
 * Copyright 2026 The addmds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <string>

#include <json.hpp>

#include "addmds/code.hpp"
#include "addmds/geometry.hpp"
#include "addmds/propm.hpp"
#include "addmds/search.hpp"

// JSON encodings shared by the CLI and the tests. Field elements are digit
// arrays (little-endian coefficients over F_p of the tower modulus). Positions
// are 1-based in every document. See docs/formats.md.

namespace addmds {

using json = nlohmann::json;

/// Parses text; malformed input throws Error(Parse) naming line and column.
json parse_json_text(const std::string& text);

json tower_to_json(const FieldTower& t);
/// Rebuilds the tower and checks that any modulus/omega given match it.
TowerPtr tower_from_json(const json& j);

json elem_to_json(const FieldTower& t, Elem x);
Elem elem_from_json(const FieldTower& t, const json& j);

json poly_to_json(const LinPoly& f);
LinPoly poly_from_json(const TowerPtr& t, const json& j);

json matrix_to_json(const FieldTower& t, const Matrix& m);
Matrix matrix_from_json(const FieldTower& t, const json& j);

json code_to_json(const AdditiveCode& c);
AdditiveCode code_from_json(const json& j);

json move_to_json(const EquivalenceMove& m);
EquivalenceMove move_from_json(const TowerPtr& t, const json& j);

const char* witness_status_name(WitnessStatus s);
json witness_to_json(const LinearWitness& w);

/// F_q entries are written as indices into the sorted base field.
json system_to_json(const ProjectiveHSystem& s);

json prop_witness_to_json(const PropWitness& w);
json certificate_to_json(const ZeroCoeffCertificate& c);
json pair_record_to_json(const PairRecord& r);
json zero_coeff_report_to_json(const ZeroCoeffReport& r);
json inverse_lemma_report_to_json(const InverseLemmaReport& r);
json inverse_sweep_report_to_json(const InverseSweepReport& r);
json two_nonzero_report_to_json(const TwoNonZeroReport& r);
json lm_prop_report_to_json(const LmPropReport& r);

json k4_example_to_json(const K4Example& ex);
K4Example k4_example_from_json(const json& j);
json k4_report_to_json(const K4Report& r);

}  // namespace addmds
