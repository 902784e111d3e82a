// Copyright 2026 the polya authors
//
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

#ifndef POLYA_SERIALIZE_HPP
#define POLYA_SERIALIZE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polya/constructions.hpp"
#include "polya/families.hpp"
#include "polya/polya_quad.hpp"

namespace polya {

/*
 * Canonical JSON for every report, claim and certificate the library
 * produces.  Keys appear in a fixed declared order, big integers are decimal
 * strings, and absent optionals are null, so equal values always serialize
 * to identical bytes and parse(serialize(x)) = x for every payload type.
 */

using json = nlohmann::ordered_json;

inline constexpr int output_schema_version = 1;

/* big integers as decimal strings; parse rejects anything else */
json mpz_to_json(const mpz_class& v);
mpz_class mpz_from_json(const json& j);

json to_json(const polya_classification& c);
json to_json(const quad_report& r);
json to_json(const range_report& r);
json to_json(const hypothesis& h);
json to_json(const theorem_claim& c);
json to_json(const lehmer_report& r);
json to_json(const sextic_report& r);
json to_json(const certificate_check& c);
json to_json(const construction_certificate& c);
json to_json(const multiplicative_certificate& c);
json to_json(const verification_report& r);
json to_json(const scan_record& r);
json to_json(const scan_result& r);
json to_json(const fermat_report& r);

polya_classification polya_classification_from_json(const json& j);
quad_report quad_report_from_json(const json& j);
range_report range_report_from_json(const json& j);
hypothesis hypothesis_from_json(const json& j);
theorem_claim theorem_claim_from_json(const json& j);
lehmer_report lehmer_report_from_json(const json& j);
sextic_report sextic_report_from_json(const json& j);
certificate_check certificate_check_from_json(const json& j);
construction_certificate construction_certificate_from_json(const json& j);
multiplicative_certificate multiplicative_certificate_from_json(const json& j);
verification_report verification_report_from_json(const json& j);
scan_record scan_record_from_json(const json& j);
scan_result scan_result_from_json(const json& j);
fermat_report fermat_report_from_json(const json& j);

/* name -> enum inverses of the *_name helpers; std::invalid_argument on an
   unknown name */
theorem_tag tag_from_name(const std::string& s);
claim_conclusion conclusion_from_name(const std::string& s);
polya_case case_from_name(const std::string& s);
construction_variant variant_from_name(const std::string& s);

/* Output envelope shared by every CLI command.  timing_ms is 0 unless the
   caller opted into wall-clock reporting, keeping default output
   byte-reproducible. */
json make_envelope(const std::string& command, json parameters, json result,
                   json provenance, long long timing_ms = 0);

/* hypothesis text -> evaluation method, merged over the given claims */
json provenance_of(const std::vector<theorem_claim>& claims);

/* two-space indent, trailing newline, declared key order */
std::string dump_canonical(const json& j);

/* CSV renderings exist for scan outputs only */
std::string scan_result_csv(const scan_result& r);
std::string pair_list_csv(const std::vector<std::pair<int64_t, int64_t>>& pairs);

}  // namespace polya

#endif
