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

#include "polya/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace polya {

json mpz_to_json(const mpz_class& v) {
    return v.get_str();
}

mpz_class mpz_from_json(const json& j) {
    if (!j.is_string())
        throw std::invalid_argument("json: big integers must be decimal strings");
    const std::string& s = j.get_ref<const std::string&>();
    mpz_class v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("json: not a decimal integer: " + s);
    return v;
}

namespace {

json optional_mpz(const std::optional<mpz_class>& v) {
    return v ? mpz_to_json(*v) : json(nullptr);
}

std::optional<mpz_class> optional_mpz_from(const json& j) {
    if (j.is_null())
        return std::nullopt;
    return mpz_from_json(j);
}

json mpz_array(const std::vector<mpz_class>& vs) {
    json a = json::array();
    for (const auto& v : vs)
        a.push_back(mpz_to_json(v));
    return a;
}

std::vector<mpz_class> mpz_array_from(const json& j) {
    std::vector<mpz_class> out;
    for (const auto& e : j)
        out.push_back(mpz_from_json(e));
    return out;
}

[[noreturn]] void unknown_name(const char* what, const std::string& s) {
    throw std::invalid_argument(std::string("json: unknown ") + what + ": " + s);
}

}  // namespace

theorem_tag tag_from_name(const std::string& s) {
    static const theorem_tag all[] = {
        theorem_tag::biquad_two_polya_subfields,
        theorem_tag::compositum_coprime_ramification,
        theorem_tag::pqr_order2_p3_q1_r1mod8,
        theorem_tag::pqr_order2_all1mod4,
        theorem_tag::pqr_polya_p3_q3_r5mod8,
        theorem_tag::pqr_polya_p3_q1_r5mod8,
        theorem_tag::p_2q_polya_both3mod8,
        theorem_tag::minus_p_minus_q_polya,
        theorem_tag::pqr_order2_p3_q1mod8_r1mod8,
        theorem_tag::pqr_order2_p3_q3_r1mod8,
        theorem_tag::two_pq_order2,
        theorem_tag::cyclic_cubic_minpoly,
        theorem_tag::cyclic_quartic_cases,
        theorem_tag::cyclic_quintic_order,
        theorem_tag::lehmer_quintic_rank,
        theorem_tag::sextic_pure_cubic_norms,
    };
    for (theorem_tag t : all)
        if (s == tag_name(t))
            return t;
    unknown_name("theorem tag", s);
}

claim_conclusion conclusion_from_name(const std::string& s) {
    static const claim_conclusion all[] = {
        claim_conclusion::not_applicable,    claim_conclusion::polya,
        claim_conclusion::not_polya,         claim_conclusion::po_is_z2,
        claim_conclusion::po_order,          claim_conclusion::unknown_within_bound,
    };
    for (claim_conclusion c : all)
        if (s == conclusion_name(c))
            return c;
    unknown_name("conclusion", s);
}

polya_case case_from_name(const std::string& s) {
    static const polya_case all[] = {
        polya_case::not_polya, polya_case::odd_prime,
        polya_case::twice_prime, polya_case::two_odd_primes,
        polya_case::small_d, polya_case::minus_prime,
    };
    for (polya_case c : all)
        if (s == case_name(c))
            return c;
    unknown_name("classification case", s);
}

construction_variant variant_from_name(const std::string& s) {
    if (s == variant_name(construction_variant::class_number))
        return construction_variant::class_number;
    if (s == variant_name(construction_variant::polya))
        return construction_variant::polya;
    unknown_name("construction variant", s);
}

json to_json(const polya_classification& c) {
    json j;
    j["polya"] = c.polya;
    j["label"] = case_name(c.label);
    j["case"] = case_number(c.label);
    return j;
}

polya_classification polya_classification_from_json(const json& j) {
    polya_classification c;
    c.polya = j.at("polya").get<bool>();
    c.label = case_from_name(j.at("label").get<std::string>());
    return c;
}

json to_json(const quad_report& r) {
    json j;
    j["d"] = mpz_to_json(r.d);
    j["disc"] = mpz_to_json(r.disc);
    j["r"] = r.r;
    j["unit_norm"] = r.unit_norm;
    j["order_formula"] = mpz_to_json(r.order_formula);
    j["clamped"] = r.clamped;
    j["order_direct"] = optional_mpz(r.order_direct);
    j["structure"] = mpz_array(r.structure);
    j["is_polya"] = r.is_polya;
    j["label"] = case_name(r.label);
    j["h1"] = mpz_to_json(r.h1);
    return j;
}

quad_report quad_report_from_json(const json& j) {
    quad_report r;
    r.d = mpz_from_json(j.at("d"));
    r.disc = mpz_from_json(j.at("disc"));
    r.r = j.at("r").get<unsigned>();
    r.unit_norm = j.at("unit_norm").get<int>();
    r.order_formula = mpz_from_json(j.at("order_formula"));
    r.clamped = j.at("clamped").get<bool>();
    r.order_direct = optional_mpz_from(j.at("order_direct"));
    r.structure = mpz_array_from(j.at("structure"));
    r.is_polya = j.at("is_polya").get<bool>();
    r.label = case_from_name(j.at("label").get<std::string>());
    r.h1 = mpz_from_json(j.at("h1"));
    return r;
}

json to_json(const range_report& r) {
    json j;
    j["d_min"] = r.d_min;
    j["d_max"] = r.d_max;
    j["checked"] = r.checked;
    j["skipped"] = r.skipped;
    j["violations"] = r.violations;
    j["clamp_events"] = r.clamp_events;
    j["ok"] = r.ok();
    return j;
}

range_report range_report_from_json(const json& j) {
    range_report r;
    r.d_min = j.at("d_min").get<int64_t>();
    r.d_max = j.at("d_max").get<int64_t>();
    r.checked = j.at("checked").get<long long>();
    r.skipped = j.at("skipped").get<std::vector<int64_t>>();
    r.violations = j.at("violations").get<std::vector<int64_t>>();
    r.clamp_events = j.at("clamp_events").get<std::vector<int64_t>>();
    return r;
}

json to_json(const hypothesis& h) {
    json j;
    j["text"] = h.text;
    j["satisfied"] = h.satisfied;
    j["method"] = h.method;
    return j;
}

hypothesis hypothesis_from_json(const json& j) {
    hypothesis h;
    h.text = j.at("text").get<std::string>();
    h.satisfied = j.at("satisfied").get<bool>();
    h.method = j.at("method").get<std::string>();
    return h;
}

json to_json(const theorem_claim& c) {
    json j;
    j["tag"] = tag_name(c.tag);
    json hyps = json::array();
    for (const auto& h : c.hypotheses)
        hyps.push_back(to_json(h));
    j["hypotheses"] = std::move(hyps);
    j["conclusion"] = conclusion_name(c.conclusion);
    j["po_order"] = mpz_to_json(c.po_order);
    j["decisive"] = c.decisive();
    return j;
}

theorem_claim theorem_claim_from_json(const json& j) {
    theorem_claim c;
    c.tag = tag_from_name(j.at("tag").get<std::string>());
    for (const auto& h : j.at("hypotheses"))
        c.hypotheses.push_back(hypothesis_from_json(h));
    c.conclusion = conclusion_from_name(j.at("conclusion").get<std::string>());
    c.po_order = mpz_from_json(j.at("po_order"));
    return c;
}

json to_json(const lehmer_report& r) {
    json j;
    j["n"] = mpz_to_json(r.n);
    j["m"] = mpz_to_json(r.m);
    j["cube_free"] = r.cube_free;
    j["omega_m"] = r.omega_m;
    j["po_rank"] = r.po_rank ? json(*r.po_rank) : json(nullptr);
    j["is_polya"] = r.is_polya ? json(*r.is_polya) : json(nullptr);
    return j;
}

lehmer_report lehmer_report_from_json(const json& j) {
    lehmer_report r;
    r.n = mpz_from_json(j.at("n"));
    r.m = mpz_from_json(j.at("m"));
    r.cube_free = j.at("cube_free").get<bool>();
    r.omega_m = j.at("omega_m").get<unsigned>();
    if (!j.at("po_rank").is_null())
        r.po_rank = j.at("po_rank").get<unsigned>();
    if (!j.at("is_polya").is_null())
        r.is_polya = j.at("is_polya").get<bool>();
    return r;
}

json to_json(const sextic_report& r) {
    json j;
    j["claim"] = to_json(r.claim);
    j["m"] = mpz_to_json(r.m);
    j["a"] = mpz_to_json(r.a);
    j["b"] = mpz_to_json(r.b);
    j["required_primes"] = mpz_array(r.required_primes);
    json ws = json::array();
    for (const auto& w : r.witnesses) {
        if (!w) {
            ws.push_back(nullptr);
            continue;
        }
        json e;
        e["x"] = w->x;
        e["y"] = w->y;
        e["z"] = w->z;
        e["value"] = mpz_to_json(w->value);
        ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

sextic_report sextic_report_from_json(const json& j) {
    sextic_report r;
    r.claim = theorem_claim_from_json(j.at("claim"));
    r.m = mpz_from_json(j.at("m"));
    r.a = mpz_from_json(j.at("a"));
    r.b = mpz_from_json(j.at("b"));
    r.required_primes = mpz_array_from(j.at("required_primes"));
    for (const auto& e : j.at("witnesses")) {
        if (e.is_null()) {
            r.witnesses.push_back(std::nullopt);
            continue;
        }
        norm_witness w;
        w.x = e.at("x").get<long>();
        w.y = e.at("y").get<long>();
        w.z = e.at("z").get<long>();
        w.value = mpz_from_json(e.at("value"));
        r.witnesses.push_back(w);
    }
    return r;
}

json to_json(const certificate_check& c) {
    json j;
    j["i"] = c.i;
    j["field_value"] = mpz_to_json(c.field_value);
    j["reduced_d"] = mpz_to_json(c.reduced_d);
    j["exact_divisibility"] = c.exact_divisibility;
    j["disjoint"] = c.disjoint;
    j["odd_prime_count"] = c.odd_prime_count;
    j["guaranteed_divisor"] = mpz_to_json(c.guaranteed_divisor);
    return j;
}

certificate_check certificate_check_from_json(const json& j) {
    certificate_check c;
    c.i = j.at("i").get<long>();
    c.field_value = mpz_from_json(j.at("field_value"));
    c.reduced_d = mpz_from_json(j.at("reduced_d"));
    c.exact_divisibility = j.at("exact_divisibility").get<bool>();
    c.disjoint = j.at("disjoint").get<bool>();
    c.odd_prime_count = j.at("odd_prime_count").get<unsigned>();
    c.guaranteed_divisor = mpz_from_json(j.at("guaranteed_divisor"));
    return c;
}

namespace {

json checks_to_json(const std::vector<certificate_check>& checks) {
    json a = json::array();
    for (const auto& c : checks)
        a.push_back(to_json(c));
    return a;
}

std::vector<certificate_check> checks_from_json(const json& j) {
    std::vector<certificate_check> out;
    for (const auto& e : j)
        out.push_back(certificate_check_from_json(e));
    return out;
}

}  // namespace

json to_json(const construction_certificate& c) {
    json j;
    j["type"] = "consecutive";
    j["k"] = c.k;
    j["M"] = c.M;
    j["n"] = c.n;
    j["variant"] = variant_name(c.variant);
    json grid = json::array();
    for (const auto& row : c.prime_grid)
        grid.push_back(mpz_array(row));
    j["prime_grid"] = std::move(grid);
    j["d"] = mpz_to_json(c.d);
    j["modulus"] = mpz_to_json(c.modulus);
    j["checks"] = checks_to_json(c.checks);
    return j;
}

construction_certificate construction_certificate_from_json(const json& j) {
    if (j.at("type").get<std::string>() != "consecutive")
        throw std::invalid_argument("json: not a consecutive-construction certificate");
    construction_certificate c;
    c.k = j.at("k").get<unsigned long>();
    c.M = j.at("M").get<double>();
    c.n = j.at("n").get<unsigned>();
    c.variant = variant_from_name(j.at("variant").get<std::string>());
    for (const auto& row : j.at("prime_grid"))
        c.prime_grid.push_back(mpz_array_from(row));
    c.d = mpz_from_json(j.at("d"));
    c.modulus = mpz_from_json(j.at("modulus"));
    c.checks = checks_from_json(j.at("checks"));
    return c;
}

json to_json(const multiplicative_certificate& c) {
    json j;
    j["type"] = "multiplicative";
    j["k"] = c.k;
    j["M"] = c.M;
    j["t"] = c.t;
    j["variant"] = variant_name(c.variant);
    j["primes"] = mpz_array(c.primes);
    j["d"] = mpz_to_json(c.d);
    j["fields_distinct"] = c.fields_distinct;
    j["checks"] = checks_to_json(c.checks);
    return j;
}

multiplicative_certificate multiplicative_certificate_from_json(const json& j) {
    if (j.at("type").get<std::string>() != "multiplicative")
        throw std::invalid_argument("json: not a multiplicative certificate");
    multiplicative_certificate c;
    c.k = j.at("k").get<unsigned long>();
    c.M = j.at("M").get<double>();
    c.t = j.at("t").get<unsigned>();
    c.variant = variant_from_name(j.at("variant").get<std::string>());
    c.primes = mpz_array_from(j.at("primes"));
    c.d = mpz_from_json(j.at("d"));
    c.fields_distinct = j.at("fields_distinct").get<bool>();
    c.checks = checks_from_json(j.at("checks"));
    return c;
}

json to_json(const verification_report& r) {
    json j;
    j["structural_ok"] = r.structural_ok;
    j["oracle_ok"] = r.oracle_ok;
    j["oracle_checked"] = r.oracle_checked;
    j["oracle_skipped"] = r.oracle_skipped;
    j["failures"] = r.failures;
    j["ok"] = r.ok();
    return j;
}

verification_report verification_report_from_json(const json& j) {
    verification_report r;
    r.structural_ok = j.at("structural_ok").get<bool>();
    r.oracle_ok = j.at("oracle_ok").get<bool>();
    r.oracle_checked = j.at("oracle_checked").get<unsigned>();
    r.oracle_skipped = j.at("oracle_skipped").get<unsigned>();
    r.failures = j.at("failures").get<std::vector<std::string>>();
    return r;
}

json to_json(const scan_record& r) {
    json j;
    j["d"] = r.d;
    j["left_d"] = mpz_to_json(r.left_d);
    j["right_d"] = mpz_to_json(r.right_d);
    j["left_value"] = mpz_to_json(r.left_value);
    j["right_value"] = mpz_to_json(r.right_value);
    j["gap"] = mpz_to_json(r.gap);
    return j;
}

scan_record scan_record_from_json(const json& j) {
    scan_record r;
    r.d = j.at("d").get<int64_t>();
    r.left_d = mpz_from_json(j.at("left_d"));
    r.right_d = mpz_from_json(j.at("right_d"));
    r.left_value = mpz_from_json(j.at("left_value"));
    r.right_value = mpz_from_json(j.at("right_value"));
    r.gap = mpz_from_json(j.at("gap"));
    return r;
}

json to_json(const scan_result& r) {
    json j;
    j["min_gap"] = optional_mpz(r.min_gap);
    json recs = json::array();
    for (const auto& rec : r.records)
        recs.push_back(to_json(rec));
    j["records"] = std::move(recs);
    return j;
}

scan_result scan_result_from_json(const json& j) {
    scan_result r;
    r.min_gap = optional_mpz_from(j.at("min_gap"));
    for (const auto& e : j.at("records"))
        r.records.push_back(scan_record_from_json(e));
    return r;
}

json to_json(const fermat_report& r) {
    json j;
    j["n"] = r.n;
    j["power"] = mpz_to_json(r.power);
    j["fermat"] = mpz_to_json(r.fermat);
    j["fermat_prime"] = r.fermat_prime;
    if (r.pair) {
        json p;
        p["left"] = mpz_to_json(r.pair->first);
        p["right"] = mpz_to_json(r.pair->second);
        j["pair"] = std::move(p);
    } else {
        j["pair"] = nullptr;
    }
    j["sf_left"] = mpz_to_json(r.sf_left);
    j["sf_right"] = mpz_to_json(r.sf_right);
    j["omega_left"] = r.omega_left;
    j["omega_right"] = r.omega_right;
    return j;
}

fermat_report fermat_report_from_json(const json& j) {
    fermat_report r;
    r.n = j.at("n").get<unsigned>();
    r.power = mpz_from_json(j.at("power"));
    r.fermat = mpz_from_json(j.at("fermat"));
    r.fermat_prime = j.at("fermat_prime").get<bool>();
    if (!j.at("pair").is_null())
        r.pair = std::make_pair(mpz_from_json(j.at("pair").at("left")),
                                mpz_from_json(j.at("pair").at("right")));
    r.sf_left = mpz_from_json(j.at("sf_left"));
    r.sf_right = mpz_from_json(j.at("sf_right"));
    r.omega_left = j.at("omega_left").get<unsigned>();
    r.omega_right = j.at("omega_right").get<unsigned>();
    return r;
}

json make_envelope(const std::string& command, json parameters, json result,
                   json provenance, long long timing_ms) {
    json j;
    j["schema_version"] = output_schema_version;
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    j["result"] = std::move(result);
    j["provenance"] = std::move(provenance);
    j["timing_ms"] = timing_ms;
    return j;
}

json provenance_of(const std::vector<theorem_claim>& claims) {
    json j = json::object();
    for (const auto& c : claims)
        for (const auto& h : c.hypotheses)
            j[h.text] = h.method;
    return j;
}

std::string dump_canonical(const json& j) {
    return j.dump(2) + "\n";
}

namespace {

/* minimal CSV quoting: our fields are numbers, never quoted */
void csv_line(std::ostringstream& out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
        if (!first)
            out << ',';
        out << c;
        first = false;
    }
    out << '\n';
}

}  // namespace

std::string scan_result_csv(const scan_result& r) {
    std::ostringstream out;
    csv_line(out, {"d", "left_d", "right_d", "left_value", "right_value", "gap"});
    for (const auto& rec : r.records)
        csv_line(out, {std::to_string(rec.d), rec.left_d.get_str(),
                       rec.right_d.get_str(), rec.left_value.get_str(),
                       rec.right_value.get_str(), rec.gap.get_str()});
    return out.str();
}

std::string pair_list_csv(const std::vector<std::pair<int64_t, int64_t>>& pairs) {
    std::ostringstream out;
    csv_line(out, {"m", "m_plus_1"});
    for (const auto& [a, b] : pairs)
        csv_line(out, {std::to_string(a), std::to_string(b)});
    return out.str();
}

}  // namespace polya
