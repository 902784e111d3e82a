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

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "polya/constructions.hpp"
#include "polya/families.hpp"
#include "polya/polya_quad.hpp"
#include "polya/serialize.hpp"

namespace {

using polya::json;

mpz_class parse_mpz(const std::string& s) {
    mpz_class v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not an integer: " + s);
    return v;
}

polya::biquad_shape shape_from_name(const std::string& s) {
    for (polya::biquad_shape sh :
         {polya::biquad_shape::p_qr, polya::biquad_shape::p_2q,
          polya::biquad_shape::minus_p_minus_q, polya::biquad_shape::two_pq})
        if (s == polya::shape_name(sh))
            return sh;
    throw std::invalid_argument("unknown biquadratic shape: " + s);
}

/* execution knobs shared by every command; only oracle_bound is a
   mathematical parameter, the rest never change any payload byte */
struct cli_config {
    std::string format = "json";
    int64_t oracle_bound = polya::default_oracle_limits().max_abs_disc;
    unsigned jobs = 1;
    bool timing = false;
};

polya::oracle_limits oracle_of(const cli_config& cfg) {
    polya::oracle_limits lim;
    lim.max_abs_disc = cfg.oracle_bound;
    return lim;
}

/* set once before dispatch; envelopes read it when --timing is given */
std::chrono::steady_clock::time_point command_start;

long long elapsed_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - command_start)
        .count();
}

void require_not_csv(const cli_config& cfg) {
    if (cfg.format == "csv")
        throw std::invalid_argument("csv output exists only for scan commands");
}

void emit_text(const std::vector<std::string>& lines) {
    for (const auto& l : lines)
        std::fputs((l + "\n").c_str(), stdout);
}

void emit_envelope(const cli_config& cfg, const std::string& command,
                   json parameters, json result, json provenance) {
    json env = polya::make_envelope(command, std::move(parameters),
                                    std::move(result), std::move(provenance),
                                    cfg.timing ? elapsed_ms() : 0);
    std::fputs(polya::dump_canonical(env).c_str(), stdout);
}

std::string join_mpz(const std::vector<mpz_class>& vs) {
    std::string out;
    for (const auto& v : vs) {
        if (!out.empty())
            out += ' ';
        out += v.get_str();
    }
    return out;
}

std::vector<std::string> claim_lines(const polya::theorem_claim& c) {
    std::vector<std::string> lines;
    lines.push_back(fmt::format("tag: {}", polya::tag_name(c.tag)));
    lines.push_back(fmt::format("conclusion: {}",
                                polya::conclusion_name(c.conclusion)));
    if (c.conclusion == polya::claim_conclusion::po_order)
        lines.push_back(fmt::format("po_order: {}", c.po_order.get_str()));
    for (const auto& h : c.hypotheses)
        lines.push_back(fmt::format("  [{}] {} ({})", h.satisfied ? 'x' : ' ',
                                    h.text, h.method));
    return lines;
}

std::vector<std::string> verification_lines(const polya::verification_report& rep) {
    std::vector<std::string> lines;
    lines.push_back(fmt::format("structural_ok: {}", rep.structural_ok));
    lines.push_back(fmt::format("oracle_ok: {}", rep.oracle_ok));
    lines.push_back(fmt::format("oracle_checked: {}", rep.oracle_checked));
    lines.push_back(fmt::format("oracle_skipped: {}", rep.oracle_skipped));
    for (const auto& f : rep.failures)
        lines.push_back(fmt::format("failure: {}", f));
    return lines;
}

std::vector<std::string> scan_lines(const polya::scan_result& res) {
    std::vector<std::string> lines;
    lines.push_back(res.min_gap ? fmt::format("min_gap: {}", res.min_gap->get_str())
                                : "min_gap: none");
    lines.push_back(fmt::format("records: {}", res.records.size()));
    for (const auto& r : res.records)
        lines.push_back(fmt::format("d={} left_d={} right_d={} left={} right={} gap={}",
                                    r.d, r.left_d.get_str(), r.right_d.get_str(),
                                    r.left_value.get_str(), r.right_value.get_str(),
                                    r.gap.get_str()));
    return lines;
}

/* verify-cert accepts either a bare certificate or a construct envelope */
json certificate_payload(const json& file) {
    if (file.contains("result") && file["result"].is_object() &&
        file["result"].contains("certificate"))
        return file["result"]["certificate"];
    if (file.contains("certificate"))
        return file["certificate"];
    return file;
}

struct command_outcome {
    int exit_code = 0;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polya groups of quadratic fields in exact arithmetic"};
    app.name("polya");
    app.require_subcommand(1);
    app.fallthrough();

    cli_config cfg;
    if (const char* env = std::getenv("POLYA_ORACLE_BOUND")) {
        try {
            cfg.oracle_bound = std::stoll(env);
        } catch (const std::exception&) {
            std::cerr << "input error: POLYA_ORACLE_BOUND is not an integer\n";
            return 1;
        }
    }
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--oracle-bound", cfg.oracle_bound,
                   "largest |disc| the class-group oracle will enumerate");
    app.add_option("--jobs", cfg.jobs, "worker threads for scans and sweeps")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timing", cfg.timing, "report wall-clock milliseconds");

    std::function<command_outcome()> run;

    /* quad <d> */
    std::string quad_d;
    auto* quad_cmd = app.add_subcommand("quad", "full report on Q(sqrt d)");
    quad_cmd->fallthrough();
    quad_cmd->add_option("d", quad_d, "any nonsquare integer")->required();
    quad_cmd->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            mpz_class d = parse_mpz(quad_d);
            polya::quad_report rep = polya::analyze_quad(d, oracle_of(cfg));
            json params;
            params["d"] = polya::mpz_to_json(d);
            params["oracle_bound"] = cfg.oracle_bound;
            if (cfg.format == "text") {
                emit_text({fmt::format("d: {}", rep.d.get_str()),
                           fmt::format("disc: {}", rep.disc.get_str()),
                           fmt::format("ramified_primes: {}", rep.r),
                           fmt::format("unit_norm: {}", rep.unit_norm),
                           fmt::format("order_formula: {}",
                                       rep.order_formula.get_str()),
                           fmt::format("order_direct: {}",
                                       rep.order_direct
                                           ? rep.order_direct->get_str()
                                           : "skipped"),
                           fmt::format("structure: [{}]", join_mpz(rep.structure)),
                           fmt::format("is_polya: {}", rep.is_polya),
                           fmt::format("label: {}", polya::case_name(rep.label)),
                           fmt::format("h1: {}", rep.h1.get_str())});
            } else {
                emit_envelope(cfg, "quad", params, polya::to_json(rep),
                              json::object());
            }
            return {};
        };
    });

    /* classify ... */
    auto* classify_cmd =
        app.add_subcommand("classify", "hypothesis-checked field classifications");
    classify_cmd->fallthrough();
    classify_cmd->require_subcommand(1);

    std::string cq_d;
    auto* cq = classify_cmd->add_subcommand("quad", "shape classification of Q(sqrt d)");
    cq->fallthrough();
    cq->add_option("d", cq_d, "squarefree integer")->required();
    cq->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            mpz_class d = parse_mpz(cq_d);
            polya::polya_classification c = polya::is_polya_quadratic(d);
            json params;
            params["d"] = polya::mpz_to_json(d);
            if (cfg.format == "text") {
                emit_text({fmt::format("polya: {}", c.polya),
                           fmt::format("label: {}", polya::case_name(c.label)),
                           fmt::format("case: {}", polya::case_number(c.label))});
            } else {
                emit_envelope(cfg, "classify quad", params, polya::to_json(c),
                              json::object());
            }
            return {};
        };
    });

    std::vector<std::string> bq_values;
    std::string bq_shape;
    auto* bq = classify_cmd->add_subcommand(
        "biquad", "theorem claims for Q(sqrt m, sqrt n)");
    bq->fallthrough();
    bq->add_option("values", bq_values,
                   "either the pair m n, or the primes of --shape")
        ->required();
    bq->add_option("--shape", bq_shape,
                   "prime-tuple shape: p-qr, p-2q, minus-p-minus-q or two-pq");
    bq->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            std::vector<polya::theorem_claim> claims;
            json params;
            if (bq_shape.empty()) {
                if (bq_values.size() != 2)
                    throw std::invalid_argument(
                        "classify biquad takes exactly two integers m n");
                mpz_class m = parse_mpz(bq_values[0]);
                mpz_class n = parse_mpz(bq_values[1]);
                params["m"] = polya::mpz_to_json(m);
                params["n"] = polya::mpz_to_json(n);
                claims.push_back(polya::classify_biquad_pair(m, n));
            } else {
                std::vector<mpz_class> primes;
                for (const auto& v : bq_values)
                    primes.push_back(parse_mpz(v));
                params["shape"] = bq_shape;
                params["primes"] = json::array();
                for (const auto& p : primes)
                    params["primes"].push_back(polya::mpz_to_json(p));
                claims = polya::classify_biquad_primes(shape_from_name(bq_shape),
                                                       primes);
            }
            if (cfg.format == "text") {
                std::vector<std::string> lines;
                for (const auto& c : claims) {
                    auto cl = claim_lines(c);
                    lines.insert(lines.end(), cl.begin(), cl.end());
                }
                emit_text(lines);
            } else {
                json result;
                result["claims"] = json::array();
                for (const auto& c : claims)
                    result["claims"].push_back(polya::to_json(c));
                emit_envelope(cfg, "classify biquad", params, result,
                              polya::provenance_of(claims));
            }
            return {};
        };
    });

    std::vector<std::string> cc_values;
    auto* cc = classify_cmd->add_subcommand(
        "cubic", "cyclic cubic generator families");
    cc->fallthrough();
    cc->add_option("values", cc_values,
                   "empty for X^3-3X+1, or the pair u w for X^3-3pX-pu");
    cc->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            polya::theorem_claim claim;
            json params = json::object();
            if (cc_values.empty()) {
                claim = polya::cyclic_cubic_is_polya();
            } else if (cc_values.size() == 2) {
                mpz_class u = parse_mpz(cc_values[0]);
                mpz_class w = parse_mpz(cc_values[1]);
                params["u"] = polya::mpz_to_json(u);
                params["w"] = polya::mpz_to_json(w);
                claim = polya::cyclic_cubic_is_polya(u, w);
            } else {
                throw std::invalid_argument(
                    "classify cubic takes no arguments or the pair u w");
            }
            std::vector<polya::theorem_claim> claims = {claim};
            if (cfg.format == "text") {
                emit_text(claim_lines(claim));
            } else {
                json result;
                result["claims"] = json::array({polya::to_json(claim)});
                emit_envelope(cfg, "classify cubic", params, result,
                              polya::provenance_of(claims));
            }
            return {};
        };
    });

    std::string qa, qb, qc_, qd_;
    bool q_norm_plus = false, q_norm_minus = false;
    auto* cquart = classify_cmd->add_subcommand(
        "quartic", "cyclic quartic Q(sqrt(A(D+B sqrt D))) criterion");
    cquart->fallthrough();
    cquart->add_option("A", qa)->required();
    cquart->add_option("B", qb)->required();
    cquart->add_option("C", qc_)->required();
    cquart->add_option("D", qd_)->required();
    cquart->add_flag("--norm-plus", q_norm_plus,
                     "assert the relevant unit-norm condition holds");
    cquart->add_flag("--norm-minus", q_norm_minus,
                     "assert the relevant unit-norm condition fails");
    cquart->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            if (q_norm_plus && q_norm_minus)
                throw std::invalid_argument(
                    "--norm-plus and --norm-minus are mutually exclusive");
            std::optional<bool> norm;
            if (q_norm_plus)
                norm = true;
            if (q_norm_minus)
                norm = false;
            mpz_class A = parse_mpz(qa), B = parse_mpz(qb), C = parse_mpz(qc_),
                      D = parse_mpz(qd_);
            polya::theorem_claim claim =
                polya::cyclic_quartic_classify(A, B, C, D, norm);
            json params;
            params["A"] = polya::mpz_to_json(A);
            params["B"] = polya::mpz_to_json(B);
            params["C"] = polya::mpz_to_json(C);
            params["D"] = polya::mpz_to_json(D);
            params["norm_asserted"] = norm ? json(*norm) : json(nullptr);
            std::vector<polya::theorem_claim> claims = {claim};
            if (cfg.format == "text") {
                emit_text(claim_lines(claim));
            } else {
                json result;
                result["claims"] = json::array({polya::to_json(claim)});
                emit_envelope(cfg, "classify quartic", params, result,
                              polya::provenance_of(claims));
            }
            return {};
        };
    });

    std::string sx_m;
    long sx_bound = 50;
    auto* csex = classify_cmd->add_subcommand(
        "sextic", "norm criterion for Q(zeta_3, cbrt m)");
    csex->fallthrough();
    csex->add_option("m", sx_m, "cube-free integer >= 2")->required();
    csex->add_option("--bound", sx_bound, "norm-form search radius");
    csex->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            mpz_class m = parse_mpz(sx_m);
            polya::sextic_report rep = polya::sextic_pure_cubic(m, sx_bound);
            json params;
            params["m"] = polya::mpz_to_json(m);
            params["bound"] = sx_bound;
            std::vector<polya::theorem_claim> claims = {rep.claim};
            if (cfg.format == "text") {
                std::vector<std::string> lines = claim_lines(rep.claim);
                for (size_t i = 0; i < rep.required_primes.size(); i++) {
                    const auto& w = rep.witnesses[i];
                    if (w)
                        lines.push_back(fmt::format(
                            "witness for {}: norm({}, {}, {}) = {}",
                            rep.required_primes[i].get_str(), w->x, w->y, w->z,
                            w->value.get_str()));
                    else
                        lines.push_back(fmt::format("witness for {}: none found",
                                                    rep.required_primes[i].get_str()));
                }
                emit_text(lines);
            } else {
                emit_envelope(cfg, "classify sextic", params, polya::to_json(rep),
                              polya::provenance_of(claims));
            }
            return {};
        };
    });

    /* lehmer <n> */
    std::string lehmer_n;
    auto* lehmer_cmd =
        app.add_subcommand("lehmer", "quintic family m = n^4+5n^3+15n^2+25n+25");
    lehmer_cmd->fallthrough();
    lehmer_cmd->add_option("n", lehmer_n, "any integer")->required();
    lehmer_cmd->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            mpz_class n = parse_mpz(lehmer_n);
            polya::lehmer_report rep = polya::lehmer_quintic(n);
            json params;
            params["n"] = polya::mpz_to_json(n);
            if (cfg.format == "text") {
                emit_text({fmt::format("n: {}", rep.n.get_str()),
                           fmt::format("m: {}", rep.m.get_str()),
                           fmt::format("cube_free: {}", rep.cube_free),
                           fmt::format("omega_m: {}", rep.omega_m),
                           fmt::format("po_rank: {}",
                                       rep.po_rank ? std::to_string(*rep.po_rank)
                                                   : "n/a"),
                           fmt::format("is_polya: {}",
                                       rep.is_polya
                                           ? (*rep.is_polya ? "true" : "false")
                                           : "n/a")});
            } else {
                emit_envelope(cfg, "lehmer", params, polya::to_json(rep),
                              json::object());
            }
            return {};
        };
    });

    /* construct ... */
    auto* construct_cmd =
        app.add_subcommand("construct", "certified runs of fields with large h or Po");
    construct_cmd->fallthrough();
    construct_cmd->require_subcommand(1);

    unsigned long cons_k = 1;
    double cons_M = 2.0;
    bool cons_polya = false;
    auto* cons = construct_cmd->add_subcommand(
        "consecutive", "k consecutive fields via CRT prime grids");
    cons->fallthrough();
    cons->add_option("--k", cons_k, "run length")->required();
    cons->add_option("--M", cons_M, "bound every field must clear")->required();
    cons->add_flag("--polya", cons_polya, "certify Polya group orders instead of h");
    cons->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            polya::construction_variant variant =
                cons_polya ? polya::construction_variant::polya
                           : polya::construction_variant::class_number;
            polya::construction_certificate cert =
                polya::construct_consecutive(cons_k, cons_M, variant);
            polya::verification_report rep =
                polya::verify_certificate(cert, cfg.oracle_bound);
            json params;
            params["k"] = cons_k;
            params["M"] = cons_M;
            params["variant"] = polya::variant_name(variant);
            params["oracle_bound"] = cfg.oracle_bound;
            if (cfg.format == "text") {
                std::vector<std::string> lines = {
                    fmt::format("d: {}", cert.d.get_str()),
                    fmt::format("n: {}", cert.n),
                    fmt::format("modulus: {}", cert.modulus.get_str())};
                for (const auto& row : cert.prime_grid)
                    lines.push_back(fmt::format("grid: [{}]", join_mpz(row)));
                auto vl = verification_lines(rep);
                lines.insert(lines.end(), vl.begin(), vl.end());
                emit_text(lines);
            } else {
                json result;
                result["certificate"] = polya::to_json(cert);
                result["verification"] = polya::to_json(rep);
                emit_envelope(cfg, "construct consecutive", params, result,
                              json::object());
            }
            return {rep.ok() ? 0 : 3};
        };
    });

    unsigned long mult_k = 1;
    double mult_M = 2.0;
    bool mult_polya = false;
    auto* mult = construct_cmd->add_subcommand(
        "multiplicative", "one modulus d with all fields Q(sqrt jd)");
    mult->fallthrough();
    mult->add_option("--k", mult_k, "multiplier range")->required();
    mult->add_option("--M", mult_M, "bound every field must clear")->required();
    mult->add_flag("--polya", mult_polya, "certify Polya group orders instead of h");
    mult->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            polya::construction_variant variant =
                mult_polya ? polya::construction_variant::polya
                           : polya::construction_variant::class_number;
            polya::multiplicative_certificate cert =
                polya::construct_multiplicative(mult_k, mult_M, variant);
            polya::verification_report rep =
                polya::verify_certificate(cert, cfg.oracle_bound);
            json params;
            params["k"] = mult_k;
            params["M"] = mult_M;
            params["variant"] = polya::variant_name(variant);
            params["oracle_bound"] = cfg.oracle_bound;
            if (cfg.format == "text") {
                std::vector<std::string> lines = {
                    fmt::format("d: {}", cert.d.get_str()),
                    fmt::format("t: {}", cert.t),
                    fmt::format("primes: [{}]", join_mpz(cert.primes)),
                    fmt::format("fields_distinct: {}", cert.fields_distinct)};
                auto vl = verification_lines(rep);
                lines.insert(lines.end(), vl.begin(), vl.end());
                emit_text(lines);
            } else {
                json result;
                result["certificate"] = polya::to_json(cert);
                result["verification"] = polya::to_json(rep);
                emit_envelope(cfg, "construct multiplicative", params, result,
                              json::object());
            }
            return {rep.ok() ? 0 : 3};
        };
    });

    /* verify-cert <file> */
    std::string vc_path;
    auto* vc = app.add_subcommand("verify-cert",
                                  "re-derive a stored certificate from scratch");
    vc->fallthrough();
    vc->add_option("file", vc_path, "certificate JSON (bare or construct output)")
        ->required();
    vc->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            std::ifstream in(vc_path);
            if (!in)
                throw std::invalid_argument("cannot open " + vc_path);
            json file = json::parse(in);
            json payload = certificate_payload(file);
            if (!payload.is_object() || !payload.contains("type"))
                throw std::invalid_argument(
                    "no certificate with a type field in " + vc_path);
            std::string type = payload.at("type").get<std::string>();
            polya::verification_report rep;
            if (type == "consecutive")
                rep = polya::verify_certificate(
                    polya::construction_certificate_from_json(payload),
                    cfg.oracle_bound);
            else if (type == "multiplicative")
                rep = polya::verify_certificate(
                    polya::multiplicative_certificate_from_json(payload),
                    cfg.oracle_bound);
            else
                throw std::invalid_argument("unknown certificate type: " + type);
            json params;
            params["file"] = vc_path;
            params["oracle_bound"] = cfg.oracle_bound;
            if (cfg.format == "text") {
                emit_text(verification_lines(rep));
            } else {
                json result;
                result["type"] = type;
                result["verification"] = polya::to_json(rep);
                emit_envelope(cfg, "verify-cert", params, result, json::object());
            }
            return {rep.ok() ? 0 : 3};
        };
    });

    /* scan ... */
    auto* scan_cmd = app.add_subcommand("scan", "consecutive-discriminant surveys");
    scan_cmd->fallthrough();
    scan_cmd->require_subcommand(1);

    int64_t cg_min = 2, cg_max = 100;
    auto* cg = scan_cmd->add_subcommand("class-gap",
                                        "min |h(d) - h(d+1)| over a range");
    cg->fallthrough();
    cg->add_option("--dmin", cg_min)->required();
    cg->add_option("--dmax", cg_max)->required();
    cg->callback([&] {
        run = [&]() -> command_outcome {
            polya::scan_result res =
                polya::scan_class_gap(cg_min, cg_max, oracle_of(cfg), cfg.jobs);
            json params;
            params["d_min"] = cg_min;
            params["d_max"] = cg_max;
            params["oracle_bound"] = cfg.oracle_bound;
            if (cfg.format == "csv")
                std::fputs(polya::scan_result_csv(res).c_str(), stdout);
            else if (cfg.format == "text")
                emit_text(scan_lines(res));
            else
                emit_envelope(cfg, "scan class-gap", params, polya::to_json(res),
                              json::object());
            return {};
        };
    });

    int64_t pg_min = 2, pg_max = 100;
    auto* pg = scan_cmd->add_subcommand("polya-gap",
                                        "min |Po(d) - Po(d+1)| over a range");
    pg->fallthrough();
    pg->add_option("--dmin", pg_min)->required();
    pg->add_option("--dmax", pg_max)->required();
    pg->callback([&] {
        run = [&]() -> command_outcome {
            polya::scan_result res =
                polya::scan_polya_gap(pg_min, pg_max, {}, cfg.jobs);
            json params;
            params["d_min"] = pg_min;
            params["d_max"] = pg_max;
            if (cfg.format == "csv")
                std::fputs(polya::scan_result_csv(res).c_str(), stdout);
            else if (cfg.format == "text")
                emit_text(scan_lines(res));
            else
                emit_envelope(cfg, "scan polya-gap", params, polya::to_json(res),
                              json::object());
            return {};
        };
    });

    int64_t oe_limit = 40;
    unsigned oe_k = 2;
    auto* oe = scan_cmd->add_subcommand(
        "odd-exp-pairs", "consecutive pairs with k-prime squarefree parts");
    oe->fallthrough();
    oe->add_option("--limit", oe_limit)->required();
    oe->add_option("--k", oe_k)->required();
    oe->callback([&] {
        run = [&]() -> command_outcome {
            std::vector<std::pair<int64_t, int64_t>> pairs =
                polya::scan_odd_exponent_pairs(oe_limit, oe_k);
            json params;
            params["limit"] = oe_limit;
            params["k"] = oe_k;
            if (cfg.format == "csv") {
                std::fputs(polya::pair_list_csv(pairs).c_str(), stdout);
            } else if (cfg.format == "text") {
                std::vector<std::string> lines;
                lines.push_back(fmt::format("pairs: {}", pairs.size()));
                for (const auto& [a, b] : pairs)
                    lines.push_back(fmt::format("{} {}", a, b));
                emit_text(lines);
            } else {
                json result;
                result["pairs"] = json::array();
                for (const auto& [a, b] : pairs)
                    result["pairs"].push_back(json::array({a, b}));
                emit_envelope(cfg, "scan odd-exp-pairs", params, result,
                              json::object());
            }
            return {};
        };
    });

    unsigned fm_n = 0, fm_cap = 5;
    auto* fm = scan_cmd->add_subcommand("fermat",
                                        "the candidate pair (2^(2^n), 2^(2^n)+1)");
    fm->fallthrough();
    fm->add_option("--n", fm_n)->required();
    fm->add_option("--cap", fm_cap, "largest n accepted");
    fm->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            polya::fermat_report rep = polya::fermat_pair(fm_n, fm_cap);
            json params;
            params["n"] = fm_n;
            if (cfg.format == "text") {
                emit_text({fmt::format("power: {}", rep.power.get_str()),
                           fmt::format("fermat: {}", rep.fermat.get_str()),
                           fmt::format("fermat_prime: {}", rep.fermat_prime),
                           fmt::format("pair: {}",
                                       rep.pair ? fmt::format("({}, {})",
                                                              rep.pair->first.get_str(),
                                                              rep.pair->second.get_str())
                                                : "none"),
                           fmt::format("sf_left: {} (omega {})",
                                       rep.sf_left.get_str(), rep.omega_left),
                           fmt::format("sf_right: {} (omega {})",
                                       rep.sf_right.get_str(), rep.omega_right)});
            } else {
                emit_envelope(cfg, "scan fermat", params, polya::to_json(rep),
                              json::object());
            }
            return {};
        };
    });

    /* sweep --dmin --dmax */
    int64_t sw_min = 2, sw_max = 500;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "formula-vs-oracle cross-validation over a range");
    sweep_cmd->fallthrough();
    sweep_cmd->add_option("--dmin", sw_min)->required();
    sweep_cmd->add_option("--dmax", sw_max)->required();
    sweep_cmd->callback([&] {
        run = [&]() -> command_outcome {
            require_not_csv(cfg);
            polya::range_report rep =
                polya::verify_range(sw_min, sw_max, oracle_of(cfg), cfg.jobs);
            json params;
            params["d_min"] = sw_min;
            params["d_max"] = sw_max;
            params["oracle_bound"] = cfg.oracle_bound;
            if (cfg.format == "text") {
                std::vector<std::string> lines = {
                    fmt::format("checked: {}", rep.checked),
                    fmt::format("skipped: {}", rep.skipped.size()),
                    fmt::format("violations: {}", rep.violations.size()),
                    fmt::format("clamp_events: {}", rep.clamp_events.size()),
                    fmt::format("ok: {}", rep.ok())};
                for (int64_t d : rep.violations)
                    lines.push_back(fmt::format("violation at d={}", d));
                emit_text(lines);
            } else {
                emit_envelope(cfg, "sweep", params, polya::to_json(rep),
                              json::object());
            }
            return {rep.ok() ? 0 : 3};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        command_start = std::chrono::steady_clock::now();
        command_outcome outcome = run();
        return outcome.exit_code;
    } catch (const polya::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
}
