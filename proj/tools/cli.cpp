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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "addmds/error.hpp"
#include "addmds/serialize.hpp"

namespace addmds {

namespace {

struct RunConfig {
    unsigned p = 2, e = 1, h = 2;
    std::optional<std::size_t> k, n;
    std::uint64_t budget_codewords = kDefaultCodewordBudget;
    std::uint64_t budget_candidates = kDefaultCandidateBudget;
    std::size_t shards = 1;
    std::string in, out;
    std::uint64_t seed = 1;
    std::vector<std::size_t> positions;  // 1-based
    std::string mode = "max-m";
    std::uint64_t samples = 0;
};

// Non-zero exit without a report; the message goes to stderr.
struct Failure {
    int status;
    std::string message;
};

struct Outcome {
    json report;
    bool passed = true;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

json read_input(const RunConfig& cfg) {
    if (cfg.in.empty()) throw Failure{2, "--in is required"};
    try {
        return parse_json_text(read_file(cfg.in));
    } catch (const Error& e) {
        throw Error(e.kind(), cfg.in + ": " + e.what());
    }
}

TowerPtr tower_of(const RunConfig& cfg) { return FieldTower::create(cfg.p, cfg.e, cfg.h); }

std::vector<std::size_t> zero_based(const std::vector<std::size_t>& pos) {
    std::vector<std::size_t> out;
    for (auto p : pos) {
        if (p == 0) throw Failure{2, "positions are 1-based"};
        out.push_back(p - 1);
    }
    return out;
}

Outcome cmd_field(const RunConfig& cfg) {
    auto t = tower_of(cfg);
    json base = json::array(), dual = json::array();
    for (auto x : t->base_field()) base.push_back(elem_to_json(*t, x));
    for (auto x : t->dual_basis()) dual.push_back(elem_to_json(*t, x));
    return {{{"field", tower_to_json(*t)},
             {"q", t->q()},
             {"size", t->size()},
             {"base_field", base},
             {"dual_basis", dual}}};
}

Outcome cmd_rs(const RunConfig& cfg) {
    if (!cfg.k) throw Failure{2, "rs needs --k"};
    return {code_to_json(rs_code(tower_of(cfg), *cfg.k))};
}

std::string power(std::uint64_t base, std::string exp) { return std::to_string(base) + "^" + exp; }

Outcome cmd_check_mds(const RunConfig& cfg) {
    const auto c = code_from_json(read_input(cfg));
    const auto& t = *c.tower();
    const auto d = min_distance(c, cfg.budget_codewords);
    const bool brute = is_mds(c, cfg.budget_codewords);
    const bool sets = is_mds_by_information_sets(c);
    const auto k = c.message_length();
    std::string size = k ? power(t.size(), std::to_string(*k)) : power(t.q(), std::to_string(c.k_fq()));
    json rep = {{"n", c.n()},
                {"k", k ? json(*k) : json(nullptr)},
                {"k_fq", c.k_fq()},
                {"alphabet", t.size()},
                {"d", d},
                {"parameters", "(" + std::to_string(c.n()) + ", " + size + ", " + std::to_string(d) + ")"},
                {"mds", brute},
                {"mds_information_sets", sets},
                {"weight_enumerator", weight_enumerator(c, cfg.budget_codewords)}};
    if (k) rep["singleton_d"] = c.n() - *k + 1;
    return {rep, brute && sets};
}

Outcome cmd_project(const RunConfig& cfg) {
    if (cfg.positions.empty()) throw Failure{2, "project needs --positions"};
    const auto c = code_from_json(read_input(cfg));
    return {code_to_json(project(c, zero_based(cfg.positions)))};
}

Outcome cmd_standard_form(const RunConfig& cfg) {
    const auto c = code_from_json(read_input(cfg));
    const auto sf = to_standard_form(c);
    return {{{"code", code_to_json(sf.code)}, {"move", move_to_json(sf.move)}}};
}

Outcome cmd_linear_witness(const RunConfig& cfg) {
    const auto c = code_from_json(read_input(cfg));
    const auto w = linear_equivalence_witness(c, cfg.budget_candidates);
    if (w.status == WitnessStatus::Unknown)
        throw Error(ErrorKind::BudgetExceeded,
                    "witness space of " + std::to_string(w.space_size) + " candidates exceeds the budget");
    return {witness_to_json(w)};
}

Outcome cmd_geometry(const RunConfig& cfg) {
    const auto c = code_from_json(read_input(cfg));
    const auto& t = *c.tower();
    const auto sys = system_from_code(c);
    json rep = {{"system", system_to_json(sys)}};

    const auto hamming = min_distance(c, cfg.budget_codewords);
    const auto geometric = system_min_distance(sys, cfg.budget_codewords);
    rep["distance"] = {{"hamming", hamming}, {"hyperplane", geometric}, {"equal", hamming == geometric}};
    bool passed = hamming == geometric;

    try {
        rep["pseudo_arc"] = is_pseudo_arc(sys);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DimensionMismatch) throw;
        rep["pseudo_arc"] = nullptr;
    }

    if (auto lin = canonical_linear_generator(c)) {
        json points = json::array();
        for (const auto& el : system_from_code(*lin).elements) {
            const auto pt = desarguesian_membership(t, el.column_matrix());
            if (!pt) {
                passed = false;
                points.push_back(nullptr);
                continue;
            }
            json p = json::array();
            for (auto x : *pt) p.push_back(elem_to_json(t, x));
            points.push_back(p);
        }
        rep["spread_points"] = points;
    } else {
        rep["spread_points"] = nullptr;
    }

    if (!cfg.positions.empty()) {
        json proj = json::array();
        for (auto j : zero_based(cfg.positions)) {
            const auto quotient = project_system(sys, j);
            const auto shortened = project(c, {j});
            const auto dq = system_min_distance(quotient, cfg.budget_codewords);
            const auto dc = shortened.is_zero() ? 0 : min_distance(shortened, cfg.budget_codewords);
            proj.push_back({{"position", j + 1},
                            {"system", system_to_json(quotient)},
                            {"hyperplane_distance", dq},
                            {"code_distance", dc},
                            {"equal", dq == dc}});
            passed = passed && dq == dc;
        }
        rep["projections"] = proj;
    }
    return {rep, passed};
}

Outcome cmd_propm(const RunConfig& cfg) {
    const auto& mode = cfg.mode;
    if (mode == "max-m" || mode == "inverse" || mode == "certificate") {
        TowerPtr t;
        std::optional<LinPoly> f, g;
        if (cfg.in.empty()) {
            if (mode == "inverse") {
                auto tw = tower_of(cfg);
                const auto r = verify_inverse_lemma_sweep(tw, cfg.samples, cfg.seed, cfg.shards);
                json rep = inverse_sweep_report_to_json(r);
                rep["field"] = tower_to_json(*tw);
                rep["samples"] = cfg.samples;
                rep["seed"] = cfg.seed;
                return {rep, r.violations == 0};
            }
            t = tower_of(cfg);
            f = g = LinPoly::identity(t);
        } else {
            const auto j = read_input(cfg);
            t = tower_from_json(j.at("field"));
            f = poly_from_json(t, j.at("f"));
            g = poly_from_json(t, j.at("g"));
        }
        if (mode == "inverse") {
            const auto r = verify_inverse_lemma(*f, *g);
            return {inverse_lemma_report_to_json(r), r.ok()};
        }
        const auto r = max_prop_m(*f, *g);
        json rep = {{"m", r.m}, {"witness", prop_witness_to_json(r.witness)}, {"nodes", r.nodes}};
        if (mode == "certificate") {
            const auto cert = zero_coeff_certificate(r.witness);
            rep["certificate"] = certificate_to_json(cert);
            return {rep, cert.identity_holds && cert.shift_holds};
        }
        return {rep};
    }
    auto t = tower_of(cfg);
    json rep;
    bool ok = true;
    if (mode == "zero-coeff") {
        const auto r = verify_zero_coeff_lemma(t, cfg.budget_candidates, cfg.shards);
        rep = zero_coeff_report_to_json(r);
        ok = r.ok();
    } else if (mode == "two-nonzero") {
        const auto r = verify_two_nonzero_lemma(t);
        rep = two_nonzero_report_to_json(r);
        ok = r.violations == 0;
    } else if (mode == "lm-prop") {
        std::uint64_t n = 0;
        if (cfg.n) {
            n = *cfg.n;
        } else if (auto th = k3_threshold(*t)) {
            n = *th;
        } else {
            throw Failure{2, "lm-prop needs --n for this tower"};
        }
        const auto r = verify_lm_prop_implication(t, n, cfg.budget_candidates, cfg.shards);
        rep = lm_prop_report_to_json(r);
        ok = r.counterexamples == 0;
    } else {
        throw Failure{2, "unknown propm mode '" + mode + "'"};
    }
    rep["field"] = tower_to_json(*t);
    return {rep, ok};
}

Outcome cmd_hunt_k4(const RunConfig& cfg) {
    auto t = tower_of(cfg);
    K4SearchOptions opts;
    opts.n = cfg.n.value_or(6);
    opts.candidate_budget = cfg.budget_candidates;
    opts.shards = cfg.shards;
    const auto res = k4_example_search(t, opts);
    json rep = {{"field", tower_to_json(*t)},
                {"search", {{"n", opts.n}, {"space_size", res.space_size}, {"examined", res.examined}}}};
    if (!res.example) {
        rep["example"] = nullptr;
        return {rep, false};
    }
    const auto vr = verify_k4_example(*res.example, cfg.budget_codewords, cfg.budget_candidates);
    rep["example"] = k4_example_to_json(*res.example);
    rep["report"] = k4_report_to_json(vr);
    return {rep, vr.ok()};
}

Outcome cmd_verify_example(const RunConfig& cfg) {
    const auto j = read_input(cfg);
    const auto ex = k4_example_from_json(j.contains("example") ? j.at("example") : j);
    const auto vr = verify_k4_example(ex, cfg.budget_codewords, cfg.budget_candidates);
    return {{{"report", k4_report_to_json(vr)}}, vr.ok()};
}

void emit(const RunConfig& cfg, const json& report, std::ostream& out) {
    const std::string text = report.dump(2) + "\n";
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + cfg.out);
    f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Additive MDS code toolkit", "addmds"};
    app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--p", cfg.p, "characteristic")->check(CLI::PositiveNumber);
    app.add_option("--e", cfg.e, "q = p^e")->check(CLI::PositiveNumber);
    app.add_option("--h", cfg.h, "extension degree over F_q")->check(CLI::PositiveNumber);
    app.add_option("--k", cfg.k, "dimension over F_{q^h}");
    app.add_option("--n", cfg.n, "length");
    app.add_option("--budget-codewords", cfg.budget_codewords)->check(CLI::PositiveNumber);
    app.add_option("--budget-candidates", cfg.budget_candidates)->check(CLI::PositiveNumber);
    app.add_option("--shards", cfg.shards)->check(CLI::PositiveNumber);
    app.add_option("--in", cfg.in, "input JSON");
    app.add_option("--out", cfg.out, "report path (stdout when omitted)");
    app.add_option("--seed", cfg.seed);
    app.add_option("--positions", cfg.positions, "1-based coordinate positions");
    app.add_option("--mode", cfg.mode, "propm: max-m, certificate, inverse, zero-coeff, two-nonzero, lm-prop");
    app.add_option("--samples", cfg.samples, "propm inverse: sampled pairs, 0 for exhaustive");

    using Cmd = Outcome (*)(const RunConfig&);
    const std::vector<std::tuple<const char*, const char*, Cmd>> commands = {
        {"field", "describe the field tower", cmd_field},
        {"rs", "doubly extended Reed-Solomon code", cmd_rs},
        {"check-mds", "minimum distance and MDS checks", cmd_check_mds},
        {"project", "shorten at --positions", cmd_project},
        {"standard-form", "normalize an MDS code", cmd_standard_form},
        {"linear-witness", "search for an equivalent linear code", cmd_linear_witness},
        {"geometry", "projective system, distance bridge, spread membership", cmd_geometry},
        {"propm", "Prop_m tools and lemma verifiers", cmd_propm},
        {"hunt-k4", "search the k = 4 example", cmd_hunt_k4},
        {"verify-example", "re-verify a stored k = 4 example", cmd_verify_example},
    };
    std::optional<Cmd> chosen;
    for (const auto& [name, help, fn] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->callback([&chosen, fn = fn] { chosen = fn; });
    }

    std::vector<const char*> argv{"addmds"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }
    if (std::string(app.get_subcommands().front()->get_name()) == "hunt-k4" && cfg.out.empty())
        cfg.out = "found-example.json";

    try {
        const Outcome o = (*chosen)(cfg);
        emit(cfg, o.report, out);
        if (!o.passed) {
            err << "assertion failed\n";
            return 1;
        }
        return 0;
    } catch (const Failure& f) {
        err << f.message << "\n";
        return f.status;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "Parse: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace addmds
