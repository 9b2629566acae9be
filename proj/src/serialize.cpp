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

#include "addmds/serialize.hpp"

#include <algorithm>

#include "addmds/error.hpp"

namespace addmds {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::uint64_t uint_field(const json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_number_unsigned()) bad(std::string("\"") + key + "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
}

}  // namespace

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::Parse, "malformed JSON at line " + std::to_string(line) + ", column " +
                                          std::to_string(col));
    }
}

json tower_to_json(const FieldTower& t) {
    return {{"p", t.p()}, {"e", t.e()}, {"h", t.h()}, {"modulus", t.modulus()},
            {"omega", elem_to_json(t, t.omega())}};
}

TowerPtr tower_from_json(const json& j) {
    const auto p = uint_field(j, "p"), e = uint_field(j, "e"), h = uint_field(j, "h");
    if (p > 1u << 16 || e > 64 || h > 64) bad("field parameters out of range");
    auto t = FieldTower::create(static_cast<unsigned>(p), static_cast<unsigned>(e), static_cast<unsigned>(h));
    if (j.contains("modulus") && j.at("modulus") != json(t->modulus()))
        bad("modulus differs from the canonical one for this tower");
    if (j.contains("omega") && elem_from_json(*t, j.at("omega")) != t->omega())
        bad("omega differs from the canonical primitive element");
    return t;
}

json elem_to_json(const FieldTower& t, Elem x) { return t.to_digits(x); }

Elem elem_from_json(const FieldTower& t, const json& j) {
    if (!j.is_array()) bad("field element must be a digit array");
    if (j.size() > t.degree()) bad("field element has too many digits");
    std::vector<unsigned> d(t.degree(), 0);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_unsigned() || j[i].get<std::uint64_t>() >= t.p()) bad("digit outside [0, p)");
        d[i] = j[i].get<unsigned>();
    }
    return t.from_digits(d);
}

json poly_to_json(const LinPoly& f) {
    json a = json::array();
    for (auto c : f.coeffs()) a.push_back(elem_to_json(*f.tower(), c));
    return a;
}

LinPoly poly_from_json(const TowerPtr& t, const json& j) {
    if (!j.is_array() || j.size() != t->h()) bad("linearized polynomial must list h coefficients");
    std::vector<Elem> c;
    for (const auto& x : j) c.push_back(elem_from_json(*t, x));
    return LinPoly(t, std::move(c));
}

json matrix_to_json(const FieldTower& t, const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(elem_to_json(t, m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const FieldTower& t, const json& j) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    const std::size_t cols = j.empty() ? 0 : (j[0].is_array() ? j[0].size() : 0);
    Matrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != cols) bad("matrix rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = elem_from_json(t, j[r][c]);
    }
    return m;
}

json code_to_json(const AdditiveCode& c) {
    return {{"field", tower_to_json(*c.tower())},
            {"n", c.n()},
            {"k_fq", c.k_fq()},
            {"rows", matrix_to_json(*c.tower(), c.gen())}};
}

AdditiveCode code_from_json(const json& j) {
    auto t = tower_from_json(field(j, "field"));
    const auto n = uint_field(j, "n");
    const auto k = uint_field(j, "k_fq");
    if (k == 0) return AdditiveCode::zero_code(t, n);
    Matrix g = matrix_from_json(*t, field(j, "rows"));
    if (g.rows() != k || g.cols() != n) bad("rows do not match n and k_fq");
    return AdditiveCode(t, std::move(g));
}

json move_to_json(const EquivalenceMove& m) {
    json perm = json::array(), maps = json::array();
    for (auto p : m.perm) perm.push_back(p + 1);
    for (const auto& f : m.maps) maps.push_back(poly_to_json(f));
    return {{"perm", perm}, {"maps", maps}};
}

EquivalenceMove move_from_json(const TowerPtr& t, const json& j) {
    EquivalenceMove m;
    const auto& perm = field(j, "perm");
    const auto& maps = field(j, "maps");
    if (!perm.is_array() || !maps.is_array() || perm.size() != maps.size()) bad("perm and maps must have equal length");
    for (const auto& p : perm) {
        if (!p.is_number_unsigned() || p.get<std::uint64_t>() == 0) bad("positions are 1-based");
        m.perm.push_back(p.get<std::size_t>() - 1);
    }
    for (const auto& f : maps) m.maps.push_back(poly_from_json(t, f));
    return m;
}

const char* witness_status_name(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::Found:
            return "found";
        case WitnessStatus::NotEquivalent:
            return "not_equivalent";
        case WitnessStatus::Unknown:
            break;
    }
    return "unknown";
}

json witness_to_json(const LinearWitness& w) {
    json j = {{"status", witness_status_name(w.status)},
              {"space_size", w.space_size},
              {"examined", w.examined},
              {"standard_move", move_to_json(w.standard_move)}};
    if (w.g) {
        j["g"] = poly_to_json(*w.g);
        j["a"] = matrix_to_json(*w.g->tower(), w.a);
    }
    return j;
}

json system_to_json(const ProjectiveHSystem& s) {
    const auto& t = *s.tower;
    json elems = json::array();
    for (const auto& sub : s.elements) {
        json basis = json::array();
        for (std::size_t r = 0; r < sub.basis().rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < sub.basis().cols(); ++c) row.push_back(t.base_index(sub.basis()(r, c)));
            basis.push_back(std::move(row));
        }
        elems.push_back({{"dim", sub.dim()}, {"basis", std::move(basis)}});
    }
    return {{"field", tower_to_json(t)}, {"ambient", s.ambient}, {"elements", std::move(elems)}};
}

namespace {

json triple_to_json(const FieldTower& t, const PropTriple& tr) {
    return json::array({elem_to_json(t, tr.a), elem_to_json(t, tr.b), elem_to_json(t, tr.c)});
}

}  // namespace

json prop_witness_to_json(const PropWitness& w) {
    const auto& t = *w.f.tower();
    json triples = json::array();
    for (const auto& tr : w.triples) triples.push_back(triple_to_json(t, tr));
    return {{"f", poly_to_json(w.f)}, {"g", poly_to_json(w.g)}, {"m", w.triples.size()}, {"triples", triples}};
}

json certificate_to_json(const ZeroCoeffCertificate& c) {
    const auto& t = *c.f.tower();
    json triples = json::array(), b = json::array(), cc = json::array();
    for (const auto& tr : c.triples) triples.push_back(triple_to_json(t, tr));
    for (const auto& v : c.b) {
        json row = json::array();
        for (auto x : v) row.push_back(elem_to_json(t, x));
        b.push_back(row);
    }
    for (const auto& v : c.c) {
        json row = json::array();
        for (auto x : v) row.push_back(elem_to_json(t, x));
        cc.push_back(row);
    }
    return {{"f_shift", c.f_shift},
            {"g_shift", c.g_shift},
            {"f", poly_to_json(c.f)},
            {"g", poly_to_json(c.g)},
            {"m_hat_f", matrix_to_json(t, c.m_hat_f)},
            {"m_hat_g", matrix_to_json(t, c.m_hat_g)},
            {"d_f", matrix_to_json(t, c.d_f)},
            {"d_g", matrix_to_json(t, c.d_g)},
            {"l", matrix_to_json(t, c.l)},
            {"triples", triples},
            {"b", b},
            {"c", cc},
            {"identity_holds", c.identity_holds},
            {"shift_holds", c.shift_holds}};
}

json pair_record_to_json(const PairRecord& r) {
    return {{"f", poly_to_json(r.f)},
            {"g", poly_to_json(r.g)},
            {"m", r.m},
            {"zero_counts", json::array({r.zeros_f, r.zeros_g})},
            {"certificate_ok", r.certificate_ok},
            {"violation", r.violation}};
}

json zero_coeff_report_to_json(const ZeroCoeffReport& r) {
    json recs = json::array();
    for (const auto& x : r.records) recs.push_back(pair_record_to_json(x));
    json hist = json::object();
    for (std::size_t m = 0; m < r.m_histogram.size(); ++m)
        if (r.m_histogram[m]) hist[std::to_string(m)] = r.m_histogram[m];
    return {{"bound", r.bound},
            {"pairs", r.pairs},
            {"qualifying", r.qualifying},
            {"violations", r.violations},
            {"certificate_failures", r.certificate_failures},
            {"triples_certified", r.triples_certified},
            {"m_histogram", hist},
            {"records", recs},
            {"ok", r.ok()}};
}

json inverse_lemma_report_to_json(const InverseLemmaReport& r) {
    return {{"m", r.m},
            {"m_f_inverse", r.m_f_inverse},
            {"m_g_inverse", r.m_g_inverse},
            {"transformed_f", prop_witness_to_json(r.transformed_f)},
            {"transformed_g", prop_witness_to_json(r.transformed_g)},
            {"transformed_f_valid", r.transformed_f_valid},
            {"transformed_g_valid", r.transformed_g_valid},
            {"ok", r.ok()}};
}

json inverse_sweep_report_to_json(const InverseSweepReport& r) {
    json failing = json::array();
    for (const auto& [f, g] : r.failing) failing.push_back({{"f", poly_to_json(f)}, {"g", poly_to_json(g)}});
    return {{"pairs", r.pairs}, {"violations", r.violations}, {"failing", failing}, {"ok", r.violations == 0}};
}

json two_nonzero_report_to_json(const TwoNonZeroReport& r) {
    json failing = json::array();
    for (const auto& f : r.failing) failing.push_back(poly_to_json(f));
    return {{"examined", r.examined},
            {"qualifying", r.qualifying},
            {"violations", r.violations},
            {"failing", failing},
            {"ok", r.violations == 0}};
}

json lm_prop_report_to_json(const LmPropReport& r) {
    json recs = json::array();
    for (const auto& x : r.records) recs.push_back(pair_record_to_json(x));
    return {{"n", r.n},
            {"m", r.m},
            {"theorem_threshold", r.theorem_threshold ? json(*r.theorem_threshold) : json(nullptr)},
            {"pairs", r.pairs},
            {"satisfying", r.satisfying},
            {"counterexamples", r.counterexamples},
            {"records", recs},
            {"ok", r.counterexamples == 0}};
}

json k4_example_to_json(const K4Example& ex) {
    const auto& t = *ex.tower;
    return {{"field", tower_to_json(t)},
            {"n", ex.code.n()},
            {"base", matrix_to_json(t, ex.base)},
            {"alpha", elem_to_json(t, ex.alpha)},
            {"beta", elem_to_json(t, ex.beta)},
            {"g", poly_to_json(ex.g)},
            {"code", code_to_json(ex.code)}};
}

K4Example k4_example_from_json(const json& j) {
    auto t = tower_from_json(field(j, "field"));
    Matrix base = matrix_from_json(*t, field(j, "base"));
    auto ex = K4Example::make(t, base, elem_from_json(*t, field(j, "alpha")), elem_from_json(*t, field(j, "beta")),
                              poly_from_json(t, field(j, "g")));
    if (j.contains("code") && !same_code(code_from_json(j.at("code")), ex.code))
        throw Error(ErrorKind::InvalidArgument, "stored code differs from the construction");
    return ex;
}

json k4_report_to_json(const K4Report& r) {
    json j = {{"mds_bruteforce", r.mds_bruteforce},
              {"mds_condition", r.mds_condition},
              {"projection_from_4", witness_status_name(r.proj_fourth)},
              {"projection_from_3", witness_status_name(r.proj_third)},
              {"full_code", witness_status_name(r.full)},
              {"full_space", r.full_space},
              {"descent",
               {{"n", r.n},
                {"union_size", r.union_size},
                {"nq_rest", {{"lower", r.nq_rest.lower}, {"upper", r.nq_rest.upper}}},
                {"bound", r.descent_bound},
                {"consistent", r.descent_consistent}}},
              {"ok", r.ok()}};
    if (r.proj_third_g) j["projection_from_3_g"] = poly_to_json(*r.proj_third_g);
    return j;
}

}  // namespace addmds
