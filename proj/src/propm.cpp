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

#include "addmds/propm.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "addmds/error.hpp"
#include "addmds/matching3d.hpp"
#include "addmds/parallel.hpp"

namespace addmds {

namespace {

LinPoly scalar_compose(const LinPoly& f, Elem b, const LinPoly& f_inv) { return conjugate(f, f_inv, b); }

std::vector<Elem> normalize(const FieldTower& t, const LinPoly& p, Elem& lead) {
    lead = 0;
    for (auto c : p.coeffs())
        if (c) {
            lead = c;
            break;
        }
    const Elem il = t.inv(lead);
    std::vector<Elem> out(p.h());
    for (unsigned i = 0; i < p.h(); ++i) out[i] = t.mul(il, p.coeff(i));
    return out;
}

std::uint64_t checked_pair_count(const FieldTower& t, std::uint64_t pair_budget) {
    // q^{h^2} coefficient vectors per polynomial
    std::uint64_t space = 1;
    for (unsigned i = 0; i < t.h(); ++i) {
        if (space > pair_budget / t.size()) {
            throw Error(ErrorKind::BudgetExceeded,
                        "coefficient space exceeds the pair budget " + std::to_string(pair_budget));
        }
        space *= t.size();
    }
    return space;
}

}  // namespace

bool is_prop_triple(const LinPoly& f, const LinPoly& g, const PropTriple& tr) {
    require_same_tower(*f.tower(), *g.tower());
    if (!tr.a || !tr.b || !tr.c) return false;
    const auto lhs = lp_scale(tr.a, conjugate(f, tr.b));
    return lhs == conjugate(g, tr.c);
}

ConjugateTable::ConjugateTable(const LinPoly& f) : f_(f) {
    const auto& t = *f.tower();
    const auto f_inv = lp_invert(f);
    const std::size_t n = t.size() - 1;
    shapes_.resize(n);
    leads_.resize(n);
    for (std::size_t l = 0; l < n; ++l) {
        const auto c = scalar_compose(f, t.omega_pow(l), f_inv);
        shapes_[l] = normalize(t, c, leads_[l]);
    }
}

std::vector<PropTriple> prop_triples(const LinPoly& f, const LinPoly& g) {
    return prop_triples(ConjugateTable(f), ConjugateTable(g));
}

std::vector<PropTriple> prop_triples(const ConjugateTable& tf, const ConjugateTable& tg) {
    require_same_tower(*tf.poly().tower(), *tg.poly().tower());
    const auto& t = *tf.poly().tower();
    std::map<std::vector<Elem>, std::vector<std::size_t>> by_shape;
    for (std::size_t lc = 0; lc < tg.count(); ++lc) by_shape[tg.shape(lc)].push_back(lc);
    std::vector<PropTriple> out;
    for (std::size_t lb = 0; lb < tf.count(); ++lb) {
        auto it = by_shape.find(tf.shape(lb));
        if (it == by_shape.end()) continue;
        const Elem inv_lead = t.inv(tf.lead(lb));
        for (auto lc : it->second)
            out.push_back({t.mul(tg.lead(lc), inv_lead), t.omega_pow(lb), t.omega_pow(lc)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_witness(const PropWitness& w) {
    const auto& ts = w.triples;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!is_prop_triple(w.f, w.g, ts[i])) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (ts[i].a == ts[j].a || ts[i].b == ts[j].b || ts[i].c == ts[j].c) return false;
    }
    return true;
}

namespace {

struct MatchingInput {
    std::vector<PropTriple> triples;
    std::vector<Triple3> edges;
    std::optional<std::size_t> unit;  // index of (1,1,1)
    std::size_t domain = 0;
};

MatchingInput matching_input(const ConjugateTable& f, const ConjugateTable& g) {
    const auto& t = *f.poly().tower();
    if (t.size() - 1 > 256) throw Error(ErrorKind::BudgetExceeded, "Prop_m matching supports at most 256 units");
    MatchingInput in;
    in.triples = prop_triples(f, g);
    in.domain = t.size() - 1;
    for (std::size_t i = 0; i < in.triples.size(); ++i) {
        const auto& tr = in.triples[i];
        in.edges.push_back({t.log(tr.a), t.log(tr.b), t.log(tr.c)});
        if (tr.a == 1 && tr.b == 1 && tr.c == 1) in.unit = i;
    }
    return in;
}

PropWitness witness_from(const MatchingInput& in, const std::vector<std::size_t>& chosen, const LinPoly& f,
                         const LinPoly& g) {
    PropWitness w{f, g, {}};
    for (auto i : chosen) w.triples.push_back(in.triples[i]);
    // (1,1,1) leads when present; the rest stay sorted.
    auto it = std::find(w.triples.begin(), w.triples.end(), PropTriple{1, 1, 1});
    if (it != w.triples.end()) std::rotate(w.triples.begin(), it, it + 1);
    return w;
}

}  // namespace

PropMResult max_prop_m(const LinPoly& f, const LinPoly& g, std::uint64_t node_budget) {
    return max_prop_m(ConjugateTable(f), ConjugateTable(g), node_budget);
}

PropMResult max_prop_m(const ConjugateTable& f, const ConjugateTable& g, std::uint64_t node_budget) {
    const auto in = matching_input(f, g);
    PropMResult r;
    std::vector<std::size_t> best;
    if (in.unit) {
        auto m = max_3d_matching(in.edges, in.domain, in.unit, in.domain, 0, node_budget);
        r.nodes += m.nodes;
        best = std::move(m.chosen);
    }
    if (best.size() < in.domain) {
        // Something strictly larger without (1,1,1)?
        auto m = max_3d_matching(in.edges, in.domain, std::nullopt, in.domain, best.size() + 1,
                                 node_budget > r.nodes ? node_budget - r.nodes : 1);
        r.nodes += m.nodes;
        if (m.chosen.size() > best.size()) best = std::move(m.chosen);
    }
    r.m = best.size();
    r.witness = witness_from(in, best, f.poly(), g.poly());
    return r;
}

bool has_prop_m(const ConjugateTable& f, const ConjugateTable& g, std::size_t m, PropWitness* witness,
                std::uint64_t node_budget) {
    const auto in = matching_input(f, g);
    if (m == 0) {
        if (witness) *witness = PropWitness{f.poly(), g.poly(), {}};
        return true;
    }
    if (m > in.domain) return false;
    std::vector<std::size_t> found;
    std::uint64_t used = 0;
    if (in.unit) {
        auto r = max_3d_matching(in.edges, in.domain, in.unit, m, m, node_budget);
        used = r.nodes;
        found = std::move(r.chosen);
    }
    if (found.size() < m) {
        auto r = max_3d_matching(in.edges, in.domain, std::nullopt, m, m, node_budget > used ? node_budget - used : 1);
        found = std::move(r.chosen);
    }
    if (found.size() < m) return false;
    if (witness) *witness = witness_from(in, found, f.poly(), g.poly());
    return true;
}

Matrix shift_matrix(const FieldTower& t) {
    const unsigned h = t.h();
    if (h < 2) return Matrix(0, 0);
    Matrix l(h - 1, h - 1);
    const Elem minus_one = t.neg(1);
    for (unsigned r = 0; r + 1 < h; ++r) {
        l(r, 0) = minus_one;
        if (r + 2 < h) l(r, r + 1) = 1;
    }
    return l;
}

std::uint64_t zero_coeff_bound(const FieldTower& t) {
    std::uint64_t qh1 = 1;
    for (unsigned i = 0; i + 1 < t.h(); ++i) qh1 *= t.q();
    return std::max<std::uint64_t>(qh1, t.h() * t.q() - 1);
}

namespace {

// Smallest e with f(X^{q^e}) having a non-zero constant coefficient.
unsigned normalizing_shift(const LinPoly& f) {
    const unsigned h = f.h();
    for (unsigned e = 0; e < h; ++e)
        if (f.coeff((h - e) % h)) return e;
    throw Error(ErrorKind::NotInvertible, "zero polynomial");
}

LinPoly shift(const LinPoly& f, unsigned e) {
    return lp_compose(f, LinPoly::monomial(f.tower(), 1, e % f.h()));
}

// Row l, column i (both 1..h-1) of the transposed inverse Dickson matrix.
Matrix m_hat(const LinPoly& f) {
    const unsigned h = f.h();
    const Matrix mt = dickson_matrix(lp_invert(f)).transpose();
    std::vector<std::size_t> idx;
    for (unsigned i = 1; i < h; ++i) idx.push_back(i);
    return mt.submatrix(idx, idx);
}

Matrix diag_tail(const LinPoly& f) {
    const unsigned h = f.h();
    Matrix d(h - 1, h - 1);
    for (unsigned i = 1; i < h; ++i) d(i - 1, i - 1) = f.coeff(i);
    return d;
}

std::vector<Elem> differences(const FieldTower& t, Elem b) {
    std::vector<Elem> v;
    for (unsigned i = 1; i < t.h(); ++i) v.push_back(t.sub(t.frob_pow(b, i), b));
    return v;
}

}  // namespace

ZeroCoeffCertificate zero_coeff_certificate(const PropWitness& w) {
    const auto& t = *w.f.tower();
    ZeroCoeffCertificate cert;
    cert.f_shift = normalizing_shift(w.f);
    cert.g_shift = normalizing_shift(w.g);
    cert.f = shift(w.f, cert.f_shift);
    cert.g = shift(w.g, cert.g_shift);
    cert.m_hat_f = m_hat(cert.f);
    cert.m_hat_g = m_hat(cert.g);
    cert.d_f = diag_tail(cert.f);
    cert.d_g = diag_tail(cert.g);
    cert.l = shift_matrix(t);
    const unsigned h = t.h();
    const Matrix left_f = mat_mul(t, cert.m_hat_f, cert.d_f);
    const Matrix left_g = mat_mul(t, cert.m_hat_g, cert.d_g);
    cert.identity_holds = true;
    cert.shift_holds = true;
    for (const auto& tr : w.triples) {
        PropTriple n{tr.a, t.frob_pow(tr.b, (h - cert.f_shift) % h), t.frob_pow(tr.c, (h - cert.g_shift) % h)};
        cert.triples.push_back(n);
        auto bj = differences(t, n.b);
        auto cj = differences(t, n.c);
        auto lhs = mat_vec(t, left_f, bj);
        for (auto& x : lhs) x = t.mul(n.a, x);
        if (lhs != mat_vec(t, left_g, cj)) cert.identity_holds = false;
        for (const auto* v : {&bj, &cj}) {
            std::vector<Elem> phi(v->size());
            for (std::size_t i = 0; i < v->size(); ++i) phi[i] = t.frobenius((*v)[i]);
            if (phi != mat_vec(t, cert.l, *v)) cert.shift_holds = false;
        }
        cert.b.push_back(std::move(bj));
        cert.c.push_back(std::move(cj));
    }
    return cert;
}

ZeroCoeffReport verify_zero_coeff_lemma(const TowerPtr& tower, std::uint64_t pair_budget, std::size_t shards) {
    const auto& t = *tower;
    checked_pair_count(t, pair_budget);
    const auto polys = invertible_linpolys(tower);
    std::vector<ConjugateTable> tables;
    tables.reserve(polys.size());
    for (const auto& p : polys) tables.emplace_back(p);

    ZeroCoeffReport rep;
    rep.bound = zero_coeff_bound(t);
    rep.m_histogram.assign(t.size(), 0);

    struct Row {
        std::vector<PairRecord> records;
        std::vector<std::uint64_t> hist;
        std::uint64_t qualifying = 0, violations = 0, cert_fail = 0, certified = 0;
    };
    std::vector<Row> rows(polys.size());
    parallel_for(polys.size(), shards, [&](std::size_t i) {
        Row& row = rows[i];
        row.hist.assign(t.size(), 0);
        for (std::size_t j = 0; j < polys.size(); ++j) {
            const auto r = max_prop_m(tables[i], tables[j]);
            ++row.hist[r.m];
            const auto cert = zero_coeff_certificate(r.witness);
            const bool cert_ok = cert.identity_holds && cert.shift_holds;
            row.certified += r.witness.triples.size();
            PairRecord rec{polys[i], polys[j], r.m, zero_coeff_count(polys[i]), zero_coeff_count(polys[j]), cert_ok,
                           false};
            bool keep = !cert_ok;
            if (!cert_ok) ++row.cert_fail;
            if (r.m > rep.bound) {
                ++row.qualifying;
                keep = true;
                if (rec.zeros_f != rec.zeros_g || rec.zeros_f < 1) {
                    rec.violation = true;
                    ++row.violations;
                }
            }
            if (keep) row.records.push_back(std::move(rec));
        }
    });
    for (auto& row : rows) {
        rep.pairs += polys.size();
        rep.qualifying += row.qualifying;
        rep.violations += row.violations;
        rep.certificate_failures += row.cert_fail;
        rep.triples_certified += row.certified;
        for (std::size_t m = 0; m < row.hist.size(); ++m) rep.m_histogram[m] += row.hist[m];
        for (auto& r : row.records) rep.records.push_back(std::move(r));
    }
    return rep;
}

InverseLemmaReport verify_inverse_lemma(const LinPoly& f, const LinPoly& g) {
    const auto& t = *f.tower();
    const auto fi = lp_invert(f);
    const auto gi = lp_invert(g);
    InverseLemmaReport rep;
    const auto base = max_prop_m(f, g);
    rep.m = base.m;
    rep.m_f_inverse = max_prop_m(fi, lp_compose(fi, g)).m;
    rep.m_g_inverse = max_prop_m(gi, lp_compose(gi, f)).m;
    rep.transformed_f = {fi, lp_compose(fi, g), {}};
    rep.transformed_g = {gi, lp_compose(gi, f), {}};
    for (const auto& tr : base.witness.triples) {
        rep.transformed_f.triples.push_back({t.inv(tr.b), t.inv(tr.a), t.inv(tr.c)});
        rep.transformed_g.triples.push_back({t.inv(tr.c), tr.a, t.inv(tr.b)});
    }
    rep.transformed_f_valid = is_valid_witness(rep.transformed_f);
    rep.transformed_g_valid = is_valid_witness(rep.transformed_g);
    return rep;
}

InverseSweepReport verify_inverse_lemma_sweep(const TowerPtr& tower, std::uint64_t samples, std::uint64_t seed,
                                              std::size_t shards) {
    const auto polys = invertible_linpolys(tower);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (samples == 0) {
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (std::size_t j = 0; j < polys.size(); ++j) pairs.emplace_back(i, j);
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t s = 0; s < samples; ++s) {
            const std::size_t i = rng() % polys.size();
            const std::size_t j = rng() % polys.size();
            pairs.emplace_back(i, j);
        }
    }
    std::vector<char> bad(pairs.size(), 0);
    parallel_for(pairs.size(), shards, [&](std::size_t k) {
        bad[k] = !verify_inverse_lemma(polys[pairs[k].first], polys[pairs[k].second]).ok();
    });
    InverseSweepReport rep;
    rep.pairs = pairs.size();
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (bad[k]) {
            ++rep.violations;
            rep.failing.emplace_back(polys[pairs[k].first], polys[pairs[k].second]);
        }
    return rep;
}

TwoNonZeroReport verify_two_nonzero_lemma(const TowerPtr& tower) {
    const auto& t = *tower;
    const unsigned h = t.h();
    if (h < 2) throw Error(ErrorKind::InvalidArgument, "two non-zero coefficients need h >= 2");
    TwoNonZeroReport rep;
    for_each_linpoly(tower, [&](const LinPoly& f) {
        ++rep.examined;
        if (f.h() - zero_coeff_count(f) != 2) return true;
        for (unsigned s = 2; s <= h; ++s)
            if (h % s == 0 && is_semilinear(f, s)) return true;
        if (!lp_is_invertible(f)) return true;
        ++rep.qualifying;
        if (zero_coeff_count(lp_invert(f)) != 0) {
            ++rep.violations;
            rep.failing.push_back(f);
        }
        return true;
    });
    return rep;
}

std::optional<std::uint64_t> k3_threshold(const FieldTower& t) {
    const std::uint64_t q = t.q();
    // delta_{2,q}: the only base field with an extra position is F_2
    static constexpr std::uint64_t kDeltaQ2 = 1;
    switch (t.h()) {
        case 2:
            return 2 * q + 3;
        case 3:
            return q * q + 3 + (q == 2 ? kDeltaQ2 : 0);
        default:
            return std::nullopt;
    }
}

LmPropReport verify_lm_prop_implication(const TowerPtr& tower, std::uint64_t n, std::uint64_t pair_budget,
                                        std::size_t shards) {
    const auto& t = *tower;
    checked_pair_count(t, pair_budget);
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
    const auto polys = invertible_linpolys(tower);
    std::vector<ConjugateTable> tables;
    tables.reserve(polys.size());
    for (const auto& p : polys) tables.emplace_back(p);

    LmPropReport rep;
    rep.n = n;
    rep.m = n - 3;
    rep.theorem_threshold = k3_threshold(t);
    struct Row {
        std::uint64_t satisfying = 0;
        std::vector<PairRecord> bad;
    };
    std::vector<Row> rows(polys.size());
    parallel_for(polys.size(), shards, [&](std::size_t i) {
        for (std::size_t j = 0; j < polys.size(); ++j) {
            if (!has_prop_m(tables[i], tables[j], rep.m)) continue;
            ++rows[i].satisfying;
            if (is_monomial(polys[i]) && is_monomial(polys[j])) continue;
            rows[i].bad.push_back({polys[i], polys[j], rep.m, zero_coeff_count(polys[i]), zero_coeff_count(polys[j]),
                                   true, true});
        }
    });
    constexpr std::size_t kRecordCap = 64;
    for (auto& row : rows) {
        rep.pairs += polys.size();
        rep.satisfying += row.satisfying;
        rep.counterexamples += row.bad.size();
        for (auto& r : row.bad)
            if (rep.records.size() < kRecordCap) rep.records.push_back(std::move(r));
    }
    return rep;
}

}  // namespace addmds
