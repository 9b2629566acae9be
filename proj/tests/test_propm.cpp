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

#include <doctest.h>

#include <random>

#include "addmds/error.hpp"
#include "addmds/propm.hpp"
#include "oracles.hpp"

using namespace addmds;

namespace {

std::vector<oracle::Triple> as_oracle(const std::vector<PropTriple>& ts) {
    std::vector<oracle::Triple> out;
    for (const auto& t : ts) out.push_back({t.a, t.b, t.c});
    return out;
}

}  // namespace

TEST_CASE("prop triples agree with evaluation on every pair over F_4") {
    auto t = FieldTower::create(2, 1, 2);
    const auto polys = invertible_linpolys(t);
    for (const auto& f : polys)
        for (const auto& g : polys) {
            const auto ts = prop_triples(f, g);
            CHECK(as_oracle(ts) == oracle::brute_triples(f, g));
            CHECK(std::find(ts.begin(), ts.end(), PropTriple{1, 1, 1}) != ts.end());
            const auto r = max_prop_m(f, g);
            CHECK(r.m == oracle::brute_max_matching(as_oracle(ts)));
            CHECK(is_valid_witness(r.witness));
            CHECK(r.witness.triples.front() == PropTriple{1, 1, 1});
        }
}

TEST_CASE("prop triples agree with evaluation on sampled pairs") {
    std::mt19937_64 rng(211);
    for (auto t : {FieldTower::create(2, 1, 3), FieldTower::create(3, 1, 2)}) {
        for (int trial = 0; trial < 12; ++trial) {
            const auto f = oracle::random_invertible(t, rng), g = oracle::random_invertible(t, rng);
            const auto ts = prop_triples(f, g);
            CHECK(as_oracle(ts) == oracle::brute_triples(f, g));
            for (const auto& tr : ts) CHECK(is_prop_triple(f, g, tr));
            const auto r = max_prop_m(f, g);
            CHECK(r.m <= t->size() - 1);
            CHECK(is_valid_witness(r.witness));
            if (ts.size() <= 40) CHECK(r.m == oracle::brute_max_matching(as_oracle(ts)));
            for (std::size_t m = 0; m <= t->size() - 1; ++m)
                CHECK(has_prop_m(ConjugateTable(f), ConjugateTable(g), m) == (m <= r.m));
        }
    }
}

TEST_CASE("identity pair") {
    for (auto t : {FieldTower::create(2, 1, 2), FieldTower::create(2, 1, 3), FieldTower::create(3, 1, 2)}) {
        const auto x = LinPoly::identity(t);
        const auto ts = prop_triples(x, x);
        CHECK(ts.size() == (t->size() - 1) * (t->size() - 1));
        for (const auto& tr : ts) CHECK(tr.c == t->mul(tr.a, tr.b));
    }
}

TEST_CASE("monomial pairs") {
    // F_4 and F_8: the scalar family (a, a, a^2) reaches q^h - 1.
    auto f4 = FieldTower::create(2, 1, 2);
    CHECK(max_prop_m(LinPoly::identity(f4), LinPoly::identity(f4)).m == 3);
    auto f8 = FieldTower::create(2, 1, 3);
    CHECK(max_prop_m(LinPoly::monomial(f8, 3, 1), LinPoly::monomial(f8, 5, 2)).m == 7);
    // F_9: c = ab is the cyclic group of order 8, which has no transversal.
    auto f9 = FieldTower::create(3, 1, 2);
    const auto x = LinPoly::identity(f9);
    const auto r = max_prop_m(x, x);
    CHECK(r.m == oracle::brute_max_matching(as_oracle(prop_triples(x, x))));
    CHECK(r.m == 7);
    CHECK(max_prop_m(LinPoly::monomial(f9, 2, 1), LinPoly::monomial(f9, 7, 0)).m == 7);
}

TEST_CASE("thresholds and bounds") {
    CHECK(zero_coeff_bound(*FieldTower::create(3, 1, 2)) == 5);
    CHECK(zero_coeff_bound(*FieldTower::create(2, 1, 2)) == 3);
    CHECK(zero_coeff_bound(*FieldTower::create(2, 1, 3)) == 5);
    CHECK(zero_coeff_bound(*FieldTower::create(3, 1, 3)) == 9);
    CHECK(k3_threshold(*FieldTower::create(3, 1, 2)) == 9u);
    CHECK(k3_threshold(*FieldTower::create(2, 1, 3)) == 8u);
    CHECK(k3_threshold(*FieldTower::create(3, 1, 3)) == 12u);
    CHECK_FALSE(k3_threshold(*FieldTower::create(2, 1, 4)));
}

TEST_CASE("shift matrix") {
    for (auto t : {FieldTower::create(2, 1, 3), FieldTower::create(3, 1, 2), FieldTower::create(2, 1, 4)}) {
        const auto l = shift_matrix(*t);
        for (Elem b = 0; b < t->size(); ++b) {
            std::vector<Elem> v, phi;
            for (unsigned i = 1; i < t->h(); ++i) v.push_back(t->sub(t->frob_pow(b, i), b));
            for (auto x : v) phi.push_back(t->frobenius(x));
            CHECK(mat_vec(*t, l, v) == phi);
        }
        CHECK(rank(*t, l) == t->h() - 1);
    }
}

TEST_CASE("certificate identity") {
    auto t = FieldTower::create(3, 1, 2);
    const auto x = LinPoly::identity(t);
    PropWitness w{x, x, {{1, 1, 1}}};
    const auto c = zero_coeff_certificate(w);
    CHECK(c.identity_holds);
    CHECK(c.b[0] == std::vector<Elem>{0});
    CHECK(c.c[0] == std::vector<Elem>{0});

    // f_0 = 0 forces the monomial shift
    std::mt19937_64 rng(223);
    for (auto tw : {FieldTower::create(3, 1, 2), FieldTower::create(2, 1, 3)}) {
        int shifted = 0;
        for (int trial = 0; trial < 40; ++trial) {
            auto f = oracle::random_invertible(tw, rng), g = oracle::random_invertible(tw, rng);
            if (trial % 3 == 0) f = lp_compose(f, LinPoly::monomial(tw, 1, 1));
            const auto r = max_prop_m(f, g);
            const auto cert = zero_coeff_certificate(r.witness);
            CHECK(cert.identity_holds);
            CHECK(cert.shift_holds);
            CHECK(cert.f.coeff(0) != 0);
            CHECK(cert.g.coeff(0) != 0);
            CHECK(zero_coeff_count(cert.f) == zero_coeff_count(f));
            shifted += cert.f_shift != 0;
            // normalized triples are triples of the normalized pair
            for (const auto& tr : cert.triples) CHECK(is_prop_triple(cert.f, cert.g, tr));
        }
        CHECK(shifted > 0);
    }
}

TEST_CASE("zero coefficient lemma") {
    auto r32 = verify_zero_coeff_lemma(FieldTower::create(3, 1, 2));
    CHECK(r32.bound == 5);
    CHECK(r32.pairs == 48 * 48);
    CHECK(r32.ok());
    CHECK(r32.qualifying > 0);
    for (const auto& rec : r32.records)
        if (rec.m > 5) {
            CHECK(is_monomial(rec.f));
            CHECK(is_monomial(rec.g));
        }

    auto r22 = verify_zero_coeff_lemma(FieldTower::create(2, 1, 2));
    CHECK(r22.bound == 3);
    CHECK(r22.qualifying == 0);
    CHECK(r22.ok());

    CHECK_THROWS_AS(verify_zero_coeff_lemma(FieldTower::create(5, 1, 2), 100), Error);
}

TEST_CASE("inverse lemma") {
    auto t = FieldTower::create(2, 1, 2);
    const auto sweep = verify_inverse_lemma_sweep(t, 0, 0);
    CHECK(sweep.pairs == 36);
    CHECK(sweep.violations == 0);

    auto x = LinPoly::identity(t);
    const auto r = verify_inverse_lemma(x, x);
    CHECK(r.m == 3);
    CHECK(r.m_f_inverse == 3);
    CHECK(r.m_g_inverse == 3);

    auto t9 = FieldTower::create(3, 1, 2);
    const auto m = verify_inverse_lemma(LinPoly::monomial(t9, 2, 1), LinPoly::monomial(t9, 5, 0));
    CHECK(m.transformed_f_valid);
    CHECK(m.transformed_g_valid);
    CHECK(m.ok());

    const auto sampled = verify_inverse_lemma_sweep(t9, 200, 5, 3);
    CHECK(sampled.pairs == 200);
    CHECK(sampled.violations == 0);
}

TEST_CASE("two non-zero coefficients") {
    // over F_8 no binomial is invertible, so the statement is vacuous there
    const auto r = verify_two_nonzero_lemma(FieldTower::create(2, 1, 3));
    CHECK(r.examined == 512);
    CHECK(r.qualifying == 0);
    const auto r3 = verify_two_nonzero_lemma(FieldTower::create(3, 1, 2));
    CHECK(r3.qualifying > 0);
    CHECK(r3.violations == 0);
    CHECK(r.violations == 0);
    CHECK_THROWS_AS(verify_two_nonzero_lemma(FieldTower::create(2, 1, 1)), Error);
}

TEST_CASE("large Prop_m forces monomials") {
    const auto r = verify_lm_prop_implication(FieldTower::create(3, 1, 2), 9);
    CHECK(r.m == 6);
    CHECK(r.counterexamples == 0);
    CHECK(r.satisfying > 0);
    const auto r8 = verify_lm_prop_implication(FieldTower::create(2, 1, 3), 8, 1u << 14, 2);
    CHECK(r8.m == 5);
    CHECK(r8.counterexamples == 0);
    // small n: non-monomial pairs appear
    const auto low = verify_lm_prop_implication(FieldTower::create(3, 1, 2), 4);
    CHECK(low.counterexamples > 0);
}

TEST_CASE("sharding does not change reports") {
    auto t = FieldTower::create(3, 1, 2);
    const auto a = verify_zero_coeff_lemma(t, 1u << 14, 1);
    const auto b = verify_zero_coeff_lemma(t, 1u << 14, 4);
    CHECK(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].f == b.records[i].f);
        CHECK(a.records[i].g == b.records[i].g);
        CHECK(a.records[i].m == b.records[i].m);
    }
    CHECK(a.m_histogram == b.m_histogram);
}
