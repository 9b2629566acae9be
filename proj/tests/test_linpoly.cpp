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
#include "addmds/linpoly.hpp"
#include "oracles.hpp"

using namespace addmds;

namespace {

std::vector<TowerPtr> dickson_towers() {
    return {FieldTower::create(2, 1, 2), FieldTower::create(2, 1, 3), FieldTower::create(3, 1, 2)};
}

bool scalar_only(const LinPoly& f) {
    for (unsigned i = 1; i < f.h(); ++i)
        if (f.coeff(i)) return false;
    return true;
}

// f(alpha x) = sigma(alpha) f(x) for all alpha in F_{q^s} and some p-power sigma.
bool semilinear_by_table(const LinPoly& f, unsigned s) {
    const auto& t = *f.tower();
    const auto tab = oracle::table(f);
    for (unsigned i = 0; i < t.degree(); ++i) {
        std::uint64_t pi = 1;
        for (unsigned j = 0; j < i; ++j) pi *= t.p();
        bool ok = true;
        for (Elem a = 0; a < t.size() && ok; ++a) {
            if (!t.in_subfield(a, s)) continue;
            const Elem sa = t.pow(a, pi);
            for (Elem x = 0; x < t.size() && ok; ++x) ok = tab[t.mul(a, x)] == t.mul(sa, tab[x]);
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("evaluation matches the power-sum definition") {
    std::mt19937_64 rng(7);
    for (const auto& t : dickson_towers()) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Elem> c(t->h());
            for (auto& x : c) x = static_cast<Elem>(rng() % t->size());
            LinPoly f(t, c);
            const auto tab = oracle::table(f);
            for (Elem x = 0; x < t->size(); ++x) CHECK(lp_eval(f, x) == tab[x]);
        }
    }
}

TEST_CASE("composition matches composition of tables") {
    std::mt19937_64 rng(11);
    for (const auto& t : dickson_towers()) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Elem> a(t->h()), b(t->h());
            for (auto& x : a) x = static_cast<Elem>(rng() % t->size());
            for (auto& x : b) x = static_cast<Elem>(rng() % t->size());
            LinPoly f(t, a), g(t, b);
            const auto tf = oracle::table(f), tg = oracle::table(g), tfg = oracle::table(lp_compose(f, g));
            for (Elem x = 0; x < t->size(); ++x) CHECK(tfg[x] == tf[tg[x]]);
        }
    }
}

TEST_CASE("Dickson determinant decides invertibility exhaustively") {
    for (const auto& t : dickson_towers()) {
        std::size_t invertible = 0;
        for_each_linpoly(t, [&](const LinPoly& f) {
            const bool inj = oracle::injective(oracle::table(f));
            const bool det = dickson_determinant(f) != 0;
            CHECK(inj == det);
            CHECK(lp_is_invertible(f) == inj);
            if (inj) {
                ++invertible;
                const auto fi = lp_invert(f);
                CHECK(lp_compose(f, fi) == LinPoly::identity(t));
                CHECK(lp_compose(fi, f) == LinPoly::identity(t));
            } else {
                CHECK_THROWS_AS(lp_invert(f), Error);
            }
            return true;
        });
        // |GL(h, q)|
        std::uint64_t gl = 1, qh = 1;
        for (unsigned i = 0; i < t->h(); ++i) qh *= t->q();
        std::uint64_t qi = 1;
        for (unsigned i = 0; i < t->h(); ++i) {
            gl *= qh - qi;
            qi *= t->q();
        }
        CHECK(invertible == gl);
        CHECK(invertible_linpolys(t).size() == gl);
    }
}

TEST_CASE("Dickson matrix is multiplicative") {
    std::mt19937_64 rng(3);
    for (const auto& t : dickson_towers()) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Elem> a(t->h()), b(t->h());
            for (auto& x : a) x = static_cast<Elem>(rng() % t->size());
            for (auto& x : b) x = static_cast<Elem>(rng() % t->size());
            LinPoly f(t, a), g(t, b);
            CHECK(dickson_matrix(lp_compose(f, g)) == mat_mul(*t, dickson_matrix(f), dickson_matrix(g)));
        }
    }
}

TEST_CASE("Dickson matrix layout") {
    auto t = FieldTower::create(3, 1, 2);
    LinPoly f(t, {5, 7});
    const auto m = dickson_matrix(f);
    CHECK(m(0, 0) == 5);
    CHECK(m(0, 1) == 7);
    CHECK(m(1, 0) == t->frobenius(7));
    CHECK(m(1, 1) == t->frobenius(5));
}

TEST_CASE("semi-linearity by support agrees with the automorphism definition") {
    for (const auto& t : {FieldTower::create(2, 1, 2), FieldTower::create(2, 1, 4), FieldTower::create(3, 1, 2)}) {
        for (const auto& f : invertible_linpolys(t))
            for (unsigned s = 1; s <= t->h(); ++s) {
                if (t->h() % s) {
                    CHECK_THROWS_AS(is_semilinear(f, s), Error);
                    continue;
                }
                CHECK(is_semilinear(f, s) == semilinear_by_table(f, s));
            }
    }
}

TEST_CASE("conjugation collapses to a scalar exactly for semi-linear maps") {
    for (const auto& t : dickson_towers()) {
        for (const auto& f : invertible_linpolys(t)) {
            const auto fi = lp_invert(f);
            for (Elem a = 1; a < t->size(); ++a) {
                const auto c = conjugate(f, fi, a);
                CHECK(scalar_only(c) == is_semilinear(f, t->subfield_degree(a)));
            }
        }
    }
}

TEST_CASE("monomials and zero counts") {
    auto t = FieldTower::create(2, 1, 3);
    CHECK(is_monomial(LinPoly::monomial(t, 3, 2)));
    CHECK_FALSE(is_monomial(LinPoly(t, {1, 1, 0})));
    CHECK_FALSE(is_monomial(LinPoly::zero(t)));
    CHECK(zero_coeff_count(LinPoly(t, {1, 0, 0})) == 2);
    CHECK_THROWS_AS(conjugate(LinPoly::identity(t), 0), Error);
    CHECK_THROWS_AS(LinPoly(t, {1, 1}), Error);
}

TEST_CASE("interpolation from basis values") {
    std::mt19937_64 rng(5);
    for (const auto& t : dickson_towers()) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Elem> c(t->h());
            for (auto& x : c) x = static_cast<Elem>(rng() % t->size());
            LinPoly f(t, c);
            std::vector<Elem> values;
            for (unsigned m = 0; m < t->h(); ++m) values.push_back(lp_eval(f, t->omega_pow(m)));
            CHECK(lp_from_basis_values(t, values) == f);
        }
    }
}
