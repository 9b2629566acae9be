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
#include "fixtures.hpp"

using namespace addmds;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Weight distribution of a linear MDS code over an alphabet of size Q.
std::vector<std::uint64_t> mds_weights(std::uint64_t n, std::uint64_t k, std::uint64_t Q) {
    std::vector<std::uint64_t> a(n + 1, 0);
    a[0] = 1;
    const std::uint64_t d = n - k + 1;
    for (std::uint64_t w = d; w <= n; ++w) {
        std::int64_t s = 0;
        for (std::uint64_t j = 0; j <= w - d; ++j) {
            std::int64_t pw = 1;
            for (std::uint64_t i = 0; i < w - d + 1 - j; ++i) pw *= static_cast<std::int64_t>(Q);
            const std::int64_t term = static_cast<std::int64_t>(binom(w, j)) * (pw - 1);
            s += (j % 2 ? -term : term);
        }
        a[w] = binom(n, w) * static_cast<std::uint64_t>(s);
    }
    return a;
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Parse;
}

bool is_scalar(const LinPoly& f) {
    for (unsigned i = 1; i < f.h(); ++i)
        if (f.coeff(i)) return false;
    return true;
}

}  // namespace

TEST_CASE("Reed-Solomon codes are MDS") {
    auto f4 = FieldTower::create(2, 1, 2);
    auto c = rs_code(f4, 2);
    CHECK(c.n() == 5);
    CHECK(c.k_fq() == 4);
    CHECK(min_distance(c) == 4);
    CHECK(oracle::brute_distance(c) == 4);
    CHECK(is_mds(c));
    CHECK(is_mds_by_information_sets(c));

    auto f9 = FieldTower::create(3, 1, 2);
    auto c9 = rs_code(f9, 3);
    CHECK(c9.n() == 10);
    CHECK(min_distance(c9) == 8);
    CHECK(is_mds(c9));
    CHECK(is_fqh_linear(c9));
}

TEST_CASE("weight enumerator of Reed-Solomon codes") {
    auto f4 = FieldTower::create(2, 1, 2);
    const auto w = weight_enumerator(rs_code(f4, 2));
    CHECK(w == std::vector<std::uint64_t>{1, 0, 0, 0, 15, 0});
    CHECK(w == mds_weights(5, 2, 4));
    auto f8 = FieldTower::create(2, 1, 3);
    CHECK(weight_enumerator(rs_code(f8, 3)) == mds_weights(9, 3, 8));
    CHECK(weight_enumerator(AdditiveCode::zero_code(f4, 3)) == std::vector<std::uint64_t>{1, 0, 0, 0});
}

TEST_CASE("minimum distance agrees with plain enumeration on random additive codes") {
    std::mt19937_64 rng(17);
    for (auto t : {FieldTower::create(2, 1, 2), FieldTower::create(3, 1, 2), FieldTower::create(2, 1, 3)}) {
        for (int trial = 0; trial < 15; ++trial) {
            const std::size_t n = 3 + rng() % 4;
            const std::size_t k_fq = 1 + rng() % 5;
            Matrix g(k_fq, n);
            for (std::size_t r = 0; r < k_fq; ++r)
                for (std::size_t j = 0; j < n; ++j) g(r, j) = static_cast<Elem>(rng() % t->size());
            if (rank(*t, expand_coords(*t, g)) != k_fq) {
                CHECK(kind_of([&] { AdditiveCode(t, g); }) == ErrorKind::BadDimension);
                continue;
            }
            AdditiveCode c(t, g);
            const auto d = min_distance(c);
            CHECK(d == oracle::brute_distance(c));
            CHECK(is_mds(c) == is_mds_by_information_sets(c));
            // Singleton: q^{k_fq} <= Q^{n-d+1}, compared through exponents of q
            CHECK(k_fq <= (n - d + 1) * t->h());
            const auto we = weight_enumerator(c);
            std::uint64_t total = 0;
            for (auto x : we) total += x;
            CHECK(total == oracle::all_codewords(c).size());
        }
    }
}

TEST_CASE("MDS codes complete any k values uniquely") {
    std::mt19937_64 rng(23);
    auto t = FieldTower::create(3, 1, 2);
    auto c = fixture::random_linear_mds(t, 2, 5, rng);
    auto scrambled = apply_move(c, fixture::random_move(t, 5, rng));
    const auto words = oracle::all_codewords(scrambled);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::size_t> pos = {0, 1, 2, 3, 4};
        std::shuffle(pos.begin(), pos.end(), rng);
        const Elem v0 = static_cast<Elem>(rng() % t->size()), v1 = static_cast<Elem>(rng() % t->size());
        std::size_t hits = 0;
        for (const auto& w : words) hits += (w[pos[0]] == v0 && w[pos[1]] == v1);
        CHECK(hits == 1);
    }
}

TEST_CASE("projection of MDS codes") {
    std::mt19937_64 rng(29);
    auto t = FieldTower::create(2, 1, 3);
    auto c = apply_move(fixture::random_linear_mds(t, 3, 7, rng), fixture::random_move(t, 7, rng));
    REQUIRE(is_mds(c));
    for (std::size_t j = 0; j < 7; ++j) {
        auto p = project(c, {j});
        CHECK(p.n() == 6);
        CHECK(p.k_fq() == 2 * t->h());
        CHECK(min_distance(p) == 5);
    }
    auto p2 = project(c, {1, 4});
    CHECK(p2.k_fq() == t->h());
    CHECK(min_distance(p2) == 5);
    auto p3 = project(c, {0, 1, 2});
    CHECK(p3.is_zero());
    CHECK(p3.n() == 4);
    CHECK(kind_of([&] { project(c, {7}); }) == ErrorKind::BadIndex);
}

TEST_CASE("moves preserve weights and compose") {
    std::mt19937_64 rng(31);
    auto t = FieldTower::create(3, 1, 2);
    auto c = fixture::random_linear_mds(t, 2, 6, rng);
    const auto m1 = fixture::random_move(t, 6, rng), m2 = fixture::random_move(t, 6, rng);
    const auto c1 = apply_move(c, m1);
    CHECK(weight_enumerator(c1) == weight_enumerator(c));
    CHECK(same_code(apply_move(c1, m2), apply_move(c, compose_moves(m1, m2))));
    CHECK(same_code(apply_move(c1, invert_move(m1)), c));
    CHECK(apply_move(c, EquivalenceMove::identity(t, 6)).gen() == c.gen());

    auto bad = m1;
    bad.maps[2] = LinPoly::zero(t);
    CHECK(kind_of([&] { apply_move(c, bad); }) == ErrorKind::NonInvertibleMap);
}

TEST_CASE("interpolation form of a systematic linear code") {
    auto t = FieldTower::create(3, 1, 2);
    Matrix g(2, 5);
    const Elem a[2][3] = {{1, 5, 7}, {4, 2, 8}};
    for (std::size_t r = 0; r < 2; ++r) {
        g(r, r) = 1;
        for (std::size_t j = 0; j < 3; ++j) g(r, 2 + j) = a[r][j];
    }
    const auto form = to_interpolation_form(code_from_linear_generator(t, g));
    REQUIRE(form.k == 2);
    REQUIRE(form.maps.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(form.maps[i][j] == LinPoly::scalar(t, a[j][i]));
}

TEST_CASE("standard form") {
    std::mt19937_64 rng(37);
    for (auto t : {FieldTower::create(2, 1, 2), FieldTower::create(3, 1, 2), FieldTower::create(2, 1, 3)}) {
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t k = 2 + rng() % 2;
            const std::size_t n = std::min<std::size_t>(k + 1 + rng() % 3, t->size() + 1);
            auto lin = fixture::random_linear_mds(t, k, n, rng);
            auto c = apply_move(lin, fixture::random_move(t, n, rng));
            const auto sf = to_standard_form(c);
            CHECK(apply_move(c, sf.move).gen() == sf.code.gen());
            const auto form = to_interpolation_form(sf.code);
            const auto id = LinPoly::identity(t);
            for (std::size_t j = 0; j < k; ++j) CHECK(form.maps[0][j] == id);
            for (std::size_t i = 0; i < form.maps.size(); ++i) CHECK(form.maps[i][0] == id);

            // linear input: every map is a scalar
            const auto lf = to_interpolation_form(to_standard_form(lin).code);
            for (const auto& row : lf.maps)
                for (const auto& f : row) CHECK(is_scalar(f));

            // already standard: identity maps
            const auto again = to_standard_form(sf.code);
            for (const auto& f : again.move.maps) CHECK(f == id);
        }
    }
    auto t = FieldTower::create(2, 1, 2);
    Matrix g(1, 3);
    g(0, 0) = 1;
    g(0, 1) = 1;  // second row would be missing: k_fq = 1 is not a multiple of h
    CHECK(kind_of([&] { to_standard_form(AdditiveCode(t, g)); }) == ErrorKind::NotMds);
}

TEST_CASE("linear codes have the trivial witness") {
    std::mt19937_64 rng(41);
    auto t = FieldTower::create(3, 1, 2);
    auto c = fixture::random_linear_mds(t, 3, 6, rng);
    const auto w = linear_equivalence_witness(c);
    REQUIRE(w.status == WitnessStatus::Found);
    CHECK(*w.g == LinPoly::identity(t));
    CHECK(w.examined == 1);
}

TEST_CASE("a fixed non-monomial map in every coordinate is recovered") {
    std::mt19937_64 rng(43);
    auto t = FieldTower::create(3, 1, 2);
    auto lin = fixture::random_linear_mds(t, 2, 6, rng);
    const LinPoly g(t, {1, 4});
    REQUIRE(lp_is_invertible(g));
    EquivalenceMove m = EquivalenceMove::identity(t, 6);
    for (auto& f : m.maps) f = g;
    auto c = apply_move(lin, m);
    CHECK_FALSE(is_fqh_linear(c));
    const auto w = linear_equivalence_witness(c);
    REQUIRE(w.status == WitnessStatus::Found);
    CHECK(w.g->coeff(0) == 1);
    CHECK(is_fqh_linear(apply_move(c, linearizing_move(w))));
    // every f_{i,j} of the standard form is g ∘ (a X) ∘ g^{-1}
    const auto form = to_interpolation_form(apply_move(c, w.standard_move));
    for (std::size_t i = 0; i < form.maps.size(); ++i)
        for (std::size_t j = 0; j < form.k; ++j)
            CHECK(form.maps[i][j] == conjugate(*w.g, w.a(i, j)));
}

TEST_CASE("scrambled linear codes always have a witness") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        auto t = trial % 2 ? FieldTower::create(2, 1, 2) : FieldTower::create(3, 1, 2);
        const std::size_t k = 2 + rng() % 2, n = k + 1 + rng() % 2;
        auto c = apply_move(fixture::random_linear_mds(t, k, n, rng), fixture::random_move(t, n, rng));
        const auto w = linear_equivalence_witness(c);
        REQUIRE(w.status == WitnessStatus::Found);
        CHECK(is_fqh_linear(apply_move(c, linearizing_move(w))));
    }
}

TEST_CASE("budgets") {
    auto t = FieldTower::create(3, 1, 2);
    auto c = rs_code(t, 3);
    CHECK(kind_of([&] { min_distance(c, 100); }) == ErrorKind::BudgetExceeded);
    const auto w = linear_equivalence_witness(c, 3);
    CHECK(w.status == WitnessStatus::Unknown);
    CHECK(w.space_size > 3);
    CHECK(kind_of([&] { min_distance(AdditiveCode::zero_code(t, 3)); }) == ErrorKind::BadDimension);
}

TEST_CASE("canonical generator of linear codes") {
    std::mt19937_64 rng(53);
    auto t = FieldTower::create(2, 1, 3);
    auto c = fixture::random_linear_mds(t, 2, 5, rng);
    // re-mix over F_q only
    Matrix mix = Matrix::identity(c.k_fq());
    mix(0, 3) = 1;
    AdditiveCode mixed(t, mat_mul(*t, mix, c.gen()));
    auto canon = canonical_linear_generator(mixed);
    REQUIRE(canon);
    CHECK(same_code(*canon, mixed));
    CHECK(canonical_linear_generator(c)->gen() == canon->gen());
    EquivalenceMove m = EquivalenceMove::identity(t, 5);
    for (const auto& f : invertible_linpolys(t))
        if (!is_monomial(f)) {
            m.maps[0] = f;
            break;
        }
    CHECK_FALSE(canonical_linear_generator(apply_move(c, m)));
}
