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

#include "addmds/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "addmds/error.hpp"
#include "addmds/parallel.hpp"

namespace addmds {

MdsLengthBounds MdsLengthTable::bounds(std::uint64_t q, std::uint64_t k) {
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "n_q(k) is tabulated for k >= 2");
    if (k >= q) return {k + 1, k + 1};
    return {q + 1, q + k - 1};
}

unsigned MdsLengthTable::largest_proper_divisor(unsigned h) {
    for (unsigned d = h / 2; d > 1; --d)
        if (h % d == 0) return d;
    return 1;
}

Matrix base_mds_matrix(const TowerPtr& tower, std::size_t n) {
    const auto& t = *tower;
    const std::uint64_t q = t.q();
    if (q < 5) throw Error(ErrorKind::FieldTooSmall, "the k = 4 example needs q >= 5");
    if (n < 6 || n > q + 1) throw Error(ErrorKind::InvalidArgument, "n must lie in [6, q + 1]");
    const auto& fq = t.base_field();
    Matrix g(4, n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        Elem v = 1;
        for (std::size_t r = 0; r < 4; ++r) {
            g(r, j) = v;
            v = t.mul(v, fq[j]);
        }
    }
    g(3, n - 1) = 1;  // infinity
    const auto piv = rref(t, g);
    if (piv.size() != 4 || piv[3] != 3) throw Error(ErrorKind::NotMds, "Reed-Solomon base is not systematic");

    // Column 4 to ones via row scaling, then undo on the identity block.
    for (std::size_t r = 0; r < 4; ++r) {
        const Elem s = g(r, 4);
        const Elem si = t.inv(s);
        for (std::size_t j = 0; j < n; ++j) g(r, j) = t.mul(g(r, j), si);
        g(r, r) = 1;
    }
    for (std::size_t j = 5; j < n; ++j) {
        const Elem si = t.inv(g(0, j));
        for (std::size_t r = 0; r < 4; ++r) g(r, j) = t.mul(g(r, j), si);
    }
    return g;
}

namespace {

void check_base(const FieldTower& t, const Matrix& base) {
    if (base.rows() != 4 || base.cols() < 6) throw Error(ErrorKind::BadShape, "base matrix must be 4 x n with n >= 6");
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t j = 0; j < base.cols(); ++j) {
            if (!t.in_base(base(r, j))) throw Error(ErrorKind::InvalidArgument, "base matrix entry outside F_q");
            if (j < 4 && base(r, j) != (r == j ? 1u : 0u))
                throw Error(ErrorKind::InvalidArgument, "base matrix must start with the identity");
        }
}

}  // namespace

AdditiveCode assemble_k4_code(const TowerPtr& tower, const Matrix& base, Elem alpha, Elem beta, const LinPoly& g) {
    const auto& t = *tower;
    check_base(t, base);
    const unsigned h = t.h();
    const std::size_t n = base.cols();
    const LinPoly hp = conjugate(g, beta);
    Matrix gen(4 * h, n);
    for (std::size_t r = 0; r < 4; ++r)
        for (unsigned l = 0; l < h; ++l) {
            const Elem w = t.omega_pow(l);
            const std::size_t row = r * h + l;
            for (std::size_t j = 0; j + 1 < n; ++j) gen(row, j) = t.mul(base(r, j), w);
            Elem last = 0;
            switch (r) {
                case 2:
                    last = t.mul(alpha, w);
                    break;
                case 3:
                    last = lp_eval(hp, w);
                    break;
                default:
                    last = t.mul(base(r, n - 1), w);
            }
            gen(row, n - 1) = last;
        }
    return AdditiveCode(tower, std::move(gen));
}

K4Example K4Example::make(const TowerPtr& tower, const Matrix& base, Elem alpha, Elem beta, const LinPoly& g) {
    const auto& t = *tower;
    require_same_tower(t, *g.tower());
    if (t.in_base(alpha) || t.in_base(beta)) throw Error(ErrorKind::InvalidArgument, "alpha and beta must lie outside F_q");
    const unsigned s = std::gcd(t.subfield_degree(alpha), t.subfield_degree(beta));
    if (s == 1) throw Error(ErrorKind::InvalidArgument, "F_q(alpha) and F_q(beta) only meet in F_q");
    if (!lp_is_invertible(g)) throw Error(ErrorKind::InvalidArgument, "g is not invertible");
    if (is_semilinear(g, s))
        throw Error(ErrorKind::InvalidArgument, "g is semi-linear over F_q(alpha) ∩ F_q(beta)");
    K4Example ex{tower, base, alpha, beta, g, assemble_k4_code(tower, base, alpha, beta, g)};
    return ex;
}

unsigned K4Example::common_degree() const {
    return std::gcd(tower->subfield_degree(alpha), tower->subfield_degree(beta));
}

namespace {

struct AlphaConstraints {
    bool feasible = true;
    std::vector<Elem> mus;  // h - mu X must be invertible for each
};

AlphaConstraints alpha_constraints(const FieldTower& t, const Matrix& base, Elem alpha) {
    AlphaConstraints out;
    const std::size_t n = base.cols();
    const std::size_t m = n - 1;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c) {
                Matrix sub = base.submatrix({0, 1, 2, 3}, {a, b, c});
                const Matrix ker = left_kernel(t, sub);
                if (ker.rows() != 1) {
                    out.feasible = false;
                    return out;
                }
                const auto v = ker.row(0);
                const Elem lin =
                    t.add(t.add(t.mul(v[0], base(0, n - 1)), t.mul(v[1], base(1, n - 1))), t.mul(v[2], alpha));
                if (v[3] == 0) {
                    if (lin == 0) {
                        out.feasible = false;
                        return out;
                    }
                } else {
                    out.mus.push_back(t.neg(t.div(lin, v[3])));
                }
                // The four positions a, b, c, d of the base itself.
                for (std::size_t d = c + 1; d < m; ++d) {
                    if (determinant(t, base.submatrix({0, 1, 2, 3}, {a, b, c, d})) == 0) {
                        out.feasible = false;
                        return out;
                    }
                }
            }
    std::sort(out.mus.begin(), out.mus.end());
    out.mus.erase(std::unique(out.mus.begin(), out.mus.end()), out.mus.end());
    return out;
}

bool avoids(const FieldTower& t, const LinPoly& hp, const std::vector<Elem>& mus) {
    std::vector<Elem> c = hp.coeffs();
    const Elem c0 = c[0];
    for (auto mu : mus) {
        c[0] = t.sub(c0, mu);
        if (dickson_determinant(LinPoly(hp.tower(), c)) == 0) return false;
    }
    return true;
}

}  // namespace

bool k4_mds_condition(const TowerPtr& tower, const Matrix& base, Elem alpha, const LinPoly& h_poly) {
    check_base(*tower, base);
    const auto cons = alpha_constraints(*tower, base, alpha);
    return cons.feasible && avoids(*tower, h_poly, cons.mus);
}

bool span_condition_direct(const LinPoly& h_poly, Elem alpha) {
    const auto& t = *h_poly.tower();
    std::vector<char> in_span(t.size(), 0);
    for (Elem l1 : t.base_field())
        for (Elem l2 : t.base_field()) in_span[t.add(t.mul(l1, alpha), l2)] = 1;
    for (Elem x = 1; x < t.size(); ++x)
        if (in_span[t.div(lp_eval(h_poly, x), x)]) return false;
    return true;
}

bool span_condition_elimination(const LinPoly& h_poly, Elem alpha) {
    const auto& t = *h_poly.tower();
    std::vector<Elem> mus;
    for (Elem l1 : t.base_field())
        for (Elem l2 : t.base_field()) mus.push_back(t.add(t.mul(l1, alpha), l2));
    return avoids(t, h_poly, mus);
}

K4SearchResult k4_example_search(const TowerPtr& tower, const K4SearchOptions& opts) {
    const auto& t = *tower;
    if (t.h() < 2) throw Error(ErrorKind::InvalidArgument, "the k = 4 example needs h >= 2");
    const Matrix base = base_mds_matrix(tower, opts.n);
    std::vector<Elem> outside;
    for (Elem x = 0; x < t.size(); ++x)
        if (!t.in_base(x)) outside.push_back(x);
    const auto polys = invertible_linpolys(tower);
    std::vector<LinPoly> inverses;
    inverses.reserve(polys.size());
    for (const auto& g : polys) inverses.push_back(lp_invert(g));

    K4SearchResult res;
    const std::uint64_t per_alpha = static_cast<std::uint64_t>(outside.size()) * polys.size();
    res.space_size = per_alpha * outside.size();
    if (res.space_size > opts.candidate_budget)
        throw Error(ErrorKind::BudgetExceeded, "k = 4 search space of " + std::to_string(res.space_size) +
                                                   " candidates exceeds the budget");

    struct Hit {
        std::size_t beta = 0, g = 0;
        bool found = false;
    };
    std::vector<Hit> hits(outside.size());
    std::atomic<std::size_t> best(outside.size());

    parallel_for(outside.size(), opts.shards, [&](std::size_t ai) {
        if (ai > best.load()) return;
        const Elem alpha = outside[ai];
        const auto cons = alpha_constraints(t, base, alpha);
        if (!cons.feasible) return;
        const unsigned da = t.subfield_degree(alpha);
        for (std::size_t bi = 0; bi < outside.size(); ++bi) {
            if (ai > best.load()) return;
            const Elem beta = outside[bi];
            const unsigned s = std::gcd(da, t.subfield_degree(beta));
            if (s == 1) continue;
            for (std::size_t gi = 0; gi < polys.size(); ++gi) {
                if (is_semilinear(polys[gi], s)) continue;
                const LinPoly hp = conjugate(polys[gi], inverses[gi], beta);
                if (!avoids(t, hp, cons.mus)) continue;
                hits[ai] = {bi, gi, true};
                std::size_t cur = best.load();
                while (ai < cur && !best.compare_exchange_weak(cur, ai)) {
                }
                return;
            }
        }
    });

    for (std::size_t ai = 0; ai < outside.size(); ++ai) {
        if (!hits[ai].found) continue;
        const auto& hit = hits[ai];
        res.examined = ai * per_alpha + hit.beta * polys.size() + hit.g + 1;
        res.example = K4Example::make(tower, base, outside[ai], outside[hit.beta], polys[hit.g]);
        return res;
    }
    res.examined = res.space_size;
    return res;
}

K4Report verify_k4_example(const K4Example& ex, std::uint64_t codeword_budget, std::uint64_t candidate_budget) {
    K4Report rep;
    const auto& c = ex.code;
    rep.mds_bruteforce = is_mds(c, codeword_budget);
    rep.mds_condition = k4_mds_condition(ex.tower, ex.base, ex.alpha, conjugate(ex.g, ex.beta));
    if (rep.mds_bruteforce) {
        rep.proj_fourth = linear_equivalence_witness(project(c, {3}), candidate_budget).status;
        const auto third = linear_equivalence_witness(project(c, {2}), candidate_budget);
        rep.proj_third = third.status;
        rep.proj_third_g = third.g;
        const auto full = linear_equivalence_witness(c, candidate_budget);
        rep.full = full.status;
        rep.full_space = full.space_size;
    }
    rep.n = c.n();
    rep.nq_rest = MdsLengthTable::bounds(ex.tower->q(), 4 - rep.union_size);
    rep.descent_bound = rep.union_size + rep.nq_rest.upper;
    rep.descent_consistent = rep.n <= rep.descent_bound;
    return rep;
}

}  // namespace addmds
