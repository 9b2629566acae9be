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

#include "addmds/code.hpp"

#include <algorithm>
#include <numeric>

namespace addmds {

namespace {

Matrix expanded_columns(const Matrix& expanded, unsigned h, const std::vector<std::size_t>& positions) {
    std::vector<std::size_t> rows(expanded.rows()), cols;
    std::iota(rows.begin(), rows.end(), 0);
    for (auto p : positions)
        for (unsigned l = 0; l < h; ++l) cols.push_back(p * h + l);
    return expanded.submatrix(rows, cols);
}

// Visits all k-subsets of [0, n) in lexicographic order; stops when fn returns false.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return true;
    std::vector<std::size_t> s(k);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        if (!fn(static_cast<const std::vector<std::size_t>&>(s))) return false;
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace

AdditiveCode::AdditiveCode(TowerPtr tower, Matrix gen) : tower_(std::move(tower)), n_(gen.cols()), gen_(std::move(gen)) {
    for (std::size_t r = 0; r < gen_.rows(); ++r)
        for (std::size_t c = 0; c < gen_.cols(); ++c)
            if (gen_(r, c) >= tower_->size()) throw Error(ErrorKind::InvalidArgument, "generator entry outside field");
    if (rank(*tower_, expanded()) != gen_.rows())
        throw Error(ErrorKind::BadDimension, "generator rows are not F_q-independent");
}

AdditiveCode AdditiveCode::zero_code(TowerPtr tower, std::size_t n) { return AdditiveCode(std::move(tower), n); }

std::optional<std::size_t> AdditiveCode::message_length() const {
    if (k_fq() % tower_->h() != 0) return std::nullopt;
    return k_fq() / tower_->h();
}

AdditiveCode code_from_linear_generator(const TowerPtr& tower, const Matrix& gen) {
    const auto& t = *tower;
    if (rank(t, gen) != gen.rows()) throw Error(ErrorKind::BadDimension, "generator is not of full F_{q^h}-rank");
    const unsigned h = t.h();
    Matrix out(gen.rows() * h, gen.cols());
    for (std::size_t i = 0; i < gen.rows(); ++i)
        for (unsigned l = 0; l < h; ++l)
            for (std::size_t j = 0; j < gen.cols(); ++j) out(i * h + l, j) = t.mul(t.dual_basis()[l], gen(i, j));
    return AdditiveCode(tower, std::move(out));
}

AdditiveCode rs_code(const TowerPtr& tower, std::size_t k) {
    const auto& t = *tower;
    const std::size_t big = t.size();
    if (k == 0 || k > big) throw Error(ErrorKind::BadDimension, "Reed-Solomon dimension must lie in [1, q^h]");
    Matrix g(k, big + 1);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t x = 0; x < big; ++x) g(r, x) = t.pow(static_cast<Elem>(x), r);
        g(r, big) = (r + 1 == k) ? 1 : 0;
    }
    return code_from_linear_generator(tower, g);
}

std::uint64_t codeword_count(const AdditiveCode& c, std::uint64_t budget) {
    const std::uint64_t q = c.tower()->q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k_fq(); ++i) {
        if (total > budget / q) throw Error(ErrorKind::BudgetExceeded, "q^k_fq exceeds the codeword budget");
        total *= q;
    }
    if (total > budget) throw Error(ErrorKind::BudgetExceeded, "q^k_fq exceeds the codeword budget");
    return total;
}

std::vector<std::uint64_t> weight_enumerator(const AdditiveCode& c, std::uint64_t budget) {
    std::vector<std::uint64_t> a(c.n() + 1, 0);
    for_each_codeword(c, budget, [&](const std::vector<Elem>& w) {
        std::size_t wt = 0;
        for (auto x : w) wt += (x != 0);
        ++a[wt];
    });
    return a;
}

std::size_t min_distance(const AdditiveCode& c, std::uint64_t budget) {
    if (c.is_zero()) throw Error(ErrorKind::BadDimension, "the zero code has no minimum distance");
    std::size_t best = c.n();
    bool first = true;
    for_each_codeword(c, budget, [&](const std::vector<Elem>& w) {
        if (first) {
            first = false;
            return;
        }
        std::size_t wt = 0;
        for (auto x : w) wt += (x != 0);
        best = std::min(best, wt);
    });
    return best;
}

bool is_mds(const AdditiveCode& c, std::uint64_t budget) {
    const auto k = c.message_length();
    if (!k || *k == 0 || *k > c.n()) return false;
    return min_distance(c, budget) == c.n() - *k + 1;
}

bool is_information_set(const AdditiveCode& c, const std::vector<std::size_t>& positions) {
    const unsigned h = c.tower()->h();
    if (positions.size() * h != c.k_fq()) return false;
    return rank(*c.tower(), expanded_columns(c.expanded(), h, positions)) == c.k_fq();
}

bool is_mds_by_information_sets(const AdditiveCode& c) {
    const auto k = c.message_length();
    if (!k || *k == 0 || *k > c.n()) return false;
    const Matrix e = c.expanded();
    const unsigned h = c.tower()->h();
    return for_each_subset(c.n(), *k, [&](const std::vector<std::size_t>& s) {
        return rank(*c.tower(), expanded_columns(e, h, s)) == c.k_fq();
    });
}

AdditiveCode project(const AdditiveCode& c, const std::vector<std::size_t>& positions) {
    const auto& t = *c.tower();
    std::vector<bool> drop(c.n(), false);
    for (auto p : positions) {
        if (p >= c.n()) throw Error(ErrorKind::BadIndex, "projection position out of range");
        drop[p] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < c.n(); ++j)
        if (!drop[j]) keep.push_back(j);
    std::vector<std::size_t> sorted(positions.begin(), positions.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) return c;

    const Matrix ker = left_kernel(t, expanded_columns(c.expanded(), t.h(), sorted));
    if (ker.rows() == 0) return AdditiveCode::zero_code(c.tower(), keep.size());
    const Matrix words = mat_mul(t, ker, c.gen());
    std::vector<std::size_t> rows(words.rows());
    std::iota(rows.begin(), rows.end(), 0);
    return AdditiveCode(c.tower(), words.submatrix(rows, keep));
}

EquivalenceMove EquivalenceMove::identity(const TowerPtr& tower, std::size_t n) {
    EquivalenceMove m;
    m.perm.resize(n);
    std::iota(m.perm.begin(), m.perm.end(), 0);
    m.maps.assign(n, LinPoly::identity(tower));
    return m;
}

AdditiveCode apply_move(const AdditiveCode& c, const EquivalenceMove& m) {
    const std::size_t n = c.n();
    if (m.perm.size() != n || m.maps.size() != n) throw Error(ErrorKind::DimensionMismatch, "move size differs from code length");
    std::vector<bool> seen(n, false);
    for (auto p : m.perm) {
        if (p >= n || seen[p]) throw Error(ErrorKind::InvalidArgument, "move permutation is not a permutation");
        seen[p] = true;
    }
    for (const auto& f : m.maps) {
        require_same_tower(*f.tower(), *c.tower());
        if (!lp_is_invertible(f)) throw Error(ErrorKind::NonInvertibleMap, "coordinate map is not invertible");
    }
    if (c.is_zero()) return c;
    Matrix g(c.k_fq(), n);
    for (std::size_t r = 0; r < c.k_fq(); ++r)
        for (std::size_t j = 0; j < n; ++j) g(r, m.perm[j]) = lp_eval(m.maps[j], c.gen()(r, j));
    return AdditiveCode(c.tower(), std::move(g));
}

EquivalenceMove compose_moves(const EquivalenceMove& first, const EquivalenceMove& second) {
    const std::size_t n = first.perm.size();
    if (second.perm.size() != n) throw Error(ErrorKind::DimensionMismatch, "moves of different lengths");
    EquivalenceMove m;
    m.perm.resize(n);
    m.maps.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t mid = first.perm[j];
        m.perm[j] = second.perm[mid];
        m.maps.push_back(lp_compose(second.maps[mid], first.maps[j]));
    }
    return m;
}

EquivalenceMove invert_move(const EquivalenceMove& m) {
    const std::size_t n = m.perm.size();
    EquivalenceMove r;
    r.perm.assign(n, 0);
    r.maps.assign(n, LinPoly());
    for (std::size_t j = 0; j < n; ++j) {
        r.perm[m.perm[j]] = j;
        r.maps[m.perm[j]] = lp_invert(m.maps[j]);
    }
    return r;
}

bool same_code(const AdditiveCode& a, const AdditiveCode& b) {
    if (!a.tower()->same_as(*b.tower()) || a.n() != b.n() || a.k_fq() != b.k_fq()) return false;
    const Matrix ea = a.expanded(), eb = b.expanded();
    Matrix stacked(ea.rows() + eb.rows(), ea.cols());
    for (std::size_t r = 0; r < ea.rows(); ++r) stacked.set_row(r, ea.row(r));
    for (std::size_t r = 0; r < eb.rows(); ++r) stacked.set_row(ea.rows() + r, eb.row(r));
    return rank(*a.tower(), stacked) == a.k_fq();
}

bool is_fqh_linear(const AdditiveCode& c) {
    const auto& t = *c.tower();
    if (c.is_zero()) return true;
    Matrix scaled = mat_scale(t, t.omega(), c.gen());
    Matrix stacked(2 * c.k_fq(), c.n());
    for (std::size_t r = 0; r < c.k_fq(); ++r) {
        stacked.set_row(r, c.gen().row(r));
        stacked.set_row(c.k_fq() + r, scaled.row(r));
    }
    return rank(t, expand_coords(t, stacked)) == c.k_fq();
}

std::optional<AdditiveCode> canonical_linear_generator(const AdditiveCode& c) {
    if (!is_fqh_linear(c)) return std::nullopt;
    Matrix g = c.gen();
    const auto piv = rref(*c.tower(), g);
    std::vector<std::size_t> rows(piv.size()), cols(c.n());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    return code_from_linear_generator(c.tower(), g.submatrix(rows, cols));
}

InterpolationForm to_interpolation_form(const AdditiveCode& c) {
    const auto& t = *c.tower();
    const auto km = c.message_length();
    if (!km || *km == 0 || *km > c.n()) throw Error(ErrorKind::NotMds, "F_q-dimension is not a multiple of h");
    const std::size_t k = *km;
    const unsigned h = t.h();
    std::vector<std::size_t> first(k);
    std::iota(first.begin(), first.end(), 0);
    const Matrix e = c.expanded();
    auto sub_inv = inverse(t, expanded_columns(e, h, first));
    if (!sub_inv) throw Error(ErrorKind::NotMds, "the first k positions are not an information set");

    // values[i][j][l] = f_{k+i, j}(omega^l)
    const std::size_t rest = c.n() - k;
    std::vector<std::vector<std::vector<Elem>>> values(rest, std::vector<std::vector<Elem>>(k, std::vector<Elem>(h)));
    for (std::size_t j = 0; j < k; ++j)
        for (unsigned l = 0; l < h; ++l) {
            const auto word = vec_mat(t, sub_inv->row(j * h + l), c.gen());
            for (std::size_t i = 0; i < rest; ++i) values[i][j][l] = word[k + i];
        }
    InterpolationForm form;
    form.k = k;
    form.maps.resize(rest);
    for (std::size_t i = 0; i < rest; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto f = lp_from_basis_values(c.tower(), values[i][j]);
            if (!lp_is_invertible(f)) throw Error(ErrorKind::NotMds, "an interpolation map is not invertible");
            form.maps[i].push_back(std::move(f));
        }
    return form;
}

StandardForm to_standard_form(const AdditiveCode& c) {
    const auto form = to_interpolation_form(c);
    const std::size_t k = form.k;
    if (c.n() < k + 1) throw Error(ErrorKind::NotMds, "standard form needs n >= k + 1");
    auto move = EquivalenceMove::identity(c.tower(), c.n());
    // y_j = f_{k,j}(x_j) turns position k into the plain sum.
    for (std::size_t j = 0; j < k; ++j) move.maps[j] = form.maps[0][j];
    // Position i then reads f_{i,0} ∘ f_{k,0}^{-1}(y_0) + ...; undo that map.
    const LinPoly first_inv = lp_invert(form.maps[0][0]);
    for (std::size_t i = 1; i < form.maps.size(); ++i)
        move.maps[k + i] = lp_invert(lp_compose(form.maps[i][0], first_inv));
    return {apply_move(c, move), move};
}

LinearWitness linear_equivalence_witness(const AdditiveCode& c, std::uint64_t candidate_budget) {
    LinearWitness w;
    const auto& tower = c.tower();
    const auto& t = *tower;
    const unsigned h = t.h();
    auto sf = to_standard_form(c);
    w.standard_move = sf.move;
    const auto form = to_interpolation_form(sf.code);
    const std::size_t k = form.k, rest = form.maps.size();

    w.space_size = 1;
    for (unsigned i = 1; i < h; ++i) {
        if (w.space_size > candidate_budget / t.size()) {
            w.space_size = candidate_budget + 1;
            break;
        }
        w.space_size *= t.size();
    }
    if (w.space_size > candidate_budget) {
        w.status = WitnessStatus::Unknown;
        return w;
    }

    std::vector<Elem> coeffs(h, 0);
    coeffs[0] = 1;
    Matrix a(rest, k, 1);
    while (true) {
        ++w.examined;
        LinPoly g(tower, coeffs);
        if (lp_is_invertible(g)) {
            const LinPoly g_inv = lp_invert(g);
            bool ok = true;
            for (std::size_t i = 1; i < rest && ok; ++i)
                for (std::size_t j = 1; j < k && ok; ++j) {
                    const LinPoly inner = lp_compose(g_inv, lp_compose(form.maps[i][j], g));
                    for (unsigned l = 1; l < h && ok; ++l) ok = inner.coeff(l) == 0;
                    if (ok) a(i, j) = inner.coeff(0);
                }
            if (ok) {
                w.status = WitnessStatus::Found;
                w.g = g;
                w.a = a;
                return w;
            }
        }
        bool done = true;
        for (unsigned i = h; i-- > 1;) {
            if (++coeffs[i] < t.size()) {
                done = false;
                break;
            }
            coeffs[i] = 0;
        }
        if (done) break;
    }
    w.status = WitnessStatus::NotEquivalent;
    return w;
}

EquivalenceMove linearizing_move(const LinearWitness& w) {
    if (w.status != WitnessStatus::Found || !w.g) throw Error(ErrorKind::InvalidArgument, "no witness to linearize with");
    const std::size_t n = w.standard_move.perm.size();
    auto second = EquivalenceMove::identity(w.g->tower(), n);
    const LinPoly g_inv = lp_invert(*w.g);
    for (auto& m : second.maps) m = g_inv;
    return compose_moves(w.standard_move, second);
}

}  // namespace addmds
