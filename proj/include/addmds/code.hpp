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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addmds/gf.hpp"
#include "addmds/linpoly.hpp"
#include "addmds/matrix.hpp"

namespace addmds {

inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultCandidateBudget = std::uint64_t{1} << 22;

/// F_q-linear code of length n over F_{q^h}. The k_fq rows of the generator
/// are an F_q-basis, so the code has q^{k_fq} codewords. Positions are 0-based.
class AdditiveCode {
public:
    /// Throws BadDimension if the rows are F_q-dependent.
    AdditiveCode(TowerPtr tower, Matrix gen);
    static AdditiveCode zero_code(TowerPtr tower, std::size_t n);

    const TowerPtr& tower() const noexcept { return tower_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t k_fq() const noexcept { return gen_.rows(); }
    const Matrix& gen() const noexcept { return gen_; }
    bool is_zero() const noexcept { return gen_.rows() == 0; }
    /// k_fq / h when h divides k_fq.
    std::optional<std::size_t> message_length() const;

    /// F_q-coordinates of the generator: k_fq x (n*h).
    Matrix expanded() const { return expand_coords(*tower_, gen_); }

private:
    AdditiveCode(TowerPtr tower, std::size_t n) : tower_(std::move(tower)), n_(n), gen_(0, n) {}

    TowerPtr tower_;
    std::size_t n_ = 0;
    Matrix gen_;
};

/// Expands an F_{q^h}-linear generator (k rows of F_{q^h}-rank k) to an F_q
/// basis whose rows are theta_l * g_i, theta the trace-dual basis of the
/// omega basis. Rows are ordered (i, l) with l fastest. With this layout the
/// projective system of the code lies in the standard Desarguesian spread.
AdditiveCode code_from_linear_generator(const TowerPtr& tower, const Matrix& gen);

/// Doubly extended Reed-Solomon code over F_{q^h}: evaluation at every field
/// element (in packed order) followed by the point at infinity.
AdditiveCode rs_code(const TowerPtr& tower, std::size_t k);

/// Calls fn(codeword) for all q^{k_fq} codewords, zero first. Throws
/// BudgetExceeded when q^{k_fq} > budget.
template <class Fn>
void for_each_codeword(const AdditiveCode& c, std::uint64_t budget, Fn&& fn);

std::uint64_t codeword_count(const AdditiveCode& c, std::uint64_t budget);
std::size_t min_distance(const AdditiveCode& c, std::uint64_t budget = kDefaultCodewordBudget);
std::vector<std::uint64_t> weight_enumerator(const AdditiveCode& c, std::uint64_t budget = kDefaultCodewordBudget);
/// min_distance == n - k_fq/h + 1, by exhaustive enumeration.
bool is_mds(const AdditiveCode& c, std::uint64_t budget = kDefaultCodewordBudget);
/// MDS test through information sets: every k positions carry an invertible
/// F_q-map from the code. Exact; no codeword enumeration.
bool is_mds_by_information_sets(const AdditiveCode& c);
bool is_information_set(const AdditiveCode& c, const std::vector<std::size_t>& positions);

/// Codewords vanishing on `positions`, with those coordinates deleted.
AdditiveCode project(const AdditiveCode& c, const std::vector<std::size_t>& positions);

/// Coordinate j of a codeword is mapped by maps[j] and lands at perm[j].
struct EquivalenceMove {
    std::vector<std::size_t> perm;
    std::vector<LinPoly> maps;

    static EquivalenceMove identity(const TowerPtr& tower, std::size_t n);
};

AdditiveCode apply_move(const AdditiveCode& c, const EquivalenceMove& m);
/// The move equal to applying `first` then `second`.
EquivalenceMove compose_moves(const EquivalenceMove& first, const EquivalenceMove& second);
EquivalenceMove invert_move(const EquivalenceMove& m);

/// Same set of codewords (generators may differ by an F_q basis change).
bool same_code(const AdditiveCode& a, const AdditiveCode& b);
/// Closed under multiplication by F_{q^h}.
bool is_fqh_linear(const AdditiveCode& c);
/// For an F_{q^h}-linear code, the re-expanded canonical generator of
/// code_from_linear_generator; nullopt otherwise.
std::optional<AdditiveCode> canonical_linear_generator(const AdditiveCode& c);

/// C = {(x, f(x))}; maps[i][j] = f_{k+i, j} (0-based; row 0 is position k).
struct InterpolationForm {
    std::size_t k = 0;
    std::vector<std::vector<LinPoly>> maps;
};

InterpolationForm to_interpolation_form(const AdditiveCode& c);

struct StandardForm {
    AdditiveCode code;
    EquivalenceMove move;
};

/// Normalizes so that f_{k,j} = X for all j and f_{i,0} = X for all i
/// (0-based). Output code == apply_move(c, move) bit-exactly.
StandardForm to_standard_form(const AdditiveCode& c);

enum class WitnessStatus { Found, NotEquivalent, Unknown };

struct LinearWitness {
    WitnessStatus status = WitnessStatus::Unknown;
    std::optional<LinPoly> g;
    /// a(i, j) for rows i = position k.., columns j; row 0 and column 0 are 1.
    Matrix a;
    EquivalenceMove standard_move;
    std::uint64_t space_size = 0;
    std::uint64_t examined = 0;
};

/// Exhaustive search for g (normalized g_0 = 1) with f_{i,j} = g ∘ (a_{i,j} X) ∘ g^{-1}
/// on the standard form of c. NotEquivalent is only reported after the full
/// space was covered; a space larger than the budget yields Unknown.
LinearWitness linear_equivalence_witness(const AdditiveCode& c,
                                         std::uint64_t candidate_budget = kDefaultCandidateBudget);

/// Standard-form move followed by g^{-1} in every coordinate; applying it to
/// c yields an F_{q^h}-linear code.
EquivalenceMove linearizing_move(const LinearWitness& w);

// ---------------------------------------------------------------------------

template <class Fn>
void for_each_codeword(const AdditiveCode& c, std::uint64_t budget, Fn&& fn) {
    const auto& t = *c.tower();
    const std::size_t n = c.n();
    const std::size_t k = c.k_fq();
    codeword_count(c, budget);
    const auto& base = t.base_field();
    const std::size_t q = base.size();

    // delta[r][d] = (base[d+1] - base[d]) * row_r, with d = q-1 wrapping to zero.
    std::vector<std::vector<std::vector<Elem>>> delta(k, std::vector<std::vector<Elem>>(q, std::vector<Elem>(n)));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t d = 0; d < q; ++d) {
            const Elem step = t.sub(base[(d + 1) % q], base[d]);
            for (std::size_t j = 0; j < n; ++j) delta[r][d][j] = t.mul(step, c.gen()(r, j));
        }

    std::vector<Elem> word(n, 0);
    std::vector<std::size_t> digit(k, 0);
    while (true) {
        fn(static_cast<const std::vector<Elem>&>(word));
        std::size_t r = 0;
        for (; r < k; ++r) {
            const auto& dl = delta[r][digit[r]];
            for (std::size_t j = 0; j < n; ++j) word[j] = t.add(word[j], dl[j]);
            if (++digit[r] < q) break;
            digit[r] = 0;
        }
        if (r == k) return;
    }
}

}  // namespace addmds
