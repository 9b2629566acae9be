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

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "addmds/linpoly.hpp"
#include "addmds/matrix.hpp"

namespace addmds {

/// (a, b, c) with a * f(b f^{-1}(X)) = g(c g^{-1}(X)).
struct PropTriple {
    Elem a = 1, b = 1, c = 1;
    auto operator<=>(const PropTriple&) const = default;
};

struct PropWitness {
    LinPoly f, g;
    std::vector<PropTriple> triples;
};

inline constexpr std::uint64_t kDefaultMatchingBudget = 50'000'000;

/// Direct coefficientwise check of one triple.
bool is_prop_triple(const LinPoly& f, const LinPoly& g, const PropTriple& t);

/// Conjugates f ∘ (bX) ∘ f^{-1} for every b != 0, each stored up to scale,
/// so that a pair (f, g) can be matched without recomputing compositions.
class ConjugateTable {
public:
    explicit ConjugateTable(const LinPoly& f);

    const LinPoly& poly() const noexcept { return f_; }
    /// Normalized conjugate (first non-zero coefficient 1) and that coefficient.
    const std::vector<Elem>& shape(std::size_t log_b) const { return shapes_[log_b]; }
    Elem lead(std::size_t log_b) const { return leads_[log_b]; }
    std::size_t count() const noexcept { return shapes_.size(); }

private:
    LinPoly f_;
    std::vector<std::vector<Elem>> shapes_;
    std::vector<Elem> leads_;
};

/// Every triple in (F_{q^h}^*)^3, sorted. f and g must be invertible.
std::vector<PropTriple> prop_triples(const LinPoly& f, const LinPoly& g);
std::vector<PropTriple> prop_triples(const ConjugateTable& f, const ConjugateTable& g);

/// Triples valid and pairwise distinct in each coordinate.
bool is_valid_witness(const PropWitness& w);

struct PropMResult {
    std::size_t m = 0;
    PropWitness witness;
    std::uint64_t nodes = 0;
};

/// Exact maximum m. The witness contains (1,1,1) whenever some optimum does.
PropMResult max_prop_m(const LinPoly& f, const LinPoly& g, std::uint64_t node_budget = kDefaultMatchingBudget);
PropMResult max_prop_m(const ConjugateTable& f, const ConjugateTable& g,
                       std::uint64_t node_budget = kDefaultMatchingBudget);
/// Whether (f, g) satisfies Prop_m for the given m; witness filled when true.
bool has_prop_m(const ConjugateTable& f, const ConjugateTable& g, std::size_t m, PropWitness* witness = nullptr,
                std::uint64_t node_budget = kDefaultMatchingBudget);

/// Matrices behind the coefficient identity a_j M̂_f D_f B_j = M̂_g D_g C_j.
/// f and g are first composed with X^{q^e} so their constant coefficients
/// are non-zero; the triples are relabeled accordingly (b -> b^{q^{-e}}).
struct ZeroCoeffCertificate {
    unsigned f_shift = 0, g_shift = 0;
    LinPoly f, g;  // normalized
    Matrix m_hat_f, m_hat_g, d_f, d_g, l;
    std::vector<PropTriple> triples;  // normalized
    std::vector<std::vector<Elem>> b, c;
    bool identity_holds = false;
    bool shift_holds = false;
};

ZeroCoeffCertificate zero_coeff_certificate(const PropWitness& w);
/// The (h-1) x (h-1) matrix L with (v^q) = L v for v_i = b^{q^i} - b.
Matrix shift_matrix(const FieldTower& t);

/// max{q^{h-1}, h q - 1}
std::uint64_t zero_coeff_bound(const FieldTower& t);

struct PairRecord {
    LinPoly f, g;
    std::size_t m = 0;
    unsigned zeros_f = 0, zeros_g = 0;
    bool certificate_ok = true;
    bool violation = false;
};

struct ZeroCoeffReport {
    std::uint64_t bound = 0;
    std::uint64_t pairs = 0;
    std::uint64_t qualifying = 0;
    std::uint64_t violations = 0;
    std::uint64_t certificate_failures = 0;
    std::uint64_t triples_certified = 0;
    std::vector<std::uint64_t> m_histogram;
    std::vector<PairRecord> records;  // qualifying pairs and failures
    bool ok() const { return violations == 0 && certificate_failures == 0; }
};

/// Exhaustive over all invertible pairs; requires q^{h^2} <= pair_budget.
ZeroCoeffReport verify_zero_coeff_lemma(const TowerPtr& tower, std::uint64_t pair_budget = 1u << 14,
                                        std::size_t shards = 1);

struct InverseLemmaReport {
    std::size_t m = 0, m_f_inverse = 0, m_g_inverse = 0;
    /// Witness of (f, g) pushed through the substitutions of the lemma.
    PropWitness transformed_f, transformed_g;
    bool transformed_f_valid = false, transformed_g_valid = false;
    bool ok() const { return transformed_f_valid && transformed_g_valid && m == m_f_inverse && m == m_g_inverse; }
};

/// (f, g) -> (f^{-1}, f^{-1} ∘ g) and (g^{-1}, g^{-1} ∘ f).
InverseLemmaReport verify_inverse_lemma(const LinPoly& f, const LinPoly& g);

struct InverseSweepReport {
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    std::vector<std::pair<LinPoly, LinPoly>> failing;
};

/// Exhaustive over invertible pairs when `samples` is 0, otherwise that many
/// pairs drawn with the given seed.
InverseSweepReport verify_inverse_lemma_sweep(const TowerPtr& tower, std::uint64_t samples, std::uint64_t seed,
                                              std::size_t shards = 1);

struct TwoNonZeroReport {
    std::uint64_t examined = 0;
    std::uint64_t qualifying = 0;
    std::uint64_t violations = 0;
    std::vector<LinPoly> failing;
};

/// Invertible f with exactly two non-zero coefficients that are not
/// semi-linear over any F_{q^s} with 1 < s | h must have a dense inverse.
TwoNonZeroReport verify_two_nonzero_lemma(const TowerPtr& tower);

/// Smallest n for which the k = 3 theorem applies: 2q+3 for h = 2,
/// q^2 + 3 + [q == 2] for h = 3; nullopt otherwise.
std::optional<std::uint64_t> k3_threshold(const FieldTower& t);

struct LmPropReport {
    std::uint64_t n = 0, m = 0;
    std::optional<std::uint64_t> theorem_threshold;
    std::uint64_t pairs = 0;
    std::uint64_t satisfying = 0;      // pairs with Prop_m
    std::uint64_t counterexamples = 0;  // of those, not both monomial
    std::vector<PairRecord> records;    // counterexamples (capped)
};

/// For all invertible pairs: Prop_{n-3} implies both polynomials monomial.
LmPropReport verify_lm_prop_implication(const TowerPtr& tower, std::uint64_t n, std::uint64_t pair_budget = 1u << 14,
                                        std::size_t shards = 1);

}  // namespace addmds
