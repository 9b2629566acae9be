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

#include "addmds/code.hpp"
#include "addmds/linpoly.hpp"

namespace addmds {

/// Elementary bounds on n_q(k), the largest length of a linear [n, k] MDS
/// code over F_q: n_q(k) = k + 1 for k >= q, q + 1 <= n_q(k) <= q + k - 1
/// for 2 <= k <= q - 1. k = 1 is unbounded and not tabulated.
struct MdsLengthBounds {
    std::uint64_t lower = 0, upper = 0;
};

class MdsLengthTable {
public:
    static MdsLengthBounds bounds(std::uint64_t q, std::uint64_t k);
    /// Largest proper divisor of h (1 for prime h).
    static unsigned largest_proper_divisor(unsigned h);
};

/// Systematic generator (I_4 | A) of an [n, 4, n-3] code over F_q obtained
/// from the doubly extended Reed-Solomon code on the first n - 1 field
/// elements and infinity, rescaled so that column 4 and row 0 of A are all
/// ones. Entries are F_q elements of `tower`. Needs q >= 5 and 6 <= n <= q + 1.
Matrix base_mds_matrix(const TowerPtr& tower, std::size_t n = 6);

/// Codewords (x_0..x_3, x_0+x_1+x_2+x_3, ..., x_0 + G[1][n-1] x_1 + alpha x_2 + g(beta g^{-1}(x_3))).
/// No validation besides shapes.
AdditiveCode assemble_k4_code(const TowerPtr& tower, const Matrix& base, Elem alpha, Elem beta, const LinPoly& g);

struct K4Example {
    TowerPtr tower;
    Matrix base;
    Elem alpha = 0, beta = 0;
    LinPoly g;
    AdditiveCode code;

    /// Validates alpha, beta outside F_q, a common subfield strictly above F_q,
    /// g invertible and not semi-linear over that subfield. Throws InvalidArgument.
    static K4Example make(const TowerPtr& tower, const Matrix& base, Elem alpha, Elem beta, const LinPoly& g);

    /// Degree s of F_q(alpha) ∩ F_q(beta) over F_q.
    unsigned common_degree() const;
};

/// Exact MDS test for the assembled code: for every three of the first n - 1
/// positions the F_q-kernel v of the base equations must leave the last
/// coordinate non-singular (v_3 = 0: v_0 + a v_1 + alpha v_2 != 0, otherwise
/// g(beta g^{-1}(X)) - mu X invertible with mu = -(v_0 + a v_1 + alpha v_2)/v_3).
bool k4_mds_condition(const TowerPtr& tower, const Matrix& base, Elem alpha, const LinPoly& h_poly);

/// Sufficient conditions on h = g(beta g^{-1}(X)): no x != 0 with h(x)/x in span{1, alpha},
/// checked pointwise and via all lambda in F_q^2. They agree by construction.
bool span_condition_direct(const LinPoly& h_poly, Elem alpha);
bool span_condition_elimination(const LinPoly& h_poly, Elem alpha);

struct K4SearchOptions {
    std::size_t n = 6;
    std::uint64_t candidate_budget = kDefaultCandidateBudget;
    std::size_t shards = 1;
};

struct K4SearchResult {
    std::optional<K4Example> example;
    std::uint64_t space_size = 0;
    std::uint64_t examined = 0;  // candidates up to and including the hit (or all)
};

/// Lexicographic search over (alpha, beta, g): alpha and beta by packed
/// value, g in coefficient order. The first hit is the global minimum
/// regardless of the shard count.
K4SearchResult k4_example_search(const TowerPtr& tower, const K4SearchOptions& opts = {});

struct K4Report {
    bool mds_bruteforce = false;
    bool mds_condition = false;
    WitnessStatus proj_fourth = WitnessStatus::Unknown;  // project from position 3
    WitnessStatus proj_third = WitnessStatus::Unknown;   // project from position 2
    WitnessStatus full = WitnessStatus::Unknown;
    std::optional<LinPoly> proj_third_g;
    std::uint64_t full_space = 0;
    // Context for the field-descent bound with |A ∪ B| = 2.
    std::uint64_t n = 0;
    std::uint64_t union_size = 2;
    MdsLengthBounds nq_rest;
    std::uint64_t descent_bound = 0;  // |A ∪ B| + upper bound of n_q(k - |A ∪ B|)
    bool descent_consistent = false;

    bool ok() const {
        return mds_bruteforce && mds_condition && proj_fourth == WitnessStatus::Found &&
               proj_third == WitnessStatus::Found && full == WitnessStatus::NotEquivalent && descent_consistent;
    }
};

K4Report verify_k4_example(const K4Example& ex, std::uint64_t codeword_budget = kDefaultCodewordBudget,
                           std::uint64_t candidate_budget = kDefaultCandidateBudget);

}  // namespace addmds
