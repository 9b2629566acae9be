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
#include "addmds/gf.hpp"
#include "addmds/matrix.hpp"

namespace addmds {

/// Subspace of F_q^k, stored as a basis in reduced row echelon form so that
/// equal subspaces compare equal entry by entry.
class Subspace {
public:
    Subspace() = default;
    /// Column space of a k x c matrix with entries in F_q.
    static Subspace from_columns(const FieldTower& t, const Matrix& columns);
    static Subspace from_rows(const FieldTower& t, Matrix rows);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    /// k x dim matrix with the basis as columns (column-reduced echelon form).
    Matrix column_matrix() const { return basis_.transpose(); }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Multiset of subspaces of PG(k-1, q) of projective dimension <= h-1.
struct ProjectiveHSystem {
    TowerPtr tower;
    std::size_t ambient = 0;  // k, vector-space dimension
    std::vector<Subspace> elements;
};

/// pi_j = column space of G_j, where column j of the generator is G_j times
/// the basis vector (omega basis unless another basis is given).
ProjectiveHSystem system_from_code(const AdditiveCode& c);
ProjectiveHSystem system_from_code(const AdditiveCode& c, const CoordinateBasis& basis);

/// min over hyperplanes of the number of elements not inside the hyperplane.
std::size_t system_min_distance(const ProjectiveHSystem& s, std::uint64_t budget = std::uint64_t{1} << 24);

/// All elements of dimension h in F_q^{kh}, any k of them spanning.
bool is_pseudo_arc(const ProjectiveHSystem& s);

/// Matrix of x -> alpha x on the omega basis; column m holds the coordinates of alpha omega^m.
Matrix multiplication_matrix(const FieldTower& t, Elem alpha);
/// M(omega) assembled from the minimal polynomial of omega over F_q.
Matrix companion_matrix(const FieldTower& t);

/// Col(M(x_1); ...; M(x_k)).
Subspace spread_element(const FieldTower& t, const std::vector<Elem>& point);

/// For U of shape (k h) x h and rank h: the normalized point (first non-zero
/// coordinate 1) of PG(k-1, q^h) when U is an element of the standard
/// Desarguesian spread, nullopt otherwise.
std::optional<std::vector<Elem>> desarguesian_membership(const FieldTower& t, const Matrix& u);

/// Quotient by element j; other elements are mapped into F_q^k / pi_j,
/// written in the coordinates of the non-pivot positions of pi_j.
ProjectiveHSystem project_system(const ProjectiveHSystem& s, std::size_t j);

/// Column j of the generator is G_j times the omega basis, G_j holding a
/// basis of pi_j padded with zero columns to width h.
AdditiveCode code_from_system(const ProjectiveHSystem& s);

}  // namespace addmds
