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

#include <vector>

#include "addmds/gf.hpp"
#include "addmds/matrix.hpp"

namespace addmds {

/// q-linearized polynomial f(X) = sum_{i<h} f_i X^{q^i} over F_{q^h}.
/// Always reduced modulo X^{q^h} - X, so exactly h coefficients are stored.
class LinPoly {
public:
    LinPoly() = default;
    LinPoly(TowerPtr tower, std::vector<Elem> coeffs);

    /// The zero map.
    static LinPoly zero(TowerPtr tower);
    /// a * X^{q^i}
    static LinPoly monomial(TowerPtr tower, Elem a, unsigned i);
    /// a * X
    static LinPoly scalar(TowerPtr tower, Elem a) { return monomial(std::move(tower), a, 0); }
    static LinPoly identity(TowerPtr tower) { return scalar(std::move(tower), 1); }

    const TowerPtr& tower() const noexcept { return tower_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    Elem coeff(unsigned i) const { return coeffs_.at(i); }
    unsigned h() const noexcept { return static_cast<unsigned>(coeffs_.size()); }

    bool is_zero() const;

    bool operator==(const LinPoly& o) const { return coeffs_ == o.coeffs_; }
    /// Lexicographic on coefficient indices, f_0 first.
    bool operator<(const LinPoly& o) const { return coeffs_ < o.coeffs_; }

private:
    TowerPtr tower_;
    std::vector<Elem> coeffs_;
};

Elem lp_eval(const LinPoly& f, Elem x);
/// f ∘ g
LinPoly lp_compose(const LinPoly& f, const LinPoly& g);
LinPoly lp_add(const LinPoly& f, const LinPoly& g);
/// a * f(X)
LinPoly lp_scale(Elem a, const LinPoly& f);

/// Entry (i, j) is F_{(j-i) mod h}^{q^i}.
Matrix dickson_matrix(const LinPoly& f);
Elem dickson_determinant(const LinPoly& f);
bool lp_is_invertible(const LinPoly& f);

/// Throws NotInvertible when the Dickson determinant vanishes.
LinPoly lp_invert(const LinPoly& f);

/// g ∘ (aX) ∘ g^{-1}
LinPoly conjugate(const LinPoly& g, Elem a);
/// Same, with a precomputed inverse of g.
LinPoly conjugate(const LinPoly& g, const LinPoly& g_inv, Elem a);

unsigned zero_coeff_count(const LinPoly& f);
bool is_monomial(const LinPoly& f);
/// Support of the coefficients inside one residue class mod s (s | h, f != 0).
bool is_semilinear(const LinPoly& f, unsigned s);

/// The unique linearized polynomial taking the values `values[l]` at omega^l.
LinPoly lp_from_basis_values(const TowerPtr& tower, const std::vector<Elem>& values);

/// Enumerates all q^{h*h} coefficient vectors in lexicographic order and calls
/// fn on each; stops early when fn returns false.
template <class Fn>
void for_each_linpoly(const TowerPtr& tower, Fn&& fn) {
    const unsigned h = tower->h();
    const std::size_t n = tower->size();
    std::vector<Elem> c(h, 0);
    while (true) {
        if (!fn(LinPoly(tower, c))) return;
        unsigned i = h;
        while (i > 0) {
            --i;
            if (++c[i] < n) break;
            c[i] = 0;
            if (i == 0) return;
        }
    }
}

/// All invertible linearized polynomials in lexicographic order.
std::vector<LinPoly> invertible_linpolys(const TowerPtr& tower);

}  // namespace addmds
