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

#include "addmds/linpoly.hpp"

namespace addmds {

LinPoly::LinPoly(TowerPtr tower, std::vector<Elem> coeffs) : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != tower_->h())
        throw Error(ErrorKind::DimensionMismatch, "linearized polynomial needs exactly h coefficients");
    for (auto c : coeffs_)
        if (c >= tower_->size()) throw Error(ErrorKind::InvalidArgument, "coefficient outside the field");
}

LinPoly LinPoly::zero(TowerPtr tower) {
    const unsigned h = tower->h();
    return LinPoly(std::move(tower), std::vector<Elem>(h, 0));
}

LinPoly LinPoly::monomial(TowerPtr tower, Elem a, unsigned i) {
    std::vector<Elem> c(tower->h(), 0);
    c.at(i) = a;
    return LinPoly(std::move(tower), std::move(c));
}

bool LinPoly::is_zero() const {
    for (auto c : coeffs_)
        if (c) return false;
    return true;
}

Elem lp_eval(const LinPoly& f, Elem x) {
    const auto& t = *f.tower();
    Elem r = 0;
    for (unsigned i = 0; i < f.h(); ++i)
        if (f.coeff(i)) r = t.add(r, t.mul(f.coeff(i), t.frob_pow(x, i)));
    return r;
}

LinPoly lp_compose(const LinPoly& f, const LinPoly& g) {
    require_same_tower(*f.tower(), *g.tower());
    const auto& t = *f.tower();
    const unsigned h = f.h();
    std::vector<Elem> r(h, 0);
    // f(g(X)) = sum_i f_i (sum_j g_j X^{q^j})^{q^i} = sum_l (sum_i f_i g_{l-i}^{q^i}) X^{q^l}
    for (unsigned i = 0; i < h; ++i) {
        if (!f.coeff(i)) continue;
        for (unsigned j = 0; j < h; ++j) {
            if (!g.coeff(j)) continue;
            const unsigned l = (i + j) % h;
            r[l] = t.add(r[l], t.mul(f.coeff(i), t.frob_pow(g.coeff(j), i)));
        }
    }
    return LinPoly(f.tower(), std::move(r));
}

LinPoly lp_add(const LinPoly& f, const LinPoly& g) {
    require_same_tower(*f.tower(), *g.tower());
    std::vector<Elem> r(f.h());
    for (unsigned i = 0; i < f.h(); ++i) r[i] = f.tower()->add(f.coeff(i), g.coeff(i));
    return LinPoly(f.tower(), std::move(r));
}

LinPoly lp_scale(Elem a, const LinPoly& f) {
    std::vector<Elem> r(f.h());
    for (unsigned i = 0; i < f.h(); ++i) r[i] = f.tower()->mul(a, f.coeff(i));
    return LinPoly(f.tower(), std::move(r));
}

Matrix dickson_matrix(const LinPoly& f) {
    const auto& t = *f.tower();
    const unsigned h = f.h();
    Matrix m(h, h);
    for (unsigned i = 0; i < h; ++i)
        for (unsigned j = 0; j < h; ++j) m(i, j) = t.frob_pow(f.coeff((j + h - i) % h), i);
    return m;
}

Elem dickson_determinant(const LinPoly& f) { return determinant(*f.tower(), dickson_matrix(f)); }

bool lp_is_invertible(const LinPoly& f) { return dickson_determinant(f) != 0; }

LinPoly lp_invert(const LinPoly& f) {
    auto inv = inverse(*f.tower(), dickson_matrix(f));
    if (!inv) throw Error(ErrorKind::NotInvertible, "Dickson matrix is singular");
    return LinPoly(f.tower(), inv->row(0));
}

LinPoly conjugate(const LinPoly& g, Elem a) { return conjugate(g, lp_invert(g), a); }

LinPoly conjugate(const LinPoly& g, const LinPoly& g_inv, Elem a) {
    if (a == 0) throw Error(ErrorKind::ZeroScalar, "conjugation by zero");
    return lp_compose(g, lp_scale(a, g_inv));
}

unsigned zero_coeff_count(const LinPoly& f) {
    unsigned n = 0;
    for (auto c : f.coeffs())
        if (!c) ++n;
    return n;
}

bool is_monomial(const LinPoly& f) { return f.h() > 0 && zero_coeff_count(f) == f.h() - 1; }

bool is_semilinear(const LinPoly& f, unsigned s) {
    const unsigned h = f.h();
    if (s == 0 || h % s != 0)
        throw Error(ErrorKind::InvalidSubfield, "s=" + std::to_string(s) + " does not divide h");
    int cls = -1;
    for (unsigned j = 0; j < h; ++j) {
        if (!f.coeff(j)) continue;
        const int r = static_cast<int>(j % s);
        if (cls < 0)
            cls = r;
        else if (cls != r)
            return false;
    }
    if (cls < 0) throw Error(ErrorKind::InvalidArgument, "semi-linearity of the zero polynomial");
    return true;
}

LinPoly lp_from_basis_values(const TowerPtr& tower, const std::vector<Elem>& values) {
    const auto& t = *tower;
    const unsigned h = t.h();
    if (values.size() != h) throw Error(ErrorKind::DimensionMismatch, "need one value per basis element");
    Matrix moore(h, h);
    for (unsigned l = 0; l < h; ++l)
        for (unsigned i = 0; i < h; ++i) moore(l, i) = t.frob_pow(t.omega_pow(l), i);
    auto inv = inverse(t, moore);
    return LinPoly(tower, mat_vec(t, *inv, values));
}

std::vector<LinPoly> invertible_linpolys(const TowerPtr& tower) {
    std::vector<LinPoly> out;
    for_each_linpoly(tower, [&](const LinPoly& f) {
        if (lp_is_invertible(f)) out.push_back(f);
        return true;
    });
    return out;
}

}  // namespace addmds
