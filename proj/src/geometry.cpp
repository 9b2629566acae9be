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

#include "addmds/geometry.hpp"

namespace addmds {

Subspace Subspace::from_rows(const FieldTower& t, Matrix rows) {
    Subspace s;
    s.ambient_ = rows.cols();
    s.pivots_ = rref(t, rows);
    Matrix b(s.pivots_.size(), rows.cols());
    for (std::size_t r = 0; r < s.pivots_.size(); ++r) b.set_row(r, rows.row(r));
    s.basis_ = std::move(b);
    return s;
}

Subspace Subspace::from_columns(const FieldTower& t, const Matrix& columns) {
    return from_rows(t, columns.transpose());
}

namespace {

ProjectiveHSystem system_with(const AdditiveCode& c, auto&& coords) {
    const auto& t = *c.tower();
    ProjectiveHSystem s;
    s.tower = c.tower();
    s.ambient = c.k_fq();
    for (std::size_t j = 0; j < c.n(); ++j) {
        Matrix gj(c.k_fq(), t.h());
        for (std::size_t r = 0; r < c.k_fq(); ++r) {
            const auto v = coords(c.gen()(r, j));
            for (unsigned l = 0; l < t.h(); ++l) gj(r, l) = v[l];
        }
        s.elements.push_back(Subspace::from_columns(t, gj));
    }
    return s;
}

Elem dot(const FieldTower& t, const std::vector<Elem>& a, const Matrix& m, std::size_t row) {
    Elem r = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) r = t.add(r, t.mul(a[i], m(row, i)));
    return r;
}

}  // namespace

ProjectiveHSystem system_from_code(const AdditiveCode& c) {
    return system_with(c, [&](Elem x) { return c.tower()->coords(x); });
}

ProjectiveHSystem system_from_code(const AdditiveCode& c, const CoordinateBasis& basis) {
    return system_with(c, [&](Elem x) { return basis.coords(x); });
}

std::size_t system_min_distance(const ProjectiveHSystem& s, std::uint64_t budget) {
    const auto& t = *s.tower;
    const auto& base = t.base_field();
    const std::size_t q = base.size(), k = s.ambient;
    if (k == 0) throw Error(ErrorKind::BadDimension, "system in a zero-dimensional space");
    std::uint64_t hyperplanes = 0, qp = 1;
    for (std::size_t i = 0; i < k; ++i) {
        hyperplanes += qp;
        if (hyperplanes > budget) throw Error(ErrorKind::BudgetExceeded, "too many hyperplanes");
        qp *= q;
    }

    std::size_t best = s.elements.size();
    std::vector<Elem> a(k);
    // Normalized hyperplane coefficient vectors: a leading 1 at position lead, free digits after it.
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::vector<std::size_t> digit(k - lead - 1, 0);
        while (true) {
            std::fill(a.begin(), a.end(), 0);
            a[lead] = 1;
            for (std::size_t i = 0; i < digit.size(); ++i) a[lead + 1 + i] = base[digit[i]];
            std::size_t outside = 0;
            for (const auto& el : s.elements) {
                for (std::size_t r = 0; r < el.dim(); ++r)
                    if (dot(t, a, el.basis(), r) != 0) {
                        ++outside;
                        break;
                    }
            }
            best = std::min(best, outside);
            std::size_t i = 0;
            for (; i < digit.size(); ++i) {
                if (++digit[i] < q) break;
                digit[i] = 0;
            }
            if (i == digit.size()) break;
        }
    }
    return best;
}

bool is_pseudo_arc(const ProjectiveHSystem& s) {
    const auto& t = *s.tower;
    const unsigned h = t.h();
    if (s.ambient % h != 0) throw Error(ErrorKind::DimensionMismatch, "ambient dimension is not a multiple of h");
    for (const auto& el : s.elements)
        if (el.dim() != h) throw Error(ErrorKind::DimensionMismatch, "pseudo-arc elements must have dimension h");
    const std::size_t k = s.ambient / h, n = s.elements.size();
    if (k > n) return false;
    std::vector<std::size_t> sel(k);
    for (std::size_t i = 0; i < k; ++i) sel[i] = i;
    while (true) {
        Matrix stacked(k * h, s.ambient);
        for (std::size_t i = 0; i < k; ++i)
            for (unsigned r = 0; r < h; ++r) stacked.set_row(i * h + r, s.elements[sel[i]].basis().row(r));
        if (rank(t, stacked) != s.ambient) return false;
        std::size_t i = k;
        while (i > 0 && sel[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++sel[i - 1];
        for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
}

Matrix multiplication_matrix(const FieldTower& t, Elem alpha) {
    const unsigned h = t.h();
    Matrix m(h, h);
    for (unsigned c = 0; c < h; ++c) {
        const auto v = t.coords(t.mul(alpha, t.omega_pow(c)));
        for (unsigned r = 0; r < h; ++r) m(r, c) = v[r];
    }
    return m;
}

Matrix companion_matrix(const FieldTower& t) {
    // omega^h = a_0 + a_1 omega + ... + a_{h-1} omega^{h-1}
    const unsigned h = t.h();
    const auto a = t.coords(t.omega_pow(h));
    Matrix m(h, h);
    for (unsigned r = 1; r < h; ++r) m(r, r - 1) = 1;
    for (unsigned r = 0; r < h; ++r) m(r, h - 1) = a[r];
    return m;
}

Subspace spread_element(const FieldTower& t, const std::vector<Elem>& point) {
    const unsigned h = t.h();
    Matrix stacked(point.size() * h, h);
    for (std::size_t i = 0; i < point.size(); ++i) {
        const Matrix m = multiplication_matrix(t, point[i]);
        for (unsigned r = 0; r < h; ++r)
            for (unsigned c = 0; c < h; ++c) stacked(i * h + r, c) = m(r, c);
    }
    return Subspace::from_columns(t, stacked);
}

std::optional<std::vector<Elem>> desarguesian_membership(const FieldTower& t, const Matrix& u) {
    const unsigned h = t.h();
    if (u.cols() != h || u.rows() % h != 0 || u.rows() == 0)
        throw Error(ErrorKind::BadShape, "expected a (k h) x h matrix");
    if (rank(t, u) != h) throw Error(ErrorKind::BadShape, "matrix does not have rank h");
    const std::size_t k = u.rows() / h;
    auto as_vector = [&](std::size_t col) {
        std::vector<Elem> v(k);
        std::vector<Elem> c(h);
        for (std::size_t i = 0; i < k; ++i) {
            for (unsigned l = 0; l < h; ++l) c[l] = u(i * h + l, col);
            v[i] = t.from_coords(c);
        }
        return v;
    };
    std::vector<Elem> lead = as_vector(0);
    std::size_t s = 0;
    while (lead[s] == 0) ++s;
    const Elem norm = t.inv(lead[s]);
    for (auto& x : lead) x = t.mul(norm, x);
    for (unsigned col = 1; col < h; ++col) {
        const auto v = as_vector(col);
        const Elem lambda = v[s];
        for (std::size_t i = 0; i < k; ++i)
            if (v[i] != t.mul(lambda, lead[i])) return std::nullopt;
    }
    return lead;
}

ProjectiveHSystem project_system(const ProjectiveHSystem& s, std::size_t j) {
    if (j >= s.elements.size()) throw Error(ErrorKind::BadIndex, "projection index out of range");
    const auto& t = *s.tower;
    const Subspace& u = s.elements[j];
    std::vector<bool> pivot(s.ambient, false);
    for (auto p : u.pivots()) pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < s.ambient; ++c)
        if (!pivot[c]) free.push_back(c);

    auto reduce = [&](std::vector<Elem> v) {
        for (std::size_t r = 0; r < u.dim(); ++r) {
            const Elem f = v[u.pivots()[r]];
            if (!f) continue;
            for (std::size_t c = 0; c < s.ambient; ++c) v[c] = t.sub(v[c], t.mul(f, u.basis()(r, c)));
        }
        std::vector<Elem> out(free.size());
        for (std::size_t i = 0; i < free.size(); ++i) out[i] = v[free[i]];
        return out;
    };

    ProjectiveHSystem out;
    out.tower = s.tower;
    out.ambient = free.size();
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        if (i == j) continue;
        const auto& el = s.elements[i];
        Matrix img(el.dim(), free.size());
        for (std::size_t r = 0; r < el.dim(); ++r) img.set_row(r, reduce(el.basis().row(r)));
        out.elements.push_back(Subspace::from_rows(t, std::move(img)));
    }
    return out;
}

AdditiveCode code_from_system(const ProjectiveHSystem& s) {
    const auto& t = *s.tower;
    const unsigned h = t.h();
    std::size_t total = 0;
    for (const auto& el : s.elements) {
        if (el.dim() > h) throw Error(ErrorKind::DimensionMismatch, "element dimension exceeds h");
        if (el.ambient() != s.ambient) throw Error(ErrorKind::DimensionMismatch, "element ambient dimension");
        total += el.dim();
    }
    Matrix all(total, s.ambient);
    std::size_t r = 0;
    for (const auto& el : s.elements)
        for (std::size_t i = 0; i < el.dim(); ++i) all.set_row(r++, el.basis().row(i));
    if (rank(t, all) != s.ambient) throw Error(ErrorKind::SpanFailure, "system does not span the ambient space");

    Matrix g(s.ambient, s.elements.size());
    for (std::size_t j = 0; j < s.elements.size(); ++j) {
        const auto& el = s.elements[j];
        for (std::size_t row = 0; row < s.ambient; ++row) {
            Elem x = 0;
            for (std::size_t m = 0; m < el.dim(); ++m) x = t.add(x, t.mul(el.basis()(m, row), t.omega_pow(m)));
            g(row, j) = x;
        }
    }
    return AdditiveCode(s.tower, std::move(g));
}

}  // namespace addmds
