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

#include "addmds/matrix.hpp"

namespace addmds {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Elem> Matrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Elem> Matrix::col(std::size_t c) const {
    std::vector<Elem> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void Matrix::set_row(std::size_t r, const std::vector<Elem>& values) {
    if (values.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length");
    std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
}

Matrix mat_mul(const FieldTower& t, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem x = a(i, k);
            if (!x) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = t.add(c(i, j), t.mul(x, b(k, j)));
        }
    return c;
}

std::vector<Elem> mat_vec(const FieldTower& t, const Matrix& a, const std::vector<Elem>& v) {
    if (a.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
    std::vector<Elem> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] = t.add(out[i], t.mul(a(i, j), v[j]));
    return out;
}

std::vector<Elem> vec_mat(const FieldTower& t, const std::vector<Elem>& v, const Matrix& a) {
    if (a.rows() != v.size()) throw Error(ErrorKind::DimensionMismatch, "vector-matrix shapes");
    std::vector<Elem> out(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!v[i]) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] = t.add(out[j], t.mul(v[i], a(i, j)));
    }
    return out;
}

Matrix mat_add(const FieldTower& t, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix sum shapes");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = t.add(a(i, j), b(i, j));
    return c;
}

Matrix mat_scale(const FieldTower& t, Elem s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = t.mul(s, a(i, j));
    return c;
}

Matrix mat_frobenius(const FieldTower& t, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = t.frobenius(a(i, j));
    return c;
}

std::vector<std::size_t> rref(const FieldTower& t, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const Elem s = t.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = t.mul(s, m(r, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Elem f = t.neg(m(i, c));
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = t.add(m(i, j), t.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const FieldTower& t, Matrix m) { return rref(t, m).size(); }

Elem determinant(const FieldTower& t, Matrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = t.neg(det);
        }
        det = t.mul(det, m(c, c));
        const Elem s = t.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Elem f = t.neg(t.mul(m(i, c), s));
            for (std::size_t j = c; j < n; ++j) m(i, j) = t.add(m(i, j), t.mul(f, m(c, j)));
        }
    }
    return det;
}

std::optional<Matrix> inverse(const FieldTower& t, const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto piv = rref(t, aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Matrix left_kernel(const FieldTower& t, const Matrix& m) {
    // x m = 0  <=>  m^T x^T = 0; null space of m^T from its RREF.
    Matrix a = m.transpose();
    const auto piv = rref(t, a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    Matrix ker(n - piv.size(), n);
    std::size_t k = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        ker(k, free) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) ker(k, piv[r]) = t.neg(a(r, free));
        ++k;
    }
    return ker;
}

Matrix expand_coords(const FieldTower& t, const Matrix& m) {
    const unsigned h = t.h();
    Matrix out(m.rows(), m.cols() * h);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto c = t.coords(m(i, j));
            for (unsigned l = 0; l < h; ++l) out(i, j * h + l) = c[l];
        }
    return out;
}

}  // namespace addmds
