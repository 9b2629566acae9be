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

#include <cstddef>
#include <optional>
#include <vector>

#include "addmds/gf.hpp"

namespace addmds {

/// Dense row-major matrix of tower elements. Whether it is read over F_q or
/// over F_{q^h} is decided by the caller; arithmetic always uses the tower.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Elem fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Elem> row(std::size_t r) const;
    std::vector<Elem> col(std::size_t c) const;
    void set_row(std::size_t r, const std::vector<Elem>& values);

    Matrix transpose() const;
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

Matrix mat_mul(const FieldTower& t, const Matrix& a, const Matrix& b);
std::vector<Elem> mat_vec(const FieldTower& t, const Matrix& a, const std::vector<Elem>& v);
std::vector<Elem> vec_mat(const FieldTower& t, const std::vector<Elem>& v, const Matrix& a);
Matrix mat_add(const FieldTower& t, const Matrix& a, const Matrix& b);
Matrix mat_scale(const FieldTower& t, Elem s, const Matrix& a);
/// Entrywise x -> x^q.
Matrix mat_frobenius(const FieldTower& t, const Matrix& a);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const FieldTower& t, Matrix& m);
std::size_t rank(const FieldTower& t, Matrix m);
Elem determinant(const FieldTower& t, Matrix m);
std::optional<Matrix> inverse(const FieldTower& t, const Matrix& m);
/// Basis (as rows) of {x : x * m = 0}.
Matrix left_kernel(const FieldTower& t, const Matrix& m);

/// Replaces every entry by its F_q-coordinates over the omega basis:
/// an r x c matrix over F_{q^h} becomes r x (c*h).
Matrix expand_coords(const FieldTower& t, const Matrix& m);

}  // namespace addmds
