/*
   Copyright 2026 The agqc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef AGQC_LINALG_HPP
#define AGQC_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "agqc/field.hpp"

namespace agqc {

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Elem e) { data_[i * cols_ + j] = e; }
    std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const Elem> r);
    /// First `n` rows.
    Matrix top(std::size_t n) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

Elem dot(const Field& F, std::span<const Elem> a, std::span<const Elem> b);
/// y += c * x
void axpy(const Field& F, Elem c, std::span<const Elem> x, std::span<Elem> y);

struct Echelon {
    Matrix reduced;                    // nonzero rows only, pivots equal to one
    std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form. Pivot choice: leftmost nonzero column, first
/// available row, so the result is a deterministic function of the input.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : M v = 0} as rows, (cols - rank) x cols.
Matrix nullspace(const Matrix& m);

/// A * B^T
Matrix gram(const Matrix& a, const Matrix& b, unsigned jobs = 1);
bool is_zero(const Matrix& m);

Matrix vstack(const Matrix& a, const Matrix& b);
/// rowspace(inner) is a subspace of rowspace(outer).
bool rowspace_contains(const Matrix& outer, const Matrix& inner);

/// Greedy rank extension: vectors are kept in reduced form and a new vector is
/// accepted iff it is independent of everything accepted so far.
class IncrementalEchelon {
public:
    IncrementalEchelon(FieldPtr field, std::size_t cols) : rows_(std::move(field), 0, cols) {}

    bool try_add(std::span<const Elem> v);
    bool is_independent(std::span<const Elem> v) const;
    std::size_t rank() const { return rows_.rows(); }

private:
    std::vector<Elem> reduce(std::span<const Elem> v) const;

    Matrix rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace agqc

#endif
