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

#include "agqc/linalg.hpp"

#include <stdexcept>

#include "agqc/parallel.hpp"

namespace agqc {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

void Matrix::append_row(std::span<const Elem> r) {
    if (r.size() != cols_) throw std::invalid_argument("row length does not match matrix width");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::top(std::size_t n) const {
    if (n > rows_) throw std::out_of_range("Matrix::top beyond row count");
    Matrix out(field_, 0, cols_);
    out.data_.assign(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(n * cols_));
    out.rows_ = n;
    return out;
}

Elem dot(const Field& F, std::span<const Elem> a, std::span<const Elem> b) {
    Elem acc{0};
    for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
}

void axpy(const Field& F, Elem c, std::span<const Elem> x, std::span<Elem> y) {
    if (c.v == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].v != 0) y[i] = F.add(y[i], F.mul(c, x[i]));
}

Echelon rref(const Matrix& m) {
    const Field& F = *m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t pr = r;
        while (pr < a.rows() && a.at(pr, col).v == 0) ++pr;
        if (pr == a.rows()) continue;
        if (pr != r) {
            auto x = a.row(pr), y = a.row(r);
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(x[j], y[j]);
        }
        Elem inv = F.inv(a.at(r, col));
        for (Elem& e : a.row(r)) e = F.mul(e, inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            Elem c = a.at(i, col);
            if (c.v != 0) axpy(F, F.neg(c), a.row(r), a.row(i));
        }
        pivots.push_back(col);
        ++r;
    }
    return {a.top(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
    const Field& F = *m.field();
    Echelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    Matrix out(m.field(), 0, n);
    std::vector<Elem> v(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), Elem{0});
        v[free] = F.one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = F.neg(e.reduced.at(i, free));
        out.append_row(v);
    }
    return out;
}

Matrix gram(const Matrix& a, const Matrix& b, unsigned jobs) {
    if (a.cols() != b.cols()) throw std::invalid_argument("gram: width mismatch");
    const Field& F = *a.field();
    Matrix out(a.field(), a.rows(), b.rows());
    parallel_for(a.rows(), jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < b.rows(); ++j) out.set(i, j, dot(F, a.row(i), b.row(j)));
    });
    return out;
}

bool is_zero(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (Elem e : m.row(i))
            if (e.v != 0) return false;
    return true;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: width mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
    return out;
}

bool rowspace_contains(const Matrix& outer, const Matrix& inner) {
    if (outer.cols() != inner.cols()) return false;
    IncrementalEchelon ech(outer.field(), outer.cols());
    for (std::size_t i = 0; i < outer.rows(); ++i) ech.try_add(outer.row(i));
    for (std::size_t i = 0; i < inner.rows(); ++i)
        if (ech.is_independent(inner.row(i))) return false;
    return true;
}

std::vector<Elem> IncrementalEchelon::reduce(std::span<const Elem> v) const {
    const Field& F = *rows_.field();
    std::vector<Elem> w(v.begin(), v.end());
    // Row i has zeros at the pivots of rows < i, so one ascending pass suffices.
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Elem c = w[pivots_[i]];
        if (c.v != 0) axpy(F, F.neg(c), rows_.row(i), w);
    }
    return w;
}

bool IncrementalEchelon::is_independent(std::span<const Elem> v) const {
    if (v.size() != rows_.cols()) throw std::invalid_argument("vector length does not match echelon width");
    for (Elem e : reduce(v))
        if (e.v != 0) return true;
    return false;
}

bool IncrementalEchelon::try_add(std::span<const Elem> v) {
    if (v.size() != rows_.cols()) throw std::invalid_argument("vector length does not match echelon width");
    std::vector<Elem> w = reduce(v);
    std::size_t pivot = 0;
    while (pivot < w.size() && w[pivot].v == 0) ++pivot;
    if (pivot == w.size()) return false;
    const Field& F = *rows_.field();
    Elem inv = F.inv(w[pivot]);
    for (Elem& e : w) e = F.mul(e, inv);
    rows_.append_row(w);
    pivots_.push_back(pivot);
    return true;
}

}  // namespace agqc
