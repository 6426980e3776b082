// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License.  You
// may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied.  See the License for the specific language governing
// permissions and limitations under the License.

#ifndef ADKIT_MATRIX_HPP
#define ADKIT_MATRIX_HPP

#include "adkit/errors.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace adkit {

/// Dense row-major matrix of doubles.  Just enough linear algebra for
/// Jacobians and seed matrices; equality is bit-exact.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return { data_.data() + i * cols_, cols_ }; }
    std::span<const double> row(std::size_t i) const
    {
        return { data_.data() + i * cols_, cols_ };
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Seed matrices are ordinary dense matrices: n rows (independents) by
/// p columns (propagated directions).
using SeedMatrix = Matrix;

} // namespace adkit

#endif // ADKIT_MATRIX_HPP
