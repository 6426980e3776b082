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

#ifndef ADKIT_TESTS_CHECKS_HPP
#define ADKIT_TESTS_CHECKS_HPP

#include "adkit/matrix.hpp"
#include "adkit/sparse_vector.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace adkit::tests {

inline bool rel_close(double a, double b, double tol)
{
    return std::abs(a - b) <= tol * std::max({ 1.0, std::abs(a), std::abs(b) });
}

// The classic listings print values truncated toward zero at two decimals;
// a computed value matches a printed one when its truncated display is the
// same hundredth.
inline double truncate_display(double v)
{
    return std::copysign(std::trunc(std::abs(v) * 100.0 + 1e-7), v) / 100.0;
}

inline bool display_match(double computed, double printed)
{
    return std::abs(truncate_display(computed) - printed) < 1e-9;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

inline double max_rel_diff(const Matrix& a, const Matrix& b)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double scale = std::max({ 1.0, std::abs(a(i, j)), std::abs(b(i, j)) });
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / scale);
        }
    }
    return worst;
}

inline Matrix densify(const std::vector<SparseDerivative>& rows, std::size_t cols)
{
    Matrix out(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::vector<double> dense = to_dense(rows[i], cols);
        for (std::size_t j = 0; j < cols; ++j) {
            out(i, j) = dense[j];
        }
    }
    return out;
}

} // namespace adkit::tests

#endif // ADKIT_TESTS_CHECKS_HPP
