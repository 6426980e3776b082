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

#ifndef ADKIT_TESTS_GOLDEN_HPP
#define ADKIT_TESTS_GOLDEN_HPP

#include "adkit/matrix.hpp"
#include "adkit/sparsity.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace adkit::tests {

// Golden values for the dim=7 benchmark fixture,
// x = (1.72, 3.45, 4.16, 4.87, 4.16, 3.45, 1.72), s = 1.3, t = 0.245828.

// The full 7x9 Jacobian as displayed at two decimals (truncated).
inline Matrix golden_dense_display()
{
    constexpr std::array<std::array<double, 9>, 7> rows = { {
        { -1.88, 1.01, 0.00, 0.00, 0.00, 0.00, 0.00, 0.21, -0.48 },
        { 1.01, -1.87, 1.01, 0.00, 0.00, 0.00, 0.00, 0.39, -1.78 },
        { 0.00, 1.01, -1.87, 1.01, 0.00, 0.00, 0.00, 0.48, -2.69 },
        { 0.00, 0.00, 1.01, -1.87, 1.01, 0.00, 0.00, 0.55, -3.49 },
        { 0.00, 0.00, 0.00, 1.01, -1.87, 1.01, 0.00, 0.48, -2.69 },
        { 0.00, 0.00, 0.00, 0.00, 1.01, -1.87, 1.01, 0.39, -1.78 },
        { 0.00, 0.00, 0.00, 0.00, 0.00, 1.01, -1.88, 0.21, -0.48 },
    } };
    Matrix m(7, 9);
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

// The compressed 7x5 Jacobian display (same entries folded by color).
inline Matrix golden_compressed_display()
{
    constexpr std::array<std::array<double, 5>, 7> rows = { {
        { -1.88, 1.01, 0.00, 0.21, -0.48 },
        { 1.01, -1.87, 1.01, 0.39, -1.78 },
        { 1.01, 1.01, -1.87, 0.48, -2.69 },
        { -1.87, 1.01, 1.01, 0.55, -3.49 },
        { 1.01, -1.87, 1.01, 0.48, -2.69 },
        { 1.01, 1.01, -1.87, 0.39, -1.78 },
        { -1.88, 0.00, 1.01, 0.21, -0.48 },
    } };
    Matrix m(7, 5);
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

// The 9x5 CPR seed: color classes {1,4,7}, {2,5}, {3,6}, {8}, {9}.
inline Matrix golden_cpr_seed()
{
    constexpr std::array<std::size_t, 9> color = { 1, 2, 3, 1, 2, 3, 1, 4, 5 };
    Matrix m(9, 5);
    for (std::size_t j = 0; j < 9; ++j) {
        m(j, color[j] - 1) = 1.0;
    }
    return m;
}

// Structural pattern of the 7x9 Jacobian: tridiagonal x block plus two
// dense parameter columns.
inline SparsityPattern golden_star_pattern()
{
    SparsityPattern pattern;
    pattern.cols = 9;
    pattern.rows = {
        { 1, 2, 8, 9 },
        { 1, 2, 3, 8, 9 },
        { 2, 3, 4, 8, 9 },
        { 3, 4, 5, 8, 9 },
        { 4, 5, 6, 8, 9 },
        { 5, 6, 7, 8, 9 },
        { 6, 7, 8, 9 },
    };
    return pattern;
}

// Sparse x-block rows as displayed; the second neighbor of row 4 sits at
// column 5 (the original listing misprints it as a repeated 4).
struct GoldenSparseEntry {
    std::size_t index;
    double value;
};

inline std::vector<std::vector<GoldenSparseEntry>> golden_sparse_display()
{
    return {
        { { 1, -1.88 }, { 2, 1.01 } },
        { { 1, 1.01 }, { 2, -1.87 }, { 3, 1.01 } },
        { { 2, 1.01 }, { 3, -1.87 }, { 4, 1.01 } },
        { { 3, 1.01 }, { 4, -1.87 }, { 5, 1.01 } },
        { { 4, 1.01 }, { 5, -1.87 }, { 6, 1.01 } },
        { { 5, 1.01 }, { 6, -1.87 }, { 7, 1.01 } },
        { { 6, 1.01 }, { 7, -1.88 } },
    };
}

// Residual at the fixture, frozen from an independent transliteration of
// the model evaluated out of band.
inline std::vector<double> golden_fixture_residual()
{
    return {
        0.28736149600411331,
        -0.50647303704774316,
        0.63540612420069165,
        -0.69288168260011984,
        0.63540612420069165,
        -0.50647303704774294,
        0.28736149600411331,
    };
}

} // namespace adkit::tests

#endif // ADKIT_TESTS_GOLDEN_HPP
