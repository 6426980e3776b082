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

#ifndef ADKIT_FORWARD_SPARSE_HPP
#define ADKIT_FORWARD_SPARSE_HPP

#include "adkit/bit_pattern.hpp"
#include "adkit/errors.hpp"
#include "adkit/sparse_dual.hpp"
#include "adkit/sparsity.hpp"
#include "adkit/vector_function.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace adkit {

/// Sparse forward mode.  Row i of the result holds the nonzeros of
/// dF_i/dx_j for j in the active set; inactive inputs enter as passive
/// values.  The sparsity pattern need not be known beforehand.
template <class F>
    requires VectorFunctionOf<F, SparseDual>
std::vector<SparseDerivative> sparse_jacobian(const F& f, std::span<const double> x,
                                              std::vector<std::size_t> active)
{
    const std::size_t n = f.num_inputs();
    if (x.size() != n) {
        throw DimensionMismatch("input length does not match function arity");
    }
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());
    for (std::size_t j : active) {
        if (j == 0 || j > n) {
            throw InvalidIndex("active index outside 1..n");
        }
    }

    std::vector<SparseDual> in;
    in.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        in.emplace_back(x[j]);
    }
    for (std::size_t j : active) {
        in[j - 1].der = sparse_seed(j, 1.0);
    }
    std::vector<SparseDual> out(f.num_outputs());
    f(std::span<const SparseDual>(in), std::span<SparseDual>(out));

    std::vector<SparseDerivative> rows;
    rows.reserve(out.size());
    for (SparseDual& y : out) {
        rows.push_back(std::move(y.der));
    }
    return rows;
}

/// All inputs active.
template <class F>
    requires VectorFunctionOf<F, SparseDual>
std::vector<SparseDerivative> sparse_jacobian(const F& f, std::span<const double> x)
{
    std::vector<std::size_t> active(f.num_inputs());
    for (std::size_t j = 0; j < active.size(); ++j) {
        active[j] = j + 1;
    }
    return sparse_jacobian(f, x, std::move(active));
}

/// Structural sparsity of the Jacobian by bit-pattern propagation: every
/// input is seeded with its own bit, binary operations union the bits.
template <class F>
    requires VectorFunctionOf<F, BitDual>
SparsityPattern pattern_jacobian(const F& f, std::span<const double> x)
{
    const std::size_t n = f.num_inputs();
    if (x.size() != n) {
        throw DimensionMismatch("input length does not match function arity");
    }
    std::vector<BitDual> in;
    in.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        in.emplace_back(x[j], BitPattern::unit(n, j + 1));
    }
    std::vector<BitDual> out(f.num_outputs());
    f(std::span<const BitDual>(in), std::span<BitDual>(out));

    SparsityPattern pattern;
    pattern.cols = n;
    pattern.rows.reserve(out.size());
    for (const BitDual& y : out) {
        pattern.rows.push_back(y.dep.indices());
    }
    return pattern;
}

/// Structural support of already-computed sparse rows.
inline SparsityPattern support(const std::vector<SparseDerivative>& rows, std::size_t n)
{
    SparsityPattern pattern;
    pattern.cols = n;
    pattern.rows.reserve(rows.size());
    for (const SparseDerivative& row : rows) {
        std::vector<std::size_t> indices;
        indices.reserve(row.size());
        for (const SparseEntry& e : row.entries()) {
            indices.push_back(e.index);
        }
        pattern.rows.push_back(std::move(indices));
    }
    return pattern;
}

} // namespace adkit

#endif // ADKIT_FORWARD_SPARSE_HPP
