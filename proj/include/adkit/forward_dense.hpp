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

#ifndef ADKIT_FORWARD_DENSE_HPP
#define ADKIT_FORWARD_DENSE_HPP

#include "adkit/dense_dual.hpp"
#include "adkit/errors.hpp"
#include "adkit/matrix.hpp"
#include "adkit/vector_function.hpp"

#include <span>
#include <vector>

namespace adkit {

/// Cap on the number of propagated directions per evaluation.  The count is
/// a per-call runtime value; the cap only catches runaway requests.
inline constexpr std::size_t max_seed_columns = 1u << 16;

/// n-by-n identity seed, the full-Jacobian request.
inline SeedMatrix seed_identity(std::size_t n)
{
    if (n == 0) {
        throw InvalidDimension("seed matrix needs at least one column");
    }
    return Matrix::identity(n);
}

/// Value and propagated derivative block of one dense forward sweep:
/// value = F(x), jacobian = F'(x) * seed (m by p).
struct DenseForwardResult {
    std::vector<double> value;
    Matrix jacobian;
};

/// Dense forward-vector mode.  Each independent starts with its seed row as
/// derivative vector; running the body over dense duals propagates all p
/// directions at once.
template <class F>
    requires VectorFunctionOf<F, DenseDual>
DenseForwardResult forward_jacobian_product(const F& f, std::span<const double> x,
                                            const SeedMatrix& seed)
{
    const std::size_t n = f.num_inputs();
    const std::size_t m = f.num_outputs();
    if (x.size() != n) {
        throw DimensionMismatch("input length does not match function arity");
    }
    if (seed.rows() != n) {
        throw DimensionMismatch("seed matrix row count does not match independent count");
    }
    const std::size_t p = seed.cols();
    if (p == 0) {
        throw InvalidDimension("seed matrix needs at least one column");
    }
    if (p > max_seed_columns) {
        throw InvalidDimension("seed matrix exceeds the direction cap");
    }

    std::vector<DenseDual> in;
    in.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        in.emplace_back(x[i], std::vector<double>(seed.row(i).begin(), seed.row(i).end()));
    }
    std::vector<DenseDual> out(m);
    f(std::span<const DenseDual>(in), std::span<DenseDual>(out));

    DenseForwardResult result;
    result.value.resize(m);
    result.jacobian = Matrix(m, p);
    for (std::size_t i = 0; i < m; ++i) {
        result.value[i] = out[i].val;
        if (!out[i].passive()) {
            for (std::size_t k = 0; k < p; ++k) {
                result.jacobian(i, k) = out[i].der[k];
            }
        }
    }
    return result;
}

/// Full Jacobian via the identity seed.
template <class F>
    requires VectorFunctionOf<F, DenseDual>
Matrix dense_jacobian(const F& f, std::span<const double> x)
{
    return forward_jacobian_product(f, x, seed_identity(f.num_inputs())).jacobian;
}

} // namespace adkit

#endif // ADKIT_FORWARD_DENSE_HPP
