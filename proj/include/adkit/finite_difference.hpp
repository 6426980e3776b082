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

#ifndef ADKIT_FINITE_DIFFERENCE_HPP
#define ADKIT_FINITE_DIFFERENCE_HPP

#include "adkit/errors.hpp"
#include "adkit/matrix.hpp"
#include "adkit/vector_function.hpp"

#include <cmath>
#include <span>
#include <vector>

namespace adkit {

// Finite-difference Jacobian oracle.  Evaluates the function with plain
// doubles only and never touches the derivative-propagation code, so it can
// verify every AD mode independently.

enum class FdScheme {
    Forward,
    Central,
};

struct FdConfig {
    FdScheme scheme = FdScheme::Central;
    double base_step = 1e-6;
    bool relative_step = true; // scale the step by max(1, |x_j|)
};

template <class F>
Matrix fd_jacobian(const F& f, std::span<const double> x, const FdConfig& cfg = {})
{
    if (!(cfg.base_step > 0.0)) {
        throw DomainError("finite-difference step must be positive");
    }
    const std::size_t n = f.num_inputs();
    const std::size_t m = f.num_outputs();
    if (x.size() != n) {
        throw DimensionMismatch("input length does not match function arity");
    }

    Matrix jac(m, n);
    std::vector<double> point(x.begin(), x.end());
    const std::vector<double> base =
        cfg.scheme == FdScheme::Forward ? evaluate(f, point) : std::vector<double> {};

    for (std::size_t j = 0; j < n; ++j) {
        const double step =
            cfg.relative_step ? cfg.base_step * std::max(1.0, std::abs(x[j])) : cfg.base_step;
        const double saved = point[j];
        if (cfg.scheme == FdScheme::Central) {
            point[j] = saved + step;
            const std::vector<double> plus = evaluate(f, point);
            point[j] = saved - step;
            const std::vector<double> minus = evaluate(f, point);
            for (std::size_t i = 0; i < m; ++i) {
                jac(i, j) = (plus[i] - minus[i]) / (2.0 * step);
            }
        } else {
            point[j] = saved + step;
            const std::vector<double> plus = evaluate(f, point);
            for (std::size_t i = 0; i < m; ++i) {
                jac(i, j) = (plus[i] - base[i]) / step;
            }
        }
        point[j] = saved;
    }
    return jac;
}

} // namespace adkit

#endif // ADKIT_FINITE_DIFFERENCE_HPP
