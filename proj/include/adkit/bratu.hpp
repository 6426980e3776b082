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

#ifndef ADKIT_BRATU_HPP
#define ADKIT_BRATU_HPP

#include "adkit/errors.hpp"
#include "adkit/sparsity.hpp"

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace adkit {

/// Discretized thermal-explosion (Bratu-type) boundary value problem on
/// (-1, 1) with zero boundary values:
///
///     F_i = x_{i-1} - 2 x_i + x_{i+1} + h^2 [f_{i-1} + 10 f_i + f_{i+1}] / 12
///
/// for i = 1..dim, with x_0 = x_{dim+1} = 0, f_i = s exp(x_i / (1 + t x_i))
/// and boundary sources f_0 = f_{dim+1} = s.
struct BratuProblem {
    std::size_t dim;
    double s;
    double t;

    BratuProblem(std::size_t dim_, double s_, double t_) : dim(dim_), s(s_), t(t_)
    {
        if (dim < 2) {
            throw InvalidDimension("problem needs at least two interior grid points");
        }
    }

    double grid_step() const { return 2.0 / static_cast<double>(dim + 1); }
};

inline constexpr double bratu_fixture_s = 1.3;
inline constexpr double bratu_fixture_t = 0.245828;

/// The canonical dim=7 evaluation state.
std::vector<double> bratu_fixture_state();

/// The fixture for dim=7; a smooth symmetric bump for any other dim.
std::vector<double> bratu_default_state(std::size_t dim);

/// State vector from a whitespace-separated text file, one value per line.
std::vector<double> load_state_file(const std::string& path);

/// Nonlinear source term s * exp(x / (1 + t x)).  The parameters may be
/// passive reals or active scalars of the same type as x.
template <class T, class S>
T bratu_source(const T& x, const S& s, const S& t)
{
    using std::exp;
    return s * exp(x / (1.0 + t * x));
}

/// The residual body, generic over the scalar type so one definition serves
/// every differentiation mode.  out must have length dim.
template <class T, class S>
void bratu_residual_body(std::size_t dim, double h, std::span<const T> x, const S& s, const S& t,
                         std::span<T> out)
{
    const double weight = h * h / 12.0;
    std::vector<T> src;
    src.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        src.push_back(bratu_source(x[i], s, t));
    }
    for (std::size_t i = 0; i < dim; ++i) {
        T linear = -2.0 * x[i];
        if (i > 0) {
            linear = linear + x[i - 1];
        }
        if (i + 1 < dim) {
            linear = linear + x[i + 1];
        }
        // boundary sources are s * exp(0) = s
        T stencil = i > 0 ? src[i - 1] + 10.0 * src[i] : s + 10.0 * src[i];
        stencil = i + 1 < dim ? stencil + src[i + 1] : stencil + s;
        out[i] = linear + weight * stencil;
    }
}

/// The benchmark residual as a vector function.  With params_active the
/// independents are (x_1..x_dim, s, t); otherwise s and t enter as passive
/// constants and only x is differentiated.
class BratuResidual {
public:
    BratuResidual(BratuProblem problem, bool params_active)
        : problem_(problem), params_active_(params_active)
    {
    }

    const BratuProblem& problem() const { return problem_; }
    bool params_active() const { return params_active_; }

    std::size_t num_inputs() const { return problem_.dim + (params_active_ ? 2 : 0); }
    std::size_t num_outputs() const { return problem_.dim; }

    template <class T>
    void operator()(std::span<const T> in, std::span<T> out) const
    {
        const std::size_t dim = problem_.dim;
        if (params_active_) {
            bratu_residual_body<T, T>(dim, problem_.grid_step(), in.subspan(0, dim), in[dim],
                                      in[dim + 1], out);
        } else {
            bratu_residual_body<T, double>(dim, problem_.grid_step(), in.subspan(0, dim),
                                           problem_.s, problem_.t, out);
        }
    }

private:
    BratuProblem problem_;
    bool params_active_;
};

/// Plain-value residual at a state vector of length dim.
std::vector<double> bratu_residual(const BratuProblem& problem, std::span<const double> x);

/// Analytic structural support: tridiagonal in the x block, plus two dense
/// parameter columns when with_params is set.
SparsityPattern bratu_jacobian_support(const BratuProblem& problem, bool with_params);

} // namespace adkit

#endif // ADKIT_BRATU_HPP
