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

#include "adkit/bratu.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

namespace adkit {

std::vector<double> bratu_fixture_state()
{
    return { 1.72, 3.45, 4.16, 4.87, 4.16, 3.45, 1.72 };
}

std::vector<double> bratu_default_state(std::size_t dim)
{
    if (dim == 7) {
        return bratu_fixture_state();
    }
    // smooth symmetric bump peaking at the fixture's center value
    std::vector<double> x(dim);
    const double h = 2.0 / static_cast<double>(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        const double tau = -1.0 + static_cast<double>(i + 1) * h;
        x[i] = 4.87 * std::sin(std::numbers::pi * (tau + 1.0) / 2.0);
    }
    return x;
}

std::vector<double> load_state_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open state file: " + path);
    }
    std::vector<double> values;
    double v = 0.0;
    while (in >> v) {
        values.push_back(v);
    }
    if (!in.eof()) {
        throw FormatError("state file contains a non-numeric token: " + path);
    }
    if (values.empty()) {
        throw FormatError("state file is empty: " + path);
    }
    return values;
}

std::vector<double> bratu_residual(const BratuProblem& problem, std::span<const double> x)
{
    if (x.size() != problem.dim) {
        throw DimensionMismatch("state length does not match problem dimension");
    }
    for (double xi : x) {
        if (1.0 + problem.t * xi == 0.0) {
            throw DivisionByZero("state touches the pole of the source exponent");
        }
    }
    std::vector<double> out(problem.dim);
    bratu_residual_body<double, double>(problem.dim, problem.grid_step(), x, problem.s, problem.t,
                                        std::span<double>(out));
    return out;
}

SparsityPattern bratu_jacobian_support(const BratuProblem& problem, bool with_params)
{
    const std::size_t dim = problem.dim;
    SparsityPattern pattern;
    pattern.cols = dim + (with_params ? 2 : 0);
    pattern.rows.resize(dim);
    for (std::size_t i = 1; i <= dim; ++i) {
        auto& row = pattern.rows[i - 1];
        if (i > 1) {
            row.push_back(i - 1);
        }
        row.push_back(i);
        if (i < dim) {
            row.push_back(i + 1);
        }
        if (with_params) {
            row.push_back(dim + 1);
            row.push_back(dim + 2);
        }
    }
    return pattern;
}

} // namespace adkit
