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

#include "adkit/bit_pattern.hpp"
#include "adkit/dense_dual.hpp"
#include "adkit/forward_dense.hpp"
#include "adkit/forward_sparse.hpp"
#include "adkit/sparse_dual.hpp"
#include "adkit/tape.hpp"

#include "support/checks.hpp"
#include "support/golden.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace adkit;
using namespace adkit::tests;

TEST_CASE("problem invariants")
{
    CHECK_THROWS_AS(BratuProblem(1, 1.0, 0.0), InvalidDimension);
    CHECK_THROWS_AS(BratuProblem(0, 1.0, 0.0), InvalidDimension);
    const BratuProblem problem(7, bratu_fixture_s, bratu_fixture_t);
    CHECK(problem.grid_step() == 2.0 / 8.0);
    CHECK(BratuProblem(9999, 1.0, 0.0).grid_step() == 2.0 / 10000.0);
}

TEST_CASE("source term")
{
    CHECK(bratu_source(0.0, 1.3, bratu_fixture_t) == 1.3); // exp(0) = 1 exactly
    const double interior = bratu_source(3.45, bratu_fixture_s, bratu_fixture_t);
    CHECK(std::abs(interior - 8.409) <= 0.005);
    CHECK(interior == doctest::Approx(8.4076306003996919).epsilon(1e-14));
    CHECK(bratu_source(1.0, 1.3, 0.0) == 1.3 * std::exp(1.0)); // t = 0 degenerate
    // pole at 1 + t x = 0; active scalars and the plain residual both reject it
    const DenseDual pole(-1.0, std::vector<double> { 1.0 });
    CHECK_THROWS_AS(bratu_source(pole, 1.3, 1.0), DivisionByZero);
    const BratuProblem problem(2, 1.3, 1.0);
    CHECK_THROWS_AS(bratu_residual(problem, std::vector<double> { -1.0, 0.5 }), DivisionByZero);
}

TEST_CASE("residual at the fixture matches the frozen evaluation")
{
    const BratuProblem problem(7, bratu_fixture_s, bratu_fixture_t);
    const std::vector<double> f = bratu_residual(problem, bratu_fixture_state());
    const std::vector<double> golden = golden_fixture_residual();
    REQUIRE(f.size() == golden.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(rel_close(f[i], golden[i], 1e-13));
    }
}

TEST_CASE("residual at the zero state is h^2 s in every component")
{
    for (std::size_t dim : { 2, 7, 40 }) {
        const BratuProblem problem(dim, bratu_fixture_s, bratu_fixture_t);
        const std::vector<double> zero(dim, 0.0);
        const double h = problem.grid_step();
        for (double fi : bratu_residual(problem, zero)) {
            CHECK(fi == doctest::Approx(h * h * problem.s).epsilon(1e-14));
        }
    }
}

TEST_CASE("minimal dim=2 residual against a hand expansion")
{
    const BratuProblem problem(2, bratu_fixture_s, bratu_fixture_t);
    const std::vector<double> f = bratu_residual(problem, std::vector<double> { 1.0, 1.0 });
    // -2 + 1 + (2/3)^2 [s + 11 s e^{1/(1+t)}] / 12, worked out independently
    CHECK(rel_close(f[0], 0.23002259542447567, 1e-13));
    CHECK(rel_close(f[1], 0.23002259542447567, 1e-13));
}

TEST_CASE("every scalar type reproduces the plain values bit for bit")
{
    const BratuProblem problem(7, bratu_fixture_s, bratu_fixture_t);
    const BratuResidual f(problem, true);
    std::vector<double> v = bratu_fixture_state();
    v.push_back(problem.s);
    v.push_back(problem.t);

    const std::vector<double> plain = evaluate(f, v);

    std::vector<DenseDual> dense_in;
    std::vector<SparseDual> sparse_in;
    std::vector<BitDual> bit_in;
    for (std::size_t i = 0; i < v.size(); ++i) {
        dense_in.emplace_back(v[i], std::vector<double>(9, 0.25));
        sparse_in.emplace_back(v[i], sparse_seed(i + 1, 1.0));
        bit_in.emplace_back(v[i], BitPattern::unit(9, i + 1));
    }
    std::vector<DenseDual> dense_out(7);
    std::vector<SparseDual> sparse_out(7);
    std::vector<BitDual> bit_out(7);
    f(std::span<const DenseDual>(dense_in), std::span<DenseDual>(dense_out));
    f(std::span<const SparseDual>(sparse_in), std::span<SparseDual>(sparse_out));
    f(std::span<const BitDual>(bit_in), std::span<BitDual>(bit_out));

    const Tape tape = record_tape(1, f, v);
    const std::vector<double> traced = tape.recorded_dependents();

    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(dense_out[i].val == plain[i]);
        CHECK(sparse_out[i].val == plain[i]);
        CHECK(bit_out[i].val == plain[i]);
        CHECK(traced[i] == plain[i]);
    }
}

TEST_CASE("x-block Jacobian symmetry for the palindromic fixture")
{
    const BratuProblem problem(7, bratu_fixture_s, bratu_fixture_t);
    const BratuResidual f(problem, false);
    const Matrix jac = dense_jacobian(f, bratu_fixture_state());
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) {
            CHECK(rel_close(jac(i, j), jac(6 - i, 6 - j), 1e-12));
        }
    }
}

TEST_CASE("analytic support matches detected patterns across dimensions")
{
    for (std::size_t dim = 2; dim <= 20; ++dim) {
        const BratuProblem problem(dim, bratu_fixture_s, bratu_fixture_t);
        const std::vector<double> x = bratu_default_state(dim);

        const BratuResidual with_params(problem, true);
        std::vector<double> v = x;
        v.push_back(problem.s);
        v.push_back(problem.t);
        CHECK(pattern_jacobian(with_params, v) == bratu_jacobian_support(problem, true));

        const BratuResidual x_only(problem, false);
        CHECK(pattern_jacobian(x_only, x) == bratu_jacobian_support(problem, false));
    }
}

TEST_CASE("support shape and entry counts")
{
    const BratuProblem seven(7, bratu_fixture_s, bratu_fixture_t);
    CHECK(bratu_jacobian_support(seven, true) == golden_star_pattern());

    const BratuProblem two(2, bratu_fixture_s, bratu_fixture_t);
    const SparsityPattern both = bratu_jacobian_support(two, true);
    CHECK(both.rows[0] == std::vector<std::size_t> { 1, 2, 3, 4 });
    CHECK(both.rows[1] == std::vector<std::size_t> { 1, 2, 3, 4 });

    const BratuProblem large(10000, bratu_fixture_s, bratu_fixture_t);
    const SparsityPattern band = bratu_jacobian_support(large, false);
    std::size_t entries = 0;
    for (const auto& row : band.rows) {
        entries += row.size();
    }
    CHECK(entries == 3 * 10000 - 2);
}

TEST_CASE("parameter column follows the source split")
{
    // The s column is the source part of F divided by s: column dim+1 of the
    // Jacobian equals (F_i - linear part) / s.
    const BratuProblem problem(7, bratu_fixture_s, bratu_fixture_t);
    const BratuResidual f(problem, true);
    const std::vector<double> x = bratu_fixture_state();
    std::vector<double> v = x;
    v.push_back(problem.s);
    v.push_back(problem.t);
    const Matrix jac = dense_jacobian(f, v);
    const std::vector<double> residual = bratu_residual(problem, x);
    for (std::size_t i = 0; i < 7; ++i) {
        double linear = -2.0 * x[i];
        if (i > 0) {
            linear += x[i - 1];
        }
        if (i + 1 < 7) {
            linear += x[i + 1];
        }
        CHECK(std::abs(jac(i, 7) - (residual[i] - linear) / problem.s) <= 1e-10);
    }
}

TEST_CASE("default states")
{
    CHECK(bratu_default_state(7) == bratu_fixture_state());
    const std::vector<double> bump = bratu_default_state(11);
    CHECK(bump.size() == 11);
    CHECK(bump[0] > 0.0);
    CHECK(bump[5] == doctest::Approx(4.87).epsilon(1e-12)); // center of the bump
    CHECK(bump[2] == doctest::Approx(bump[8]).epsilon(1e-12)); // symmetric
}

TEST_CASE("state files")
{
    const std::string path = "state_test.tmp";
    {
        std::ofstream out(path);
        out << "1.5\n2.5\n-0.25\n";
    }
    CHECK(load_state_file(path) == std::vector<double> { 1.5, 2.5, -0.25 });
    {
        std::ofstream out(path);
        out << "1.5 nope\n";
    }
    CHECK_THROWS_AS(load_state_file(path), FormatError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_state_file(path), IoError);
}
