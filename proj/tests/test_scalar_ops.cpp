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

#include "adkit/scalar_ops.hpp"

#include "adkit/bit_pattern.hpp"
#include "adkit/dense_dual.hpp"
#include "adkit/sparse_dual.hpp"
#include "adkit/tape.hpp"
#include "adkit/vector_function.hpp"

#include "support/checks.hpp"
#include "support/functions.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace adkit;

TEST_CASE("elementary operation arities")
{
    CHECK(arity(OpKind::Const) == 0);
    for (OpKind k : { OpKind::Neg, OpKind::Exp, OpKind::Log, OpKind::Sin, OpKind::Cos,
                      OpKind::Sqrt, OpKind::PowConst, OpKind::AddConst, OpKind::MulConst }) {
        CHECK(arity(k) == 1);
    }
    for (OpKind k : { OpKind::Add, OpKind::Sub, OpKind::Mul, OpKind::Div }) {
        CHECK(arity(k) == 2);
    }
}

TEST_CASE("apply_elementary basics")
{
    const double zero[1] = { 0.0 };
    CHECK(apply_elementary({ OpKind::Exp }, zero) == 1.0);

    const double div_args[2] = { 1.0, 0.0 };
    CHECK_THROWS_AS(apply_elementary({ OpKind::Div }, div_args), DivisionByZero);

    // exp at the interior exponent of the benchmark point
    const double interior[1] = { 1.8670 };
    const double result = apply_elementary({ OpKind::Exp }, interior);
    CHECK(std::abs(result - 6.4684) <= 5e-4);
    CHECK(result == doctest::Approx(6.4688606782471991).epsilon(1e-14));

    const double pair[2] = { 2.0, 3.0 };
    CHECK(apply_elementary({ OpKind::Add }, pair) == 5.0);
    CHECK(apply_elementary({ OpKind::Sub }, pair) == -1.0);
    CHECK(apply_elementary({ OpKind::Mul }, pair) == 6.0);
    CHECK(apply_elementary({ OpKind::Div }, pair) == 2.0 / 3.0);
    const double single[1] = { 2.0 };
    CHECK(apply_elementary({ OpKind::Neg }, single) == -2.0);
    CHECK(apply_elementary({ OpKind::AddConst, 0.5 }, single) == 2.5);
    CHECK(apply_elementary({ OpKind::MulConst, -3.0 }, single) == -6.0);
    CHECK(apply_elementary({ OpKind::PowConst, 2.0 }, single) == 4.0);
    CHECK(apply_elementary({ OpKind::Const, 7.25 }, {}) == 7.25);
}

TEST_CASE("apply_elementary domain errors")
{
    const double zero[1] = { 0.0 };
    const double negative[1] = { -1.0 };
    CHECK_THROWS_AS(apply_elementary({ OpKind::Log }, zero), DomainError);
    CHECK_THROWS_AS(apply_elementary({ OpKind::Log }, negative), DomainError);
    CHECK_THROWS_AS(apply_elementary({ OpKind::Sqrt }, negative), DomainError);
    CHECK_THROWS_AS(apply_elementary({ OpKind::PowConst, 0.5 }, negative), DomainError);
    CHECK_THROWS_AS(apply_elementary({ OpKind::PowConst, -1.0 }, zero), DivisionByZero);
    CHECK(apply_elementary({ OpKind::Sqrt }, zero) == 0.0); // value is fine at the boundary
    const double wrong_arity[2] = { 1.0, 2.0 };
    CHECK_THROWS_AS(apply_elementary({ OpKind::Exp }, wrong_arity), DimensionMismatch);
}

TEST_CASE("local_partial basics")
{
    const double mul_args[2] = { 3.0, 7.0 };
    CHECK(local_partial({ OpKind::Mul }, mul_args, 0) == 7.0);
    CHECK(local_partial({ OpKind::Mul }, mul_args, 1) == 3.0);

    const double zero[1] = { 0.0 };
    CHECK(local_partial({ OpKind::Exp }, zero, 0) == 1.0);

    const double div_args[2] = { 1.0, 4.0 };
    CHECK(local_partial({ OpKind::Div }, div_args, 1) == doctest::Approx(-0.0625).epsilon(1e-12));
    CHECK(local_partial({ OpKind::Div }, div_args, 0) == 0.25);

    CHECK_THROWS_AS(local_partial({ OpKind::Exp }, zero, 1), InvalidIndex);
}

TEST_CASE("derivatives at domain boundaries fail loudly")
{
    const double zero[1] = { 0.0 };
    CHECK_THROWS_AS(local_partial({ OpKind::Sqrt }, zero, 0), DomainError);
    CHECK_THROWS_AS(local_partial({ OpKind::Log }, zero, 0), DomainError);
    CHECK_THROWS_AS(local_partial({ OpKind::PowConst, 0.5 }, zero, 0), DomainError);
    const double div_args[2] = { 1.0, 0.0 };
    CHECK_THROWS_AS(local_partial({ OpKind::Div }, div_args, 1), DivisionByZero);
}

TEST_CASE("every scalar type computes identical values over the full operation set")
{
    const adkit::tests::KitchenSink f;
    const std::vector<double> x = { 0.8, 1.6, 2.1 };
    const std::vector<double> plain = evaluate(f, x);

    std::vector<DenseDual> dense_in;
    std::vector<SparseDual> sparse_in;
    std::vector<BitDual> bit_in;
    for (std::size_t i = 0; i < 3; ++i) {
        dense_in.emplace_back(x[i], std::vector<double>(3, 0.5));
        sparse_in.emplace_back(x[i], sparse_seed(i + 1, 1.0));
        bit_in.emplace_back(x[i], BitPattern::unit(3, i + 1));
    }
    std::vector<DenseDual> dense_out(2);
    std::vector<SparseDual> sparse_out(2);
    std::vector<BitDual> bit_out(2);
    f(std::span<const DenseDual>(dense_in), std::span<DenseDual>(dense_out));
    f(std::span<const SparseDual>(sparse_in), std::span<SparseDual>(sparse_out));
    f(std::span<const BitDual>(bit_in), std::span<BitDual>(bit_out));
    const std::vector<double> traced = record_tape(1, f, x).recorded_dependents();

    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(dense_out[i].val == plain[i]);
        CHECK(sparse_out[i].val == plain[i]);
        CHECK(bit_out[i].val == plain[i]);
        CHECK(traced[i] == plain[i]);
    }
}

namespace {

// central finite difference of apply_elementary in one argument
double fd_partial(const ElementaryOp& op, std::vector<double> args, std::size_t k)
{
    const double step = 1e-6 * std::max(1.0, std::abs(args[k]));
    const double saved = args[k];
    args[k] = saved + step;
    const double plus = apply_elementary(op, args);
    args[k] = saved - step;
    const double minus = apply_elementary(op, args);
    return (plus - minus) / (2.0 * step);
}

} // namespace

TEST_CASE("local partials agree with central differences on random arguments")
{
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> positive(0.2, 5.0);
    std::uniform_real_distribution<double> any(-5.0, 5.0);
    std::uniform_real_distribution<double> exponent(-2.5, 2.5);

    for (int trial = 0; trial < 200; ++trial) {
        const double a = any(rng);
        const double p = positive(rng);
        const double q = positive(rng);

        const std::vector<ElementaryOp> unary_ops = {
            { OpKind::Neg }, { OpKind::Exp }, { OpKind::Sin }, { OpKind::Cos },
            { OpKind::AddConst, any(rng) }, { OpKind::MulConst, any(rng) },
        };
        for (const ElementaryOp& op : unary_ops) {
            const std::vector<double> args = { a * 0.4 }; // keep exp well-conditioned
            CHECK(adkit::tests::rel_close(local_partial(op, args, 0), fd_partial(op, args, 0),
                                          1e-6));
        }
        for (const ElementaryOp& op : std::vector<ElementaryOp> {
                 { OpKind::Log }, { OpKind::Sqrt }, { OpKind::PowConst, exponent(rng) } }) {
            const std::vector<double> args = { p };
            CHECK(adkit::tests::rel_close(local_partial(op, args, 0), fd_partial(op, args, 0),
                                          1e-6));
        }
        for (OpKind kind : { OpKind::Add, OpKind::Sub, OpKind::Mul, OpKind::Div }) {
            const std::vector<double> args = { any(rng), kind == OpKind::Div ? q : any(rng) };
            for (std::size_t k = 0; k < 2; ++k) {
                CHECK(adkit::tests::rel_close(local_partial({ kind }, args, k),
                                              fd_partial({ kind }, args, k), 1e-6));
            }
        }
    }
}
