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

#ifndef ADKIT_SCALAR_OPS_HPP
#define ADKIT_SCALAR_OPS_HPP

#include "adkit/errors.hpp"

#include <cmath>
#include <cstdint>
#include <span>

namespace adkit {

/// The closed set of elementary operations every differentiation mode
/// understands.  Arity 0: Const.  Arity 1: Neg, Exp, Log, Sin, Cos, Sqrt,
/// PowConst, AddConst, MulConst.  Arity 2: Add, Sub, Mul, Div.
enum class OpKind : std::uint8_t {
    Const,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Exp,
    Log,
    Sin,
    Cos,
    Sqrt,
    PowConst,
    AddConst,
    MulConst,
};

inline constexpr std::uint8_t num_op_kinds = 14;

/// One elementary operation.  The constant payload is meaningful for
/// Const, PowConst, AddConst and MulConst only.
struct ElementaryOp {
    OpKind kind;
    double constant = 0.0;

    friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

int arity(OpKind kind) noexcept;
const char* op_name(OpKind kind) noexcept;

namespace detail {

// Shared domain guards.  Every scalar type routes through these so that the
// whole library fails in the same way at the same points.

inline void check_divisor(double d)
{
    if (d == 0.0) {
        throw DivisionByZero("division by zero");
    }
}

inline void check_log_arg(double x)
{
    if (!(x > 0.0)) {
        throw DomainError("log of non-positive argument");
    }
}

inline void check_sqrt_arg(double x)
{
    if (!(x >= 0.0)) {
        throw DomainError("sqrt of negative argument");
    }
}

// sqrt'(0) is infinite; fail loudly instead of producing inf.
inline void check_sqrt_deriv_arg(double x)
{
    if (!(x > 0.0)) {
        throw DomainError("sqrt derivative at non-positive argument");
    }
}

inline bool is_integer(double c)
{
    return std::nearbyint(c) == c && std::isfinite(c);
}

inline double pow_value(double x, double c)
{
    if (x < 0.0 && !is_integer(c)) {
        throw DomainError("pow of negative base with non-integer exponent");
    }
    if (x == 0.0 && c < 0.0) {
        throw DivisionByZero("pow of zero base with negative exponent");
    }
    return std::pow(x, c);
}

inline double pow_partial(double x, double c)
{
    if (c == 0.0) {
        return 0.0;
    }
    if (x < 0.0 && !is_integer(c - 1.0)) {
        throw DomainError("pow derivative of negative base with non-integer exponent");
    }
    if (x == 0.0 && c < 1.0) {
        throw DomainError("pow derivative unbounded at zero base");
    }
    return c * std::pow(x, c - 1.0);
}

} // namespace detail

/// Evaluates one elementary operation on plain reals under the platform's
/// double-precision rounding.
double apply_elementary(const ElementaryOp& op, std::span<const double> args);

/// Partial derivative of the operation result with respect to
/// args[arg_index], evaluated at args.  These are the entries of the
/// extended Jacobian.
double local_partial(const ElementaryOp& op, std::span<const double> args, std::size_t arg_index);

} // namespace adkit

#endif // ADKIT_SCALAR_OPS_HPP
