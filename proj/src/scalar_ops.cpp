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

#include <cmath>

namespace adkit {

int arity(OpKind kind) noexcept
{
    switch (kind) {
    case OpKind::Const:
        return 0;
    case OpKind::Add:
    case OpKind::Sub:
    case OpKind::Mul:
    case OpKind::Div:
        return 2;
    default:
        return 1;
    }
}

const char* op_name(OpKind kind) noexcept
{
    switch (kind) {
    case OpKind::Const:
        return "const";
    case OpKind::Add:
        return "add";
    case OpKind::Sub:
        return "sub";
    case OpKind::Mul:
        return "mul";
    case OpKind::Div:
        return "div";
    case OpKind::Neg:
        return "neg";
    case OpKind::Exp:
        return "exp";
    case OpKind::Log:
        return "log";
    case OpKind::Sin:
        return "sin";
    case OpKind::Cos:
        return "cos";
    case OpKind::Sqrt:
        return "sqrt";
    case OpKind::PowConst:
        return "pow_const";
    case OpKind::AddConst:
        return "add_const";
    case OpKind::MulConst:
        return "mul_const";
    }
    return "unknown";
}

namespace {

void check_arity(const ElementaryOp& op, std::span<const double> args)
{
    if (args.size() != static_cast<std::size_t>(arity(op.kind))) {
        throw DimensionMismatch("argument count does not match operation arity");
    }
}

} // namespace

double apply_elementary(const ElementaryOp& op, std::span<const double> args)
{
    check_arity(op, args);
    switch (op.kind) {
    case OpKind::Const:
        return op.constant;
    case OpKind::Add:
        return args[0] + args[1];
    case OpKind::Sub:
        return args[0] - args[1];
    case OpKind::Mul:
        return args[0] * args[1];
    case OpKind::Div:
        detail::check_divisor(args[1]);
        return args[0] / args[1];
    case OpKind::Neg:
        return -args[0];
    case OpKind::Exp:
        return std::exp(args[0]);
    case OpKind::Log:
        detail::check_log_arg(args[0]);
        return std::log(args[0]);
    case OpKind::Sin:
        return std::sin(args[0]);
    case OpKind::Cos:
        return std::cos(args[0]);
    case OpKind::Sqrt:
        detail::check_sqrt_arg(args[0]);
        return std::sqrt(args[0]);
    case OpKind::PowConst:
        return detail::pow_value(args[0], op.constant);
    case OpKind::AddConst:
        return args[0] + op.constant;
    case OpKind::MulConst:
        return args[0] * op.constant;
    }
    throw Error("unknown operation kind");
}

double local_partial(const ElementaryOp& op, std::span<const double> args, std::size_t arg_index)
{
    check_arity(op, args);
    if (arg_index >= static_cast<std::size_t>(arity(op.kind))) {
        throw InvalidIndex("argument index out of range for operation arity");
    }
    switch (op.kind) {
    case OpKind::Const:
        break; // unreachable, arity 0 rejects every index
    case OpKind::Add:
        return 1.0;
    case OpKind::Sub:
        return arg_index == 0 ? 1.0 : -1.0;
    case OpKind::Mul:
        return arg_index == 0 ? args[1] : args[0];
    case OpKind::Div:
        detail::check_divisor(args[1]);
        return arg_index == 0 ? 1.0 / args[1] : -args[0] / (args[1] * args[1]);
    case OpKind::Neg:
        return -1.0;
    case OpKind::Exp:
        return std::exp(args[0]);
    case OpKind::Log:
        detail::check_log_arg(args[0]);
        return 1.0 / args[0];
    case OpKind::Sin:
        return std::cos(args[0]);
    case OpKind::Cos:
        return -std::sin(args[0]);
    case OpKind::Sqrt:
        detail::check_sqrt_deriv_arg(args[0]);
        return 0.5 / std::sqrt(args[0]);
    case OpKind::PowConst:
        return detail::pow_partial(args[0], op.constant);
    case OpKind::AddConst:
        return 1.0;
    case OpKind::MulConst:
        return op.constant;
    }
    throw Error("unknown operation kind");
}

} // namespace adkit
