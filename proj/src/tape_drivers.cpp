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

#include "adkit/tape_drivers.hpp"

#include "adkit/forward_dense.hpp"
#include "adkit/scalar_ops.hpp"

namespace adkit {

TapeEvaluator::TapeEvaluator(const Tape& tape) : tape_(&tape) {}

void TapeEvaluator::value_sweep(std::span<const double> x)
{
    const auto& independents = tape_->independents();
    if (x.size() != independents.size()) {
        throw DimensionMismatch("point length does not match tape independents");
    }
    slot_values_.assign(tape_->num_slots(), 0.0);
    for (std::size_t i = 0; i < independents.size(); ++i) {
        slot_values_[independents[i]] = x[i];
    }
    records_visited_ = 0;
    for (const TapeRecord& record : tape_->records()) {
        const int num_args = arity(record.op.kind);
        double args[2] = { 0.0, 0.0 };
        for (int k = 0; k < num_args; ++k) {
            args[k] = slot_values_[record.args[static_cast<std::size_t>(k)]];
        }
        slot_values_[record.result] = apply_elementary(
            record.op, std::span<const double>(args, static_cast<std::size_t>(num_args)));
        ++records_visited_;
    }
}

std::vector<double> TapeEvaluator::zos_forward(std::span<const double> x, bool keep)
{
    value_sweep(x);
    prepared_ = keep;
    std::vector<double> y;
    y.reserve(tape_->num_dependents());
    for (std::uint64_t slot : tape_->dependents()) {
        y.push_back(slot_values_[slot]);
    }
    return y;
}

TapeEvaluator::FovResult TapeEvaluator::fov_forward(std::span<const double> x,
                                                    const Matrix& directions)
{
    const std::size_t n = tape_->num_independents();
    const std::size_t m = tape_->num_dependents();
    if (directions.rows() != n) {
        throw DimensionMismatch("direction matrix row count does not match tape independents");
    }
    const std::size_t p = directions.cols();
    if (p == 0) {
        throw InvalidDimension("direction matrix needs at least one column");
    }
    if (p > max_seed_columns) {
        throw InvalidDimension("direction matrix exceeds the direction cap");
    }

    value_sweep(x);
    prepared_ = true;

    std::vector<double> grad(tape_->num_slots() * p, 0.0);
    const auto& independents = tape_->independents();
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = directions.row(i);
        std::copy(row.begin(), row.end(), grad.begin() + static_cast<std::ptrdiff_t>(independents[i] * p));
    }

    records_visited_ = 0;
    for (const TapeRecord& record : tape_->records()) {
        const int num_args = arity(record.op.kind);
        double args[2] = { 0.0, 0.0 };
        for (int k = 0; k < num_args; ++k) {
            args[k] = slot_values_[record.args[static_cast<std::size_t>(k)]];
        }
        const std::span<const double> arg_span(args, static_cast<std::size_t>(num_args));
        double* out = grad.data() + record.result * p;
        std::fill(out, out + p, 0.0);
        for (int k = 0; k < num_args; ++k) {
            const double partial = local_partial(record.op, arg_span, static_cast<std::size_t>(k));
            const double* in = grad.data() + record.args[static_cast<std::size_t>(k)] * p;
            for (std::size_t d = 0; d < p; ++d) {
                out[d] += partial * in[d];
            }
        }
        ++records_visited_;
    }

    FovResult result;
    result.value.reserve(m);
    result.jacobian_product = Matrix(m, p);
    const auto& dependents = tape_->dependents();
    for (std::size_t i = 0; i < m; ++i) {
        result.value.push_back(slot_values_[dependents[i]]);
        const double* row = grad.data() + dependents[i] * p;
        for (std::size_t d = 0; d < p; ++d) {
            result.jacobian_product(i, d) = row[d];
        }
    }
    return result;
}

Matrix TapeEvaluator::fov_reverse(const Matrix& weights)
{
    if (!prepared_) {
        throw ReverseNotPrepared("reverse sweep needs a value-storing forward sweep first");
    }
    const std::size_t n = tape_->num_independents();
    const std::size_t m = tape_->num_dependents();
    if (weights.cols() != m) {
        throw DimensionMismatch("weight matrix column count does not match tape dependents");
    }
    const std::size_t q = weights.rows();
    if (q == 0) {
        throw InvalidDimension("weight matrix needs at least one row");
    }

    const std::size_t num_slots = tape_->num_slots();
    std::vector<double> adjoint(q * num_slots, 0.0);
    const auto& dependents = tape_->dependents();
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t r = 0; r < q; ++r) {
            adjoint[r * num_slots + dependents[j]] += weights(r, j);
        }
    }

    records_visited_ = 0;
    const auto& records = tape_->records();
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        const TapeRecord& record = *it;
        const int num_args = arity(record.op.kind);
        double args[2] = { 0.0, 0.0 };
        for (int k = 0; k < num_args; ++k) {
            args[k] = slot_values_[record.args[static_cast<std::size_t>(k)]];
        }
        const std::span<const double> arg_span(args, static_cast<std::size_t>(num_args));
        for (int k = 0; k < num_args; ++k) {
            const double partial = local_partial(record.op, arg_span, static_cast<std::size_t>(k));
            const std::uint64_t arg = record.args[static_cast<std::size_t>(k)];
            for (std::size_t r = 0; r < q; ++r) {
                adjoint[r * num_slots + arg] += partial * adjoint[r * num_slots + record.result];
            }
        }
        ++records_visited_;
    }

    Matrix z(q, n);
    const auto& independents = tape_->independents();
    for (std::size_t r = 0; r < q; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            z(r, i) = adjoint[r * num_slots + independents[i]];
        }
    }
    return z;
}

Matrix jacobian(const Tape& tape, std::span<const double> x)
{
    TapeEvaluator evaluator(tape);
    const std::size_t n = tape.num_independents();
    const std::size_t m = tape.num_dependents();
    if (n <= m) {
        return evaluator.fov_forward(x, Matrix::identity(n)).jacobian_product;
    }
    evaluator.zos_forward(x, true);
    return evaluator.fov_reverse(Matrix::identity(m));
}

std::vector<double> gradient(const Tape& tape, std::span<const double> x)
{
    if (tape.num_dependents() != 1) {
        throw NotScalarValued("gradient needs a scalar-valued tape");
    }
    Matrix weights(1, 1);
    weights(0, 0) = 1.0;
    TapeEvaluator evaluator(tape);
    evaluator.zos_forward(x, true);
    const Matrix z = evaluator.fov_reverse(weights);
    return { z.row(0).begin(), z.row(0).end() };
}

std::vector<double> jac_vec(const Tape& tape, std::span<const double> x,
                            std::span<const double> v)
{
    const std::size_t n = tape.num_independents();
    if (v.size() != n) {
        throw DimensionMismatch("direction length does not match tape independents");
    }
    Matrix direction(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        direction(i, 0) = v[i];
    }
    TapeEvaluator evaluator(tape);
    const auto result = evaluator.fov_forward(x, direction);
    std::vector<double> out(tape.num_dependents());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = result.jacobian_product(i, 0);
    }
    return out;
}

std::vector<double> vec_jac(const Tape& tape, std::span<const double> x,
                            std::span<const double> u)
{
    const std::size_t m = tape.num_dependents();
    if (u.size() != m) {
        throw DimensionMismatch("weight length does not match tape dependents");
    }
    Matrix weights(1, m);
    for (std::size_t j = 0; j < m; ++j) {
        weights(0, j) = u[j];
    }
    TapeEvaluator evaluator(tape);
    evaluator.zos_forward(x, true);
    const Matrix z = evaluator.fov_reverse(weights);
    return { z.row(0).begin(), z.row(0).end() };
}

} // namespace adkit
