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

#ifndef ADKIT_TAPE_DRIVERS_HPP
#define ADKIT_TAPE_DRIVERS_HPP

#include "adkit/matrix.hpp"
#include "adkit/tape.hpp"

#include <span>
#include <vector>

namespace adkit {

/// Per-call replay context over an immutable tape.  The evaluator owns the
/// slot-value workspace, so concurrent evaluators on one tape are
/// independent; the prepared-reverse state lives here, not on the tape.
class TapeEvaluator {
public:
    explicit TapeEvaluator(const Tape& tape);

    /// Zero-order replay at x; returns the dependent values.  With keep set
    /// the slot values stay available for a subsequent reverse sweep.
    std::vector<double> zos_forward(std::span<const double> x, bool keep = false);

    struct FovResult {
        std::vector<double> value;             // F(x)
        Matrix jacobian_product;               // F'(x) * directions, m by p
    };

    /// First-order vector forward sweep, Y = F'(x) * X for X in R^{n x p}.
    /// Also stores values, so a reverse sweep may follow.
    FovResult fov_forward(std::span<const double> x, const Matrix& directions);

    /// First-order vector reverse sweep, Z = U * F'(x) for U in R^{q x m}.
    /// Requires a value-storing forward sweep since the last point change.
    Matrix fov_reverse(const Matrix& weights);

    /// Records visited by the most recent sweep (replay-cost instrumentation).
    std::size_t records_visited() const { return records_visited_; }

private:
    void value_sweep(std::span<const double> x);

    const Tape* tape_;
    std::vector<double> slot_values_;
    bool prepared_ = false;
    std::size_t records_visited_ = 0;
};

// Easy drivers.  Each call owns its own evaluator, so they are safe to run
// concurrently on a shared tape.

/// Full Jacobian at x.  Chooses a forward sweep with the identity seed when
/// n <= m, otherwise one value sweep plus a reverse sweep with identity
/// weights.
Matrix jacobian(const Tape& tape, std::span<const double> x);

/// Gradient of a scalar-valued tape (m = 1) via one reverse sweep.
std::vector<double> gradient(const Tape& tape, std::span<const double> x);

/// Jacobian times vector, one forward direction.
std::vector<double> jac_vec(const Tape& tape, std::span<const double> x,
                            std::span<const double> v);

/// Vector times Jacobian, one reverse weight row.
std::vector<double> vec_jac(const Tape& tape, std::span<const double> x,
                            std::span<const double> u);

} // namespace adkit

#endif // ADKIT_TAPE_DRIVERS_HPP
