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

#ifndef ADKIT_TAPE_HPP
#define ADKIT_TAPE_HPP

#include "adkit/errors.hpp"
#include "adkit/scalar_ops.hpp"
#include "adkit/vector_function.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <vector>

namespace adkit {

/// One recorded elementary operation.  Unused argument slots are zero.
struct TapeRecord {
    ElementaryOp op;
    std::uint64_t result = 0;
    std::array<std::uint64_t, 2> args {};

    friend bool operator==(const TapeRecord&, const TapeRecord&) = default;
};

/// Immutable straight-line trace of one execution of an active section.
/// Slots are single-assignment: every slot is written once, either as an
/// independent or as the result of exactly one record, and records only
/// read slots assigned earlier.  The recorded control flow IS the function;
/// replays at new arguments assume input-independent control flow.
class Tape {
public:
    Tape(std::uint64_t tag, std::uint64_t num_slots, std::vector<TapeRecord> records,
         std::vector<std::uint64_t> independents, std::vector<std::uint64_t> dependents,
         std::vector<double> recorded_values);

    std::uint64_t tag() const { return tag_; }
    std::size_t num_slots() const { return num_slots_; }
    std::size_t num_independents() const { return independents_.size(); }
    std::size_t num_dependents() const { return dependents_.size(); }

    const std::vector<TapeRecord>& records() const { return records_; }
    const std::vector<std::uint64_t>& independents() const { return independents_; }
    const std::vector<std::uint64_t>& dependents() const { return dependents_; }

    /// All slot values at the taping point.
    const std::vector<double>& recorded_values() const { return recorded_values_; }

    /// Dependent values at the taping point.
    std::vector<double> recorded_dependents() const;

    friend bool operator==(const Tape&, const Tape&) = default;

private:
    std::uint64_t tag_;
    std::uint64_t num_slots_;
    std::vector<TapeRecord> records_;
    std::vector<std::uint64_t> independents_;
    std::vector<std::uint64_t> dependents_;
    std::vector<double> recorded_values_;
};

namespace detail {

struct SessionState {
    std::uint64_t tag = 0;
    bool open = false;
    std::vector<TapeRecord> records;
    std::vector<double> slot_values;
    std::vector<std::uint64_t> independents;
    std::vector<std::uint64_t> dependents;

    std::uint64_t new_slot(double value)
    {
        slot_values.push_back(value);
        return slot_values.size() - 1;
    }
};

} // namespace detail

/// Operator-overloading scalar bound to an open trace session.  A scalar
/// without a session is a passive constant; mixing scalars of different
/// sessions is an error.
class TraceScalar {
public:
    TraceScalar() = default;
    TraceScalar(double value) : val_(value) {} // passive constant

    double value() const { return val_; }
    bool passive() const { return state_ == nullptr; }

private:
    friend class TraceSession;
    friend TraceScalar record_binary(OpKind, const TraceScalar&, const TraceScalar&);
    friend TraceScalar record_unary(const ElementaryOp&, const TraceScalar&);
    friend TraceScalar record_with_constant(OpKind, const TraceScalar&, double);

    TraceScalar(std::shared_ptr<detail::SessionState> state, std::uint64_t slot, double value)
        : state_(std::move(state)), slot_(slot), val_(value)
    {
    }

    std::shared_ptr<detail::SessionState> state_;
    std::uint64_t slot_ = 0;
    double val_ = 0.0;
};

class TapeRegistry;

/// Open active section under recording.  Move-only; destroying an
/// unfinished session abandons the trace.
class TraceSession {
public:
    TraceSession(TraceSession&& other) noexcept;
    TraceSession& operator=(TraceSession&& other) noexcept;
    TraceSession(const TraceSession&) = delete;
    TraceSession& operator=(const TraceSession&) = delete;
    ~TraceSession();

    std::uint64_t tag() const;

    /// Allocates a fresh slot holding the taping-point value and appends it
    /// to the independent list, in call order.
    TraceScalar mark_independent(double value);

    /// Appends the scalar's slot to the dependent list and returns its
    /// recorded value.  Passive scalars are materialized as constants.
    double mark_dependent(const TraceScalar& y);

    /// Finalizes the tape, registers it under its tag (replacing any prior
    /// tape with the same tag) and closes the session.
    const Tape& end_trace();

private:
    friend class TapeRegistry;
    TraceSession(TapeRegistry* registry, std::shared_ptr<detail::SessionState> state);

    TapeRegistry* registry_ = nullptr;
    std::shared_ptr<detail::SessionState> state_;
};

/// Keeps finalized tapes by tag so several function representations can be
/// held at the same time.  At most one session may be open per tag.
class TapeRegistry {
public:
    TraceSession begin_trace(std::uint64_t tag);

    bool contains(std::uint64_t tag) const { return tapes_.count(tag) != 0; }

    const Tape& tape(std::uint64_t tag) const;

    /// Registers an externally built tape (for example a loaded one),
    /// replacing any prior tape with the same tag.
    const Tape& store(Tape tape);

private:
    friend class TraceSession;
    const Tape& finish(std::uint64_t tag, Tape tape);
    void abandon(std::uint64_t tag);

    std::map<std::uint64_t, Tape> tapes_;
    std::set<std::uint64_t> open_tags_;
};

// arithmetic over tracing scalars

TraceScalar operator+(const TraceScalar& a, const TraceScalar& b);
TraceScalar operator-(const TraceScalar& a, const TraceScalar& b);
TraceScalar operator*(const TraceScalar& a, const TraceScalar& b);
TraceScalar operator/(const TraceScalar& a, const TraceScalar& b);
TraceScalar operator-(const TraceScalar& a);

TraceScalar operator+(const TraceScalar& a, double c);
TraceScalar operator+(double c, const TraceScalar& a);
TraceScalar operator-(const TraceScalar& a, double c);
TraceScalar operator-(double c, const TraceScalar& a);
TraceScalar operator*(const TraceScalar& a, double c);
TraceScalar operator*(double c, const TraceScalar& a);
TraceScalar operator/(const TraceScalar& a, double c);
TraceScalar operator/(double c, const TraceScalar& a);

inline TraceScalar& operator+=(TraceScalar& a, const TraceScalar& b) { return a = a + b; }
inline TraceScalar& operator-=(TraceScalar& a, const TraceScalar& b) { return a = a - b; }
inline TraceScalar& operator*=(TraceScalar& a, const TraceScalar& b) { return a = a * b; }
inline TraceScalar& operator/=(TraceScalar& a, const TraceScalar& b) { return a = a / b; }

TraceScalar exp(const TraceScalar& a);
TraceScalar log(const TraceScalar& a);
TraceScalar sin(const TraceScalar& a);
TraceScalar cos(const TraceScalar& a);
TraceScalar sqrt(const TraceScalar& a);
TraceScalar pow(const TraceScalar& a, double c);

/// Records one tape of f at x through a throwaway registry.
template <class F>
    requires VectorFunctionOf<F, TraceScalar>
Tape record_tape(std::uint64_t tag, const F& f, std::span<const double> x)
{
    if (x.size() != f.num_inputs()) {
        throw DimensionMismatch("input length does not match function arity");
    }
    TapeRegistry registry;
    TraceSession session = registry.begin_trace(tag);
    std::vector<TraceScalar> in;
    in.reserve(x.size());
    for (double v : x) {
        in.push_back(session.mark_independent(v));
    }
    std::vector<TraceScalar> out(f.num_outputs());
    f(std::span<const TraceScalar>(in), std::span<TraceScalar>(out));
    for (const TraceScalar& y : out) {
        session.mark_dependent(y);
    }
    return session.end_trace();
}

} // namespace adkit

#endif // ADKIT_TAPE_HPP
