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

#include "adkit/tape.hpp"

#include <algorithm>
#include <utility>

namespace adkit {

Tape::Tape(std::uint64_t tag, std::uint64_t num_slots, std::vector<TapeRecord> records,
           std::vector<std::uint64_t> independents, std::vector<std::uint64_t> dependents,
           std::vector<double> recorded_values)
    : tag_(tag),
      num_slots_(num_slots),
      records_(std::move(records)),
      independents_(std::move(independents)),
      dependents_(std::move(dependents)),
      recorded_values_(std::move(recorded_values))
{
    if (independents_.empty() || dependents_.empty()) {
        throw FormatError("tape needs at least one independent and one dependent");
    }
    if (recorded_values_.size() != num_slots_) {
        throw FormatError("tape must record one value per slot");
    }

    std::vector<char> assigned(num_slots_, 0);
    for (std::uint64_t slot : independents_) {
        if (slot >= num_slots_ || assigned[slot]) {
            throw FormatError("independent slots must be unique and in range");
        }
        assigned[slot] = 1;
    }
    for (const TapeRecord& record : records_) {
        const int num_args = arity(record.op.kind);
        for (int k = 0; k < num_args; ++k) {
            const std::uint64_t arg = record.args[static_cast<std::size_t>(k)];
            if (arg >= num_slots_ || !assigned[arg]) {
                throw FormatError("record argument references an unassigned slot");
            }
        }
        for (int k = num_args; k < 2; ++k) {
            if (record.args[static_cast<std::size_t>(k)] != 0) {
                throw FormatError("unused record argument fields must be zero");
            }
        }
        if (record.result >= num_slots_ || assigned[record.result]) {
            throw FormatError("result slots are single-assignment");
        }
        assigned[record.result] = 1;
    }
    std::vector<char> seen(num_slots_, 0);
    for (std::uint64_t slot : dependents_) {
        if (slot >= num_slots_ || !assigned[slot] || seen[slot]) {
            throw FormatError("dependent slots must be unique assigned slots");
        }
        seen[slot] = 1;
    }
}

std::vector<double> Tape::recorded_dependents() const
{
    std::vector<double> out;
    out.reserve(dependents_.size());
    for (std::uint64_t slot : dependents_) {
        out.push_back(recorded_values_[slot]);
    }
    return out;
}

// --- recording ---

namespace {

std::shared_ptr<detail::SessionState> require_open(const std::shared_ptr<detail::SessionState>& s)
{
    if (s == nullptr || !s->open) {
        throw SessionClosed("tracing scalar used outside an open session");
    }
    return s;
}

std::shared_ptr<detail::SessionState> common_state(const std::shared_ptr<detail::SessionState>& sa,
                                                   const std::shared_ptr<detail::SessionState>& sb)
{
    if (sa != nullptr && sb != nullptr && sa != sb) {
        throw ForeignScalar("tracing scalars belong to different sessions");
    }
    return sa != nullptr ? sa : sb;
}

} // namespace

TraceScalar record_binary(OpKind kind, const TraceScalar& a, const TraceScalar& b);
TraceScalar record_unary(const ElementaryOp& op, const TraceScalar& a);
TraceScalar record_with_constant(OpKind kind, const TraceScalar& a, double c);

TraceScalar record_binary(OpKind kind, const TraceScalar& a, const TraceScalar& b)
{
    auto state = require_open(common_state(a.state_, b.state_));
    const ElementaryOp op { kind };
    const double args[2] = { a.val_, b.val_ };
    const double value = apply_elementary(op, args);

    // A passive operand folds into a constant-carrying record so the tape
    // stays closed over the elementary operation set.
    std::uint64_t lhs_slot = a.slot_;
    std::uint64_t rhs_slot = b.slot_;
    if (a.passive()) {
        const std::uint64_t cslot = state->new_slot(a.val_);
        state->records.push_back({ { OpKind::Const, a.val_ }, cslot, {} });
        lhs_slot = cslot;
    }
    if (b.passive()) {
        const std::uint64_t cslot = state->new_slot(b.val_);
        state->records.push_back({ { OpKind::Const, b.val_ }, cslot, {} });
        rhs_slot = cslot;
    }
    const std::uint64_t slot = state->new_slot(value);
    state->records.push_back({ op, slot, { lhs_slot, rhs_slot } });
    return { state, slot, value };
}

TraceScalar record_unary(const ElementaryOp& op, const TraceScalar& a)
{
    const double args[1] = { a.val_ };
    if (a.passive()) {
        return { apply_elementary(op, args) };
    }
    auto state = require_open(a.state_);
    const double value = apply_elementary(op, args);
    const std::uint64_t slot = state->new_slot(value);
    state->records.push_back({ op, slot, { a.slot_, 0 } });
    return { state, slot, value };
}

TraceScalar record_with_constant(OpKind kind, const TraceScalar& a, double c)
{
    return record_unary({ kind, c }, a);
}

TraceScalar operator+(const TraceScalar& a, const TraceScalar& b)
{
    if (a.passive() && b.passive()) {
        return { a.value() + b.value() };
    }
    if (a.passive()) {
        return record_with_constant(OpKind::AddConst, b, a.value());
    }
    if (b.passive()) {
        return record_with_constant(OpKind::AddConst, a, b.value());
    }
    return record_binary(OpKind::Add, a, b);
}

TraceScalar operator-(const TraceScalar& a, const TraceScalar& b)
{
    if (a.passive() && b.passive()) {
        return { a.value() - b.value() };
    }
    if (b.passive()) {
        // x - c replays as x + (-c), which is the identical rounding
        return record_with_constant(OpKind::AddConst, a, -b.value());
    }
    // passive - active: the constant materializes as a Const slot
    return record_binary(OpKind::Sub, a, b);
}

TraceScalar operator*(const TraceScalar& a, const TraceScalar& b)
{
    if (a.passive() && b.passive()) {
        return { a.value() * b.value() };
    }
    if (a.passive()) {
        return record_with_constant(OpKind::MulConst, b, a.value());
    }
    if (b.passive()) {
        return record_with_constant(OpKind::MulConst, a, b.value());
    }
    return record_binary(OpKind::Mul, a, b);
}

TraceScalar operator/(const TraceScalar& a, const TraceScalar& b)
{
    if (a.passive() && b.passive()) {
        detail::check_divisor(b.value());
        return { a.value() / b.value() };
    }
    // no DivConst in the op set; a passive operand becomes a Const slot so
    // the replay reproduces the exact quotient
    return record_binary(OpKind::Div, a, b);
}

TraceScalar operator-(const TraceScalar& a)
{
    return record_unary({ OpKind::Neg }, a);
}

TraceScalar operator+(const TraceScalar& a, double c)
{
    return record_with_constant(OpKind::AddConst, a, c);
}
TraceScalar operator+(double c, const TraceScalar& a)
{
    return record_with_constant(OpKind::AddConst, a, c);
}
TraceScalar operator-(const TraceScalar& a, double c)
{
    return record_with_constant(OpKind::AddConst, a, -c);
}
TraceScalar operator-(double c, const TraceScalar& a)
{
    return TraceScalar(c) - a;
}
TraceScalar operator*(const TraceScalar& a, double c)
{
    return record_with_constant(OpKind::MulConst, a, c);
}
TraceScalar operator*(double c, const TraceScalar& a)
{
    return record_with_constant(OpKind::MulConst, a, c);
}
TraceScalar operator/(const TraceScalar& a, double c)
{
    return a / TraceScalar(c);
}
TraceScalar operator/(double c, const TraceScalar& a)
{
    return TraceScalar(c) / a;
}

TraceScalar exp(const TraceScalar& a) { return record_unary({ OpKind::Exp }, a); }
TraceScalar log(const TraceScalar& a) { return record_unary({ OpKind::Log }, a); }
TraceScalar sin(const TraceScalar& a) { return record_unary({ OpKind::Sin }, a); }
TraceScalar cos(const TraceScalar& a) { return record_unary({ OpKind::Cos }, a); }
TraceScalar sqrt(const TraceScalar& a) { return record_unary({ OpKind::Sqrt }, a); }
TraceScalar pow(const TraceScalar& a, double c)
{
    return record_unary({ OpKind::PowConst, c }, a);
}

// --- session ---

TraceSession::TraceSession(TapeRegistry* registry, std::shared_ptr<detail::SessionState> state)
    : registry_(registry), state_(std::move(state))
{
}

TraceSession::TraceSession(TraceSession&& other) noexcept
    : registry_(std::exchange(other.registry_, nullptr)), state_(std::move(other.state_))
{
}

TraceSession& TraceSession::operator=(TraceSession&& other) noexcept
{
    if (this != &other) {
        if (state_ != nullptr && state_->open) {
            state_->open = false;
            registry_->abandon(state_->tag);
        }
        registry_ = std::exchange(other.registry_, nullptr);
        state_ = std::move(other.state_);
    }
    return *this;
}

TraceSession::~TraceSession()
{
    if (state_ != nullptr && state_->open) {
        state_->open = false;
        registry_->abandon(state_->tag);
    }
}

std::uint64_t TraceSession::tag() const
{
    if (state_ == nullptr) {
        throw SessionClosed("session has been moved from");
    }
    return state_->tag;
}

TraceScalar TraceSession::mark_independent(double value)
{
    auto state = require_open(state_);
    const std::uint64_t slot = state->new_slot(value);
    state->independents.push_back(slot);
    return { state, slot, value };
}

double TraceSession::mark_dependent(const TraceScalar& y)
{
    auto state = require_open(state_);
    std::uint64_t slot = 0;
    if (y.passive()) {
        // constant output: materialize it on the tape
        slot = state->new_slot(y.value());
        state->records.push_back({ { OpKind::Const, y.value() }, slot, {} });
    } else {
        if (y.state_ != state) {
            throw ForeignScalar("dependent scalar belongs to another session");
        }
        slot = y.slot_;
    }
    if (std::find(state->dependents.begin(), state->dependents.end(), slot)
        != state->dependents.end()) {
        throw Error("slot already marked dependent");
    }
    state->dependents.push_back(slot);
    return y.value();
}

const Tape& TraceSession::end_trace()
{
    auto state = require_open(state_);
    if (state->independents.empty() || state->dependents.empty()) {
        throw EmptyTrace("active section marked no independents or no dependents");
    }
    state->open = false;
    const std::uint64_t num_slots = state->slot_values.size();
    Tape tape(state->tag, num_slots, std::move(state->records), std::move(state->independents),
              std::move(state->dependents), std::move(state->slot_values));
    return registry_->finish(state->tag, std::move(tape));
}

// --- registry ---

TraceSession TapeRegistry::begin_trace(std::uint64_t tag)
{
    if (open_tags_.count(tag) != 0) {
        throw SessionAlreadyOpen("a session with this tag is already recording");
    }
    open_tags_.insert(tag);
    auto state = std::make_shared<detail::SessionState>();
    state->tag = tag;
    state->open = true;
    return TraceSession(this, std::move(state));
}

const Tape& TapeRegistry::tape(std::uint64_t tag) const
{
    const auto it = tapes_.find(tag);
    if (it == tapes_.end()) {
        throw InvalidIndex("no tape registered under this tag");
    }
    return it->second;
}

const Tape& TapeRegistry::store(Tape tape)
{
    const std::uint64_t tag = tape.tag();
    const auto it = tapes_.find(tag);
    if (it != tapes_.end()) {
        it->second = std::move(tape);
        return it->second;
    }
    return tapes_.emplace(tag, std::move(tape)).first->second;
}

const Tape& TapeRegistry::finish(std::uint64_t tag, Tape tape)
{
    open_tags_.erase(tag);
    return store(std::move(tape));
}

void TapeRegistry::abandon(std::uint64_t tag)
{
    open_tags_.erase(tag);
}

} // namespace adkit
