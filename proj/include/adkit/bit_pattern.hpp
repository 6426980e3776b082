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

#ifndef ADKIT_BIT_PATTERN_HPP
#define ADKIT_BIT_PATTERN_HPP

#include "adkit/errors.hpp"
#include "adkit/scalar_ops.hpp"

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace adkit {

/// Fixed-capacity bit set over independent indices 1..n.  Bit j set means
/// the value structurally depends on independent j.  The capacity is fixed
/// when the evaluation context is created; the default-constructed pattern
/// is the passive "depends on nothing" value compatible with any capacity.
class BitPattern {
public:
    BitPattern() = default;

    explicit BitPattern(std::size_t capacity)
        : capacity_(capacity), words_((capacity + 63) / 64, 0)
    {
    }

    static BitPattern unit(std::size_t capacity, std::size_t index)
    {
        BitPattern p(capacity);
        p.set(index);
        return p;
    }

    std::size_t capacity() const { return capacity_; }
    bool passive() const { return words_.empty(); }

    void set(std::size_t index)
    {
        if (index == 0 || index > capacity_) {
            throw InvalidIndex("bit index outside pattern capacity");
        }
        words_[(index - 1) / 64] |= std::uint64_t { 1 } << ((index - 1) % 64);
    }

    bool test(std::size_t index) const
    {
        if (index == 0 || index > capacity_) {
            throw InvalidIndex("bit index outside pattern capacity");
        }
        if (words_.empty()) {
            return false;
        }
        return (words_[(index - 1) / 64] >> ((index - 1) % 64)) & 1u;
    }

    /// Union; a passive side contributes nothing.  Two active patterns must
    /// come from the same context (equal capacity).
    BitPattern united(const BitPattern& other) const
    {
        if (passive()) {
            return other;
        }
        if (other.passive()) {
            return *this;
        }
        if (capacity_ != other.capacity_) {
            throw DimensionMismatch("bit patterns from different contexts");
        }
        BitPattern out(*this);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            out.words_[i] |= other.words_[i];
        }
        return out;
    }

    /// Sorted 1-based indices of the set bits.
    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = __builtin_ctzll(bits);
                out.push_back(w * 64 + static_cast<std::size_t>(bit) + 1);
                bits &= bits - 1;
            }
        }
        return out;
    }

    friend bool operator==(const BitPattern&, const BitPattern&) = default;

private:
    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Scalar for sparsity detection: the value behaves like a plain double,
/// the payload is the union of the dependency sets of all inputs touched.
/// Unary intrinsics copy the payload, binary operations take the union.
struct BitDual {
    double val = 0.0;
    BitPattern dep;

    BitDual() = default;
    BitDual(double value) : val(value) {} // passive constant
    BitDual(double value, BitPattern pattern) : val(value), dep(std::move(pattern)) {}
};

inline BitDual operator+(const BitDual& a, const BitDual& b)
{
    return { a.val + b.val, a.dep.united(b.dep) };
}
inline BitDual operator-(const BitDual& a, const BitDual& b)
{
    return { a.val - b.val, a.dep.united(b.dep) };
}
inline BitDual operator*(const BitDual& a, const BitDual& b)
{
    return { a.val * b.val, a.dep.united(b.dep) };
}
inline BitDual operator/(const BitDual& a, const BitDual& b)
{
    detail::check_divisor(b.val);
    return { a.val / b.val, a.dep.united(b.dep) };
}
inline BitDual operator-(const BitDual& a) { return { -a.val, a.dep }; }

inline BitDual operator+(const BitDual& a, double c) { return { a.val + c, a.dep }; }
inline BitDual operator+(double c, const BitDual& a) { return { c + a.val, a.dep }; }
inline BitDual operator-(const BitDual& a, double c) { return { a.val - c, a.dep }; }
inline BitDual operator-(double c, const BitDual& a) { return { c - a.val, a.dep }; }
inline BitDual operator*(const BitDual& a, double c) { return { a.val * c, a.dep }; }
inline BitDual operator*(double c, const BitDual& a) { return { c * a.val, a.dep }; }
inline BitDual operator/(const BitDual& a, double c)
{
    detail::check_divisor(c);
    return { a.val / c, a.dep };
}
inline BitDual operator/(double c, const BitDual& a)
{
    detail::check_divisor(a.val);
    return { c / a.val, a.dep };
}

inline BitDual& operator+=(BitDual& a, const BitDual& b) { return a = a + b; }
inline BitDual& operator-=(BitDual& a, const BitDual& b) { return a = a - b; }
inline BitDual& operator*=(BitDual& a, const BitDual& b) { return a = a * b; }
inline BitDual& operator/=(BitDual& a, const BitDual& b) { return a = a / b; }

inline BitDual exp(const BitDual& a) { return { std::exp(a.val), a.dep }; }
inline BitDual log(const BitDual& a)
{
    detail::check_log_arg(a.val);
    return { std::log(a.val), a.dep };
}
inline BitDual sin(const BitDual& a) { return { std::sin(a.val), a.dep }; }
inline BitDual cos(const BitDual& a) { return { std::cos(a.val), a.dep }; }
inline BitDual sqrt(const BitDual& a)
{
    detail::check_sqrt_arg(a.val);
    return { std::sqrt(a.val), a.dep };
}
inline BitDual pow(const BitDual& a, double c)
{
    return { detail::pow_value(a.val, c), a.dep };
}

} // namespace adkit

#endif // ADKIT_BIT_PATTERN_HPP
