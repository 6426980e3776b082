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

#ifndef ADKIT_SPARSE_DUAL_HPP
#define ADKIT_SPARSE_DUAL_HPP

#include "adkit/scalar_ops.hpp"
#include "adkit/sparse_vector.hpp"

#include <cmath>
#include <utility>

namespace adkit {

/// Forward-mode scalar whose derivative is an (index, value) pair vector.
/// Passive values carry the empty derivative, so the index arithmetic never
/// touches structurally zero directions.
struct SparseDual {
    double val = 0.0;
    SparseDerivative der;

    SparseDual() = default;
    SparseDual(double value) : val(value) {} // passive constant
    SparseDual(double value, SparseDerivative grad) : val(value), der(std::move(grad)) {}

    bool passive() const { return der.empty(); }
};

inline SparseDual operator+(const SparseDual& a, const SparseDual& b)
{
    return { a.val + b.val, sparse_linear_combine(1.0, a.der, 1.0, b.der) };
}

inline SparseDual operator-(const SparseDual& a, const SparseDual& b)
{
    return { a.val - b.val, sparse_linear_combine(1.0, a.der, -1.0, b.der) };
}

inline SparseDual operator*(const SparseDual& a, const SparseDual& b)
{
    return { a.val * b.val, sparse_linear_combine(b.val, a.der, a.val, b.der) };
}

inline SparseDual operator/(const SparseDual& a, const SparseDual& b)
{
    detail::check_divisor(b.val);
    const double inv = 1.0 / b.val;
    return { a.val / b.val, sparse_linear_combine(inv, a.der, -a.val * inv * inv, b.der) };
}

inline SparseDual operator-(const SparseDual& a)
{
    return { -a.val, sparse_linear_combine(-1.0, a.der, 0.0, {}) };
}

inline SparseDual operator+(const SparseDual& a, double c) { return { a.val + c, a.der }; }
inline SparseDual operator+(double c, const SparseDual& a) { return { c + a.val, a.der }; }
inline SparseDual operator-(const SparseDual& a, double c) { return { a.val - c, a.der }; }
inline SparseDual operator-(double c, const SparseDual& a)
{
    return { c - a.val, sparse_linear_combine(-1.0, a.der, 0.0, {}) };
}
inline SparseDual operator*(const SparseDual& a, double c)
{
    return { a.val * c, sparse_linear_combine(c, a.der, 0.0, {}) };
}
inline SparseDual operator*(double c, const SparseDual& a)
{
    return { c * a.val, sparse_linear_combine(c, a.der, 0.0, {}) };
}
inline SparseDual operator/(const SparseDual& a, double c)
{
    detail::check_divisor(c);
    return { a.val / c, sparse_linear_combine(1.0 / c, a.der, 0.0, {}) };
}
inline SparseDual operator/(double c, const SparseDual& a)
{
    detail::check_divisor(a.val);
    return { c / a.val, sparse_linear_combine(-c / (a.val * a.val), a.der, 0.0, {}) };
}

inline SparseDual& operator+=(SparseDual& a, const SparseDual& b) { return a = a + b; }
inline SparseDual& operator-=(SparseDual& a, const SparseDual& b) { return a = a - b; }
inline SparseDual& operator*=(SparseDual& a, const SparseDual& b) { return a = a * b; }
inline SparseDual& operator/=(SparseDual& a, const SparseDual& b) { return a = a / b; }

inline SparseDual exp(const SparseDual& a)
{
    const double v = std::exp(a.val);
    return { v, sparse_linear_combine(v, a.der, 0.0, {}) };
}

inline SparseDual log(const SparseDual& a)
{
    detail::check_log_arg(a.val);
    return { std::log(a.val), sparse_linear_combine(1.0 / a.val, a.der, 0.0, {}) };
}

inline SparseDual sin(const SparseDual& a)
{
    return { std::sin(a.val), sparse_linear_combine(std::cos(a.val), a.der, 0.0, {}) };
}

inline SparseDual cos(const SparseDual& a)
{
    return { std::cos(a.val), sparse_linear_combine(-std::sin(a.val), a.der, 0.0, {}) };
}

inline SparseDual sqrt(const SparseDual& a)
{
    if (a.passive()) {
        detail::check_sqrt_arg(a.val);
        return { std::sqrt(a.val) };
    }
    detail::check_sqrt_deriv_arg(a.val);
    const double v = std::sqrt(a.val);
    return { v, sparse_linear_combine(0.5 / v, a.der, 0.0, {}) };
}

inline SparseDual pow(const SparseDual& a, double c)
{
    const double v = detail::pow_value(a.val, c);
    if (a.passive()) {
        return { v };
    }
    return { v, sparse_linear_combine(detail::pow_partial(a.val, c), a.der, 0.0, {}) };
}

} // namespace adkit

#endif // ADKIT_SPARSE_DUAL_HPP
