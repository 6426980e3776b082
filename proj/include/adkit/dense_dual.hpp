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

#ifndef ADKIT_DENSE_DUAL_HPP
#define ADKIT_DENSE_DUAL_HPP

#include "adkit/errors.hpp"
#include "adkit/scalar_ops.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace adkit {

/// Forward-mode scalar carrying a dense derivative vector of length p.
/// Every active dual inside one evaluation shares the same p; an empty
/// derivative vector marks a passive value (derivative identically zero),
/// which is how plain constants enter mixed expressions.
struct DenseDual {
    double val = 0.0;
    std::vector<double> der;

    DenseDual() = default;
    DenseDual(double value) : val(value) {} // passive constant
    DenseDual(double value, std::vector<double> grad) : val(value), der(std::move(grad)) {}

    bool passive() const { return der.empty(); }
};

namespace detail {

// a*u + b*w over derivative vectors, where an empty vector is the zero
// vector of whatever length the other side has.
inline std::vector<double> dense_combine(double a, const std::vector<double>& u, double b,
                                         const std::vector<double>& w)
{
    if (u.empty() && w.empty()) {
        return {};
    }
    if (u.empty()) {
        std::vector<double> out(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            out[i] = b * w[i];
        }
        return out;
    }
    if (w.empty()) {
        std::vector<double> out(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            out[i] = a * u[i];
        }
        return out;
    }
    if (u.size() != w.size()) {
        throw DimensionMismatch("dense duals with different direction counts in one expression");
    }
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = a * u[i] + b * w[i];
    }
    return out;
}

inline std::vector<double> dense_scale(double a, const std::vector<double>& u)
{
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = a * u[i];
    }
    return out;
}

} // namespace detail

inline DenseDual operator+(const DenseDual& a, const DenseDual& b)
{
    return { a.val + b.val, detail::dense_combine(1.0, a.der, 1.0, b.der) };
}

inline DenseDual operator-(const DenseDual& a, const DenseDual& b)
{
    return { a.val - b.val, detail::dense_combine(1.0, a.der, -1.0, b.der) };
}

inline DenseDual operator*(const DenseDual& a, const DenseDual& b)
{
    return { a.val * b.val, detail::dense_combine(b.val, a.der, a.val, b.der) };
}

inline DenseDual operator/(const DenseDual& a, const DenseDual& b)
{
    detail::check_divisor(b.val);
    const double inv = 1.0 / b.val;
    return { a.val / b.val, detail::dense_combine(inv, a.der, -a.val * inv * inv, b.der) };
}

inline DenseDual operator-(const DenseDual& a)
{
    return { -a.val, detail::dense_scale(-1.0, a.der) };
}

inline DenseDual operator+(const DenseDual& a, double c)
{
    return { a.val + c, a.der };
}
inline DenseDual operator+(double c, const DenseDual& a)
{
    return { c + a.val, a.der };
}
inline DenseDual operator-(const DenseDual& a, double c)
{
    return { a.val - c, a.der };
}
inline DenseDual operator-(double c, const DenseDual& a)
{
    return { c - a.val, detail::dense_scale(-1.0, a.der) };
}
inline DenseDual operator*(const DenseDual& a, double c)
{
    return { a.val * c, detail::dense_scale(c, a.der) };
}
inline DenseDual operator*(double c, const DenseDual& a)
{
    return { c * a.val, detail::dense_scale(c, a.der) };
}
inline DenseDual operator/(const DenseDual& a, double c)
{
    detail::check_divisor(c);
    return { a.val / c, detail::dense_scale(1.0 / c, a.der) };
}
inline DenseDual operator/(double c, const DenseDual& a)
{
    detail::check_divisor(a.val);
    return { c / a.val, detail::dense_scale(-c / (a.val * a.val), a.der) };
}

inline DenseDual& operator+=(DenseDual& a, const DenseDual& b) { return a = a + b; }
inline DenseDual& operator-=(DenseDual& a, const DenseDual& b) { return a = a - b; }
inline DenseDual& operator*=(DenseDual& a, const DenseDual& b) { return a = a * b; }
inline DenseDual& operator/=(DenseDual& a, const DenseDual& b) { return a = a / b; }

inline DenseDual exp(const DenseDual& a)
{
    const double v = std::exp(a.val);
    return { v, detail::dense_scale(v, a.der) };
}

inline DenseDual log(const DenseDual& a)
{
    detail::check_log_arg(a.val);
    return { std::log(a.val), detail::dense_scale(1.0 / a.val, a.der) };
}

inline DenseDual sin(const DenseDual& a)
{
    return { std::sin(a.val), detail::dense_scale(std::cos(a.val), a.der) };
}

inline DenseDual cos(const DenseDual& a)
{
    return { std::cos(a.val), detail::dense_scale(-std::sin(a.val), a.der) };
}

inline DenseDual sqrt(const DenseDual& a)
{
    if (a.passive()) {
        detail::check_sqrt_arg(a.val);
        return { std::sqrt(a.val) };
    }
    detail::check_sqrt_deriv_arg(a.val);
    const double v = std::sqrt(a.val);
    return { v, detail::dense_scale(0.5 / v, a.der) };
}

inline DenseDual pow(const DenseDual& a, double c)
{
    const double v = detail::pow_value(a.val, c);
    if (a.passive()) {
        return { v };
    }
    return { v, detail::dense_scale(detail::pow_partial(a.val, c), a.der) };
}

} // namespace adkit

#endif // ADKIT_DENSE_DUAL_HPP
