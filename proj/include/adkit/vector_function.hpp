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

#ifndef ADKIT_VECTOR_FUNCTION_HPP
#define ADKIT_VECTOR_FUNCTION_HPP

#include "adkit/errors.hpp"

#include <concepts>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace adkit {

// A vector function F: R^n -> R^m is written once against the generic
// scalar contract and re-run by every differentiation mode with its own
// scalar type.  The required shape is
//
//     std::size_t num_inputs() const;
//     std::size_t num_outputs() const;
//     template <class Scalar>
//     void operator()(std::span<const Scalar> x, std::span<Scalar> y) const;
//
// The body must be straight-line over the elementary operation set: it may
// read only its inputs and passive constants, and it must fill exactly
// num_outputs() scalars.  Control flow must not depend on input values.

template <class F, class Scalar>
concept VectorFunctionOf = requires(const F& f, std::span<const Scalar> x, std::span<Scalar> y) {
    { f.num_inputs() } -> std::convertible_to<std::size_t>;
    { f.num_outputs() } -> std::convertible_to<std::size_t>;
    f(x, y);
};

/// Wraps a generic callable (span in, span out) together with its extents.
template <class Body>
class GenericFunction {
public:
    GenericFunction(std::size_t n, std::size_t m, Body body)
        : n_(n), m_(m), body_(std::move(body))
    {
    }

    std::size_t num_inputs() const { return n_; }
    std::size_t num_outputs() const { return m_; }

    template <class Scalar>
    void operator()(std::span<const Scalar> x, std::span<Scalar> y) const
    {
        body_(x, y);
    }

private:
    std::size_t n_;
    std::size_t m_;
    Body body_;
};

template <class Body>
GenericFunction<Body> make_function(std::size_t n, std::size_t m, Body body)
{
    return GenericFunction<Body>(n, m, std::move(body));
}

/// Plain-value evaluation, y = F(x).
template <class F>
std::vector<double> evaluate(const F& f, std::span<const double> x)
{
    if (x.size() != f.num_inputs()) {
        throw DimensionMismatch("input length does not match function arity");
    }
    std::vector<double> y(f.num_outputs());
    f(x, std::span<double>(y));
    return y;
}

} // namespace adkit

#endif // ADKIT_VECTOR_FUNCTION_HPP
