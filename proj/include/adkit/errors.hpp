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

#ifndef ADKIT_ERRORS_HPP
#define ADKIT_ERRORS_HPP

#include <stdexcept>

namespace adkit {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Intrinsic evaluated outside its domain (log of non-positive, sqrt of
/// negative, derivative at a domain boundary).
class DomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Incompatible vector/matrix extents between caller and callee.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A size that must be positive was zero (or exceeds a configured cap).
class InvalidDimension : public Error {
public:
    using Error::Error;
};

/// A 1-based index outside its valid range.
class InvalidIndex : public Error {
public:
    using Error::Error;
};

// --- tape recording / replay ---

class SessionAlreadyOpen : public Error {
public:
    using Error::Error;
};

class SessionClosed : public Error {
public:
    using Error::Error;
};

/// A tracing scalar was used with a session other than the one that
/// created it.
class ForeignScalar : public Error {
public:
    using Error::Error;
};

class EmptyTrace : public Error {
public:
    using Error::Error;
};

/// Reverse sweep requested without a value-storing forward sweep.
class ReverseNotPrepared : public Error {
public:
    using Error::Error;
};

class NotScalarValued : public Error {
public:
    using Error::Error;
};

// --- persistence ---

class FormatError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// --- compression ---

class ImproperColoring : public Error {
public:
    using Error::Error;
};

/// Two same-colored columns have support in the same row, so a compressed
/// entry cannot be attributed to a single column.
class AmbiguousEntry : public Error {
public:
    using Error::Error;
};

} // namespace adkit

#endif // ADKIT_ERRORS_HPP
