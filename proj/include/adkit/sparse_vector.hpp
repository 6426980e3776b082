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

#ifndef ADKIT_SPARSE_VECTOR_HPP
#define ADKIT_SPARSE_VECTOR_HPP

#include "adkit/errors.hpp"

#include <cstddef>
#include <vector>

namespace adkit {

/// One nonzero of a sparse derivative: 1-based column index plus value.
struct SparseEntry {
    std::size_t index;
    double value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse derivative vector: entries strictly increasing by index, values
/// never exactly zero.  The empty vector is the derivative of a passive
/// value.
class SparseDerivative {
public:
    SparseDerivative() = default;

    /// Takes entries that already satisfy the invariants (checked).
    explicit SparseDerivative(std::vector<SparseEntry> entries);

    const std::vector<SparseEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const SparseDerivative&, const SparseDerivative&) = default;

private:
    friend SparseDerivative sparse_linear_combine(double, const SparseDerivative&, double,
                                                  const SparseDerivative&);
    struct unchecked_tag {};
    SparseDerivative(std::vector<SparseEntry> entries, unchecked_tag)
        : entries_(std::move(entries))
    {
    }

    std::vector<SparseEntry> entries_;
};

/// Single-pair derivative [(index, value)]; a zero value seeds the empty
/// derivative.  Index 0 is invalid (indices are 1-based).
SparseDerivative sparse_seed(std::size_t index, double value);

/// a*u + b*w by sorted two-pointer merge.  Exact zeros are dropped; a zero
/// coefficient skips the corresponding traversal entirely.
SparseDerivative sparse_linear_combine(double a, const SparseDerivative& u, double b,
                                       const SparseDerivative& w);

/// Parallel-array view of a sparse derivative, the extraction interface of
/// the sparse forward mode.
struct ExtractedRow {
    std::vector<std::size_t> indices;
    std::vector<double> values;
    std::size_t count = 0;
};

ExtractedRow sparse_extract(const SparseDerivative& d);

/// Expands into a dense vector of length n (indices beyond n are an error).
std::vector<double> to_dense(const SparseDerivative& d, std::size_t n);

} // namespace adkit

#endif // ADKIT_SPARSE_VECTOR_HPP
