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

#ifndef ADKIT_SPARSITY_HPP
#define ADKIT_SPARSITY_HPP

#include "adkit/errors.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace adkit {

/// Structural nonzero pattern of an m-by-n Jacobian: one strictly
/// increasing list of 1-based column indices per row.
struct SparsityPattern {
    std::size_t cols = 0;
    std::vector<std::vector<std::size_t>> rows;

    std::size_t num_rows() const { return rows.size(); }

    friend bool operator==(const SparsityPattern&, const SparsityPattern&) = default;
};

/// Throws unless all rows are strictly increasing with indices in 1..cols.
void validate(const SparsityPattern& pattern);

/// Text exchange format: first line "m n", then one line per row with the
/// 1-based row index, the entry count, and the sorted column indices,
/// space-separated.
std::string to_text(const SparsityPattern& pattern);
SparsityPattern sparsity_from_text(std::string_view text);

} // namespace adkit

#endif // ADKIT_SPARSITY_HPP
