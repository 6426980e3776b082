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

#include "adkit/sparsity.hpp"

#include <sstream>

namespace adkit {

void validate(const SparsityPattern& pattern)
{
    for (const auto& row : pattern.rows) {
        std::size_t previous = 0;
        for (std::size_t index : row) {
            if (index == 0 || index > pattern.cols) {
                throw InvalidIndex("pattern column index out of range");
            }
            if (index <= previous) {
                throw InvalidIndex("pattern row indices must be strictly increasing");
            }
            previous = index;
        }
    }
}

std::string to_text(const SparsityPattern& pattern)
{
    std::ostringstream out;
    out << pattern.num_rows() << ' ' << pattern.cols << '\n';
    for (std::size_t i = 0; i < pattern.num_rows(); ++i) {
        out << (i + 1) << ' ' << pattern.rows[i].size();
        for (std::size_t index : pattern.rows[i]) {
            out << ' ' << index;
        }
        out << '\n';
    }
    return out.str();
}

SparsityPattern sparsity_from_text(std::string_view text)
{
    std::istringstream in { std::string(text) };
    std::size_t m = 0;
    std::size_t n = 0;
    if (!(in >> m >> n)) {
        throw FormatError("pattern header must be 'm n'");
    }
    SparsityPattern pattern;
    pattern.cols = n;
    pattern.rows.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t row_index = 0;
        std::size_t count = 0;
        if (!(in >> row_index >> count)) {
            throw FormatError("truncated pattern row");
        }
        if (row_index != i + 1) {
            throw FormatError("pattern rows must appear in order");
        }
        pattern.rows[i].resize(count);
        for (std::size_t k = 0; k < count; ++k) {
            if (!(in >> pattern.rows[i][k])) {
                throw FormatError("truncated pattern row");
            }
        }
    }
    std::string trailing;
    if (in >> trailing) {
        throw FormatError("trailing data after pattern rows");
    }
    validate(pattern);
    return pattern;
}

} // namespace adkit
