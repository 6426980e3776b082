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

#ifndef ADKIT_RENDER_HPP
#define ADKIT_RENDER_HPP

#include "adkit/matrix.hpp"
#include "adkit/sparse_vector.hpp"
#include "adkit/sparsity.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace adkit {

enum class OutputFormat {
    Text,
    Csv,
    Json,
};

OutputFormat parse_output_format(std::string_view name);

/// Display form of one value in the classic listings: truncated toward zero
/// at two decimals, trailing zeros trimmed ("-1.8879" -> "-1.88",
/// 0 -> "0.").
std::string format_display_value(double v);

/// Column-aligned text layout of the listings: cells right-padded per
/// column, one leading sign slot in columns that contain negatives.
std::string render_matrix_text(const Matrix& m);

/// Full-precision CSV (17 significant digits, round-trips bit-exact).
std::string render_matrix_csv(const Matrix& m);

std::string render_matrix_json(const Matrix& m, std::string_view mode);

/// Integer-valued matrices (seeds) print without decimal points.
std::string render_seed_text(const Matrix& m);

/// Per-row "(index, value)" pair listing; an empty row is an empty line.
std::string render_sparse_text(const std::vector<SparseDerivative>& rows);
std::string render_sparse_csv(const std::vector<SparseDerivative>& rows);
std::string render_sparse_json(const std::vector<SparseDerivative>& rows, std::size_t cols,
                               std::string_view mode);

/// Star/blank display of a sparsity pattern.
std::string render_pattern_text(const SparsityPattern& pattern);
std::string render_pattern_csv(const SparsityPattern& pattern);
std::string render_pattern_json(const SparsityPattern& pattern, std::string_view mode);

} // namespace adkit

#endif // ADKIT_RENDER_HPP
