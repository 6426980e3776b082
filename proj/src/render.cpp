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

#include "adkit/render.hpp"

#include "adkit/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace adkit {

OutputFormat parse_output_format(std::string_view name)
{
    if (name == "text") {
        return OutputFormat::Text;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw Error("unknown output format: " + std::string(name));
}

std::string format_display_value(double v)
{
    if (!std::isfinite(v) || std::abs(v) >= 1e15) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%g", v);
        return buffer;
    }
    // Truncate toward zero at two decimals; the tiny nudge absorbs values
    // that sit one rounding error below a hundredth boundary.
    double scaled = v * 100.0;
    scaled += std::copysign(1e-7, scaled);
    double truncated = std::trunc(scaled) / 100.0;
    if (truncated == 0.0) {
        truncated = 0.0; // normalize -0
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.2f", truncated);
    std::string text(buffer);
    while (text.back() == '0') {
        text.pop_back();
    }
    return text;
}

namespace {

std::string full_precision(double v)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

void strip_trailing(std::string& line)
{
    while (!line.empty() && line.back() == ' ') {
        line.pop_back();
    }
}

} // namespace

std::string render_matrix_text(const Matrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<std::string>> cells(rows, std::vector<std::string>(cols));
    std::vector<std::size_t> widths(cols, 0);
    for (std::size_t j = 0; j < cols; ++j) {
        bool has_negative = false;
        for (std::size_t i = 0; i < rows; ++i) {
            if (m(i, j) < 0.0) {
                has_negative = true;
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            std::string cell = format_display_value(m(i, j));
            if (has_negative && cell.front() != '-') {
                cell.insert(cell.begin(), ' ');
            }
            widths[j] = std::max(widths[j], cell.size());
            cells[i][j] = std::move(cell);
        }
    }
    std::string out;
    for (std::size_t i = 0; i < rows; ++i) {
        std::string line;
        for (std::size_t j = 0; j < cols; ++j) {
            if (j > 0) {
                line += ' ';
            }
            cells[i][j].resize(widths[j], ' ');
            line += cells[i][j];
        }
        strip_trailing(line);
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_matrix_csv(const Matrix& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out += ',';
            }
            out += full_precision(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string render_matrix_json(const Matrix& m, std::string_view mode)
{
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        entries.push_back(std::move(row));
    }
    const nlohmann::json doc = {
        { "mode", std::string(mode) },
        { "rows", m.rows() },
        { "cols", m.cols() },
        { "entries", std::move(entries) },
    };
    return doc.dump(2) + "\n";
}

std::string render_seed_text(const Matrix& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out += ' ';
            }
            char buffer[32];
            std::snprintf(buffer, sizeof(buffer), "%g", m(i, j));
            out += buffer;
        }
        out += '\n';
    }
    return out;
}

std::string render_sparse_text(const std::vector<SparseDerivative>& rows)
{
    std::string out;
    for (const SparseDerivative& row : rows) {
        std::string line;
        for (const SparseEntry& e : row.entries()) {
            if (!line.empty()) {
                line += ' ';
            }
            std::string value = format_display_value(e.value);
            if (value.front() != '-') {
                value.insert(value.begin(), ' ');
            }
            line += '(' + std::to_string(e.index) + ", " + value + ')';
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_sparse_csv(const std::vector<SparseDerivative>& rows)
{
    std::string out = "row,index,value\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const SparseEntry& e : rows[i].entries()) {
            out += std::to_string(i + 1) + ',' + std::to_string(e.index) + ','
                + full_precision(e.value) + '\n';
        }
    }
    return out;
}

std::string render_sparse_json(const std::vector<SparseDerivative>& rows, std::size_t cols,
                               std::string_view mode)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const SparseDerivative& row : rows) {
        nlohmann::json json_row = nlohmann::json::array();
        for (const SparseEntry& e : row.entries()) {
            json_row.push_back({ { "index", e.index }, { "value", e.value } });
        }
        entries.push_back(std::move(json_row));
    }
    const nlohmann::json doc = {
        { "mode", std::string(mode) },
        { "rows", rows.size() },
        { "cols", cols },
        { "entries", std::move(entries) },
    };
    return doc.dump(2) + "\n";
}

std::string render_pattern_text(const SparsityPattern& pattern)
{
    std::string out;
    for (const auto& row : pattern.rows) {
        std::string line(2 * pattern.cols, ' ');
        for (std::size_t index : row) {
            line[2 * (index - 1)] = '*';
        }
        strip_trailing(line);
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_pattern_csv(const SparsityPattern& pattern)
{
    std::string out = "row,col\n";
    for (std::size_t i = 0; i < pattern.num_rows(); ++i) {
        for (std::size_t index : pattern.rows[i]) {
            out += std::to_string(i + 1) + ',' + std::to_string(index) + '\n';
        }
    }
    return out;
}

std::string render_pattern_json(const SparsityPattern& pattern, std::string_view mode)
{
    const nlohmann::json doc = {
        { "mode", std::string(mode) },
        { "rows", pattern.num_rows() },
        { "cols", pattern.cols },
        { "entries", pattern.rows },
    };
    return doc.dump(2) + "\n";
}

} // namespace adkit
