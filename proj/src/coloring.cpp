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

#include "adkit/coloring.hpp"

#include <algorithm>

namespace adkit {

std::size_t ColumnIncidenceGraph::max_degree() const
{
    std::size_t degree = 0;
    for (const auto& neighbors : adjacency) {
        degree = std::max(degree, neighbors.size());
    }
    return degree;
}

bool ColumnIncidenceGraph::adjacent(std::size_t j, std::size_t k) const
{
    if (j == 0 || j > num_columns || k == 0 || k > num_columns) {
        throw InvalidIndex("column index out of range");
    }
    const auto& neighbors = adjacency[j - 1];
    return std::binary_search(neighbors.begin(), neighbors.end(), k);
}

ColumnIncidenceGraph build_incidence_graph(const SparsityPattern& pattern)
{
    validate(pattern);
    ColumnIncidenceGraph graph;
    graph.num_columns = pattern.cols;
    graph.adjacency.resize(pattern.cols);
    for (const auto& row : pattern.rows) {
        for (std::size_t a = 0; a < row.size(); ++a) {
            for (std::size_t b = a + 1; b < row.size(); ++b) {
                graph.adjacency[row[a] - 1].push_back(row[b]);
                graph.adjacency[row[b] - 1].push_back(row[a]);
            }
        }
    }
    for (auto& neighbors : graph.adjacency) {
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
    }
    return graph;
}

Coloring greedy_color(const ColumnIncidenceGraph& graph)
{
    Coloring coloring;
    coloring.color.assign(graph.num_columns, 0);
    std::vector<char> taken;
    for (std::size_t j = 0; j < graph.num_columns; ++j) {
        taken.assign(graph.num_columns + 2, 0);
        for (std::size_t neighbor : graph.adjacency[j]) {
            const std::size_t c = coloring.color[neighbor - 1];
            if (c != 0) {
                taken[c] = 1;
            }
        }
        std::size_t c = 1;
        while (taken[c]) {
            ++c;
        }
        coloring.color[j] = c;
        coloring.num_colors = std::max(coloring.num_colors, c);
    }
    return coloring;
}

SeedMatrix build_cpr_seed(const Coloring& coloring)
{
    const std::size_t n = coloring.num_columns();
    if (n == 0) {
        throw InvalidDimension("coloring has no columns");
    }
    std::vector<char> used(coloring.num_colors + 1, 0);
    for (std::size_t c : coloring.color) {
        if (c == 0 || c > coloring.num_colors) {
            throw ImproperColoring("color index outside 1..num_colors");
        }
        used[c] = 1;
    }
    for (std::size_t c = 1; c <= coloring.num_colors; ++c) {
        if (!used[c]) {
            throw ImproperColoring("unused color index");
        }
    }
    SeedMatrix seed(n, coloring.num_colors);
    for (std::size_t j = 0; j < n; ++j) {
        seed(j, coloring.color[j] - 1) = 1.0;
    }
    return seed;
}

std::vector<SparseDerivative> reconstruct(const CompressedJacobian& compressed)
{
    const SparsityPattern& pattern = compressed.pattern;
    const Coloring& coloring = compressed.coloring;
    validate(pattern);
    if (pattern.cols != coloring.num_columns()) {
        throw DimensionMismatch("pattern and coloring column counts differ");
    }
    if (compressed.b.rows() != pattern.num_rows() || compressed.b.cols() != coloring.num_colors) {
        throw DimensionMismatch("compressed matrix extents do not match coloring");
    }

    std::vector<SparseDerivative> rows;
    rows.reserve(pattern.num_rows());
    std::vector<std::size_t> color_owner(coloring.num_colors + 1, 0);
    for (std::size_t i = 0; i < pattern.num_rows(); ++i) {
        std::fill(color_owner.begin(), color_owner.end(), 0);
        std::vector<SparseEntry> entries;
        entries.reserve(pattern.rows[i].size());
        for (std::size_t j : pattern.rows[i]) {
            const std::size_t c = coloring.color[j - 1];
            if (color_owner[c] != 0) {
                throw AmbiguousEntry("two same-colored columns share a row");
            }
            color_owner[c] = j;
            const double value = compressed.b(i, c - 1);
            if (value != 0.0) {
                entries.push_back({ j, value });
            }
        }
        rows.emplace_back(std::move(entries));
    }
    return rows;
}

} // namespace adkit
