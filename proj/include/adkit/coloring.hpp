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

#ifndef ADKIT_COLORING_HPP
#define ADKIT_COLORING_HPP

#include "adkit/errors.hpp"
#include "adkit/forward_dense.hpp"
#include "adkit/matrix.hpp"
#include "adkit/sparse_vector.hpp"
#include "adkit/sparsity.hpp"
#include "adkit/vector_function.hpp"

#include <span>
#include <vector>

namespace adkit {

// Curtis-Powell-Reid seeding: structurally orthogonal Jacobian columns
// (no shared nonzero row) may share one seed column.  Orthogonality is a
// coloring of the column incidence graph.

/// Vertices are Jacobian columns; an edge joins two columns that both have
/// support in some row.  Adjacency lists are sorted, 1-based, loop-free.
struct ColumnIncidenceGraph {
    std::size_t num_columns = 0;
    std::vector<std::vector<std::size_t>> adjacency;

    std::size_t max_degree() const;
    bool adjacent(std::size_t j, std::size_t k) const;
};

/// Proper vertex coloring: color[j-1] in 1..num_colors, adjacent columns
/// never share a color, every color used at least once.
struct Coloring {
    std::vector<std::size_t> color;
    std::size_t num_colors = 0;

    std::size_t num_columns() const { return color.size(); }

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

ColumnIncidenceGraph build_incidence_graph(const SparsityPattern& pattern);

/// First-fit greedy in natural column order: each column takes the smallest
/// color unused by its already-colored neighbors.  Deterministic; minimality
/// is not attempted (the exact problem is NP-complete).
Coloring greedy_color(const ColumnIncidenceGraph& graph);

/// n-by-nu seed whose row j is the Cartesian basis vector of color(j);
/// same-colored columns share a seed column.
SeedMatrix build_cpr_seed(const Coloring& coloring);

/// Compressed Jacobian B = F'(x) * S together with the coloring and pattern
/// needed to substitute entries back.
struct CompressedJacobian {
    Matrix b;
    Coloring coloring;
    SparsityPattern pattern;
};

/// Runs dense forward mode with the CPR seed built from a greedy coloring
/// of the pattern's column incidence graph.  The pattern must cover the
/// true support of F'(x).
template <class F>
    requires VectorFunctionOf<F, DenseDual>
CompressedJacobian compressed_jacobian(const F& f, std::span<const double> x,
                                       const SparsityPattern& pattern)
{
    if (pattern.cols != f.num_inputs() || pattern.num_rows() != f.num_outputs()) {
        throw DimensionMismatch("pattern extents do not match the function");
    }
    validate(pattern);
    CompressedJacobian result;
    result.pattern = pattern;
    result.coloring = greedy_color(build_incidence_graph(pattern));
    const SeedMatrix seed = build_cpr_seed(result.coloring);
    result.b = forward_jacobian_product(f, x, seed).jacobian;
    return result;
}

/// Substitution: each pattern entry (i, j) reads B[i, color(j)].  Valid
/// because same-colored columns never share a row; violations raise
/// AmbiguousEntry.  Exact zeros are dropped from the returned rows.
std::vector<SparseDerivative> reconstruct(const CompressedJacobian& compressed);

} // namespace adkit

#endif // ADKIT_COLORING_HPP
