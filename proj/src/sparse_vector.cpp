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

#include "adkit/sparse_vector.hpp"

namespace adkit {

SparseDerivative::SparseDerivative(std::vector<SparseEntry> entries)
    : entries_(std::move(entries))
{
    std::size_t previous = 0;
    for (const SparseEntry& e : entries_) {
        if (e.index == 0 || e.index <= previous) {
            throw InvalidIndex("sparse entries must have strictly increasing 1-based indices");
        }
        if (e.value == 0.0) {
            throw Error("sparse entries must not store explicit zeros");
        }
        previous = e.index;
    }
}

SparseDerivative sparse_seed(std::size_t index, double value)
{
    if (index == 0) {
        throw InvalidIndex("sparse indices are 1-based");
    }
    if (value == 0.0) {
        return {};
    }
    return SparseDerivative({ { index, value } });
}

namespace {

void append_scaled(std::vector<SparseEntry>& out, double a,
                   const std::vector<SparseEntry>& u, std::size_t from)
{
    for (std::size_t i = from; i < u.size(); ++i) {
        const double v = a * u[i].value;
        if (v != 0.0) {
            out.push_back({ u[i].index, v });
        }
    }
}

} // namespace

SparseDerivative sparse_linear_combine(double a, const SparseDerivative& u, double b,
                                       const SparseDerivative& w)
{
    std::vector<SparseEntry> out;
    if (a == 0.0 && b == 0.0) {
        return {};
    }
    if (a == 0.0) {
        out.reserve(w.size());
        append_scaled(out, b, w.entries(), 0);
        return SparseDerivative(std::move(out), SparseDerivative::unchecked_tag {});
    }
    if (b == 0.0) {
        out.reserve(u.size());
        append_scaled(out, a, u.entries(), 0);
        return SparseDerivative(std::move(out), SparseDerivative::unchecked_tag {});
    }

    const auto& ue = u.entries();
    const auto& we = w.entries();
    out.reserve(ue.size() + we.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ue.size() && j < we.size()) {
        if (ue[i].index < we[j].index) {
            const double v = a * ue[i].value;
            if (v != 0.0) {
                out.push_back({ ue[i].index, v });
            }
            ++i;
        } else if (we[j].index < ue[i].index) {
            const double v = b * we[j].value;
            if (v != 0.0) {
                out.push_back({ we[j].index, v });
            }
            ++j;
        } else {
            const double v = a * ue[i].value + b * we[j].value;
            if (v != 0.0) {
                out.push_back({ ue[i].index, v });
            }
            ++i;
            ++j;
        }
    }
    append_scaled(out, a, ue, i);
    append_scaled(out, b, we, j);
    return SparseDerivative(std::move(out), SparseDerivative::unchecked_tag {});
}

ExtractedRow sparse_extract(const SparseDerivative& d)
{
    ExtractedRow row;
    row.indices.reserve(d.size());
    row.values.reserve(d.size());
    for (const SparseEntry& e : d.entries()) {
        row.indices.push_back(e.index);
        row.values.push_back(e.value);
    }
    row.count = d.size();
    return row;
}

std::vector<double> to_dense(const SparseDerivative& d, std::size_t n)
{
    std::vector<double> out(n, 0.0);
    for (const SparseEntry& e : d.entries()) {
        if (e.index > n) {
            throw InvalidIndex("sparse entry index beyond dense length");
        }
        out[e.index - 1] = e.value;
    }
    return out;
}

} // namespace adkit
