#pragma once

// Internal: reduced homology of induced subcomplexes shared by the public
// homology entry point and the Betti/depth sweeps.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "eil/homology.hpp"

namespace eil::detail {

using SparseColumn = std::vector<std::pair<std::uint32_t, int>>;

struct RankResult {
    std::size_t rank = 0;
    std::vector<std::uint32_t> pivot_rows;
};

/// Column reduction of a boundary matrix. Columns listed in `cleared` are
/// known to reduce to zero and are skipped.
RankResult reduce_gf2(const std::vector<SparseColumn>& columns, std::size_t rows,
                      const std::vector<bool>& cleared);
RankResult reduce_rational(const std::vector<SparseColumn>& columns, std::size_t rows,
                           const std::vector<bool>& cleared);

/// Per-thread buffers reused across masks.
struct HomologyScratch {
    std::vector<std::int32_t> index;
    std::vector<std::vector<std::uint32_t>> faces;  // by cardinality, compressed masks
};

/// Reduced homology of the subcomplex induced on `w`, in dimensions
/// -1..top_dim (top_dim < 0 means all). `is_face` takes a full mask.
template <class IsFace>
ReducedHomology induced_homology(FaceMask w, const IsFace& is_face, FieldChoice field, int top_dim,
                                 HomologyScratch& scratch) {
    const int m = std::popcount(w);
    ReducedHomology out;
    if (!is_face(FaceMask{0})) return out;  // void complex
    const int last_dim = top_dim < 0 ? m - 1 : std::min(top_dim, m - 1);
    const int max_card = last_dim + 2;  // faces needed for ranks up to dimension last_dim + 1

    scratch.index.assign(std::size_t{1} << m, -1);
    scratch.faces.assign(static_cast<std::size_t>(max_card) + 1, {});
    // submasks of w in increasing order line up with compressed counters
    FaceMask full = 0;
    std::uint32_t compressed = 0;
    do {
        const int card = std::popcount(full);
        if (card <= max_card && is_face(full)) {
            auto& bucket = scratch.faces[static_cast<std::size_t>(card)];
            scratch.index[compressed] = static_cast<std::int32_t>(bucket.size());
            bucket.push_back(compressed);
        }
        full = (full - w) & w;
        ++compressed;
    } while (full != 0);

    // rank_of[c] = rank of the boundary map from cardinality c to c - 1
    std::vector<std::size_t> rank_of(static_cast<std::size_t>(max_card) + 2, 0);
    std::vector<std::uint32_t> pivots_above;
    for (int c = max_card; c >= 1; --c) {
        const auto& cols = scratch.faces[static_cast<std::size_t>(c)];
        const auto& rows = scratch.faces[static_cast<std::size_t>(c - 1)];
        std::vector<bool> cleared(cols.size(), false);
        for (auto p : pivots_above) cleared[p] = true;
        std::vector<SparseColumn> matrix;
        matrix.reserve(cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            SparseColumn col;
            if (!cleared[k]) {
                const std::uint32_t face = cols[k];
                int sign = 1;
                for (std::uint32_t rest = face; rest; rest &= rest - 1) {
                    const std::uint32_t low = rest & (~rest + 1);
                    col.emplace_back(static_cast<std::uint32_t>(scratch.index[face ^ low]), sign);
                    sign = -sign;
                }
                std::sort(col.begin(), col.end());
            }
            matrix.push_back(std::move(col));
        }
        RankResult r = field == FieldChoice::gf2 ? reduce_gf2(matrix, rows.size(), cleared)
                                                 : reduce_rational(matrix, rows.size(), cleared);
        rank_of[static_cast<std::size_t>(c)] = r.rank;
        pivots_above = std::move(r.pivot_rows);
    }

    out.ranks.assign(static_cast<std::size_t>(last_dim) + 2, 0);
    for (int d = -1; d <= last_dim; ++d) {
        const auto c = static_cast<std::size_t>(d + 1);
        out.ranks[c] = scratch.faces[c].size() - rank_of[c] - rank_of[c + 1];
    }
    return out;
}

}  // namespace eil::detail
