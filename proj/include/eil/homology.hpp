#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eil/graph.hpp"

namespace eil {

/// Coefficient field for homology ranks.
enum class FieldChoice : int {
    gf2 = 2,       ///< bit-row elimination
    rationals = 0  ///< exact integer elimination with bignum fallback
};

inline int characteristic(FieldChoice f) { return static_cast<int>(f); }
/// Accepts "2", "0", "q", "Q"; throws std::invalid_argument otherwise.
FieldChoice parse_field(const std::string& text);

using FaceMask = std::uint64_t;

/// Simplicial complex given by its minimal nonfaces on `vertex_count`
/// vertices: W is a face iff no nonface is contained in W.
class ComplexView {
public:
    ComplexView(std::size_t vertex_count, std::vector<FaceMask> nonfaces);

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<FaceMask>& nonfaces() const { return nonfaces_; }
    bool is_face(FaceMask w) const;

private:
    std::size_t vertex_count_;
    std::vector<FaceMask> nonfaces_;
};

/// Reduced homology ranks of an induced subcomplex. `ranks[k]` is the rank
/// in dimension k - 1, so `ranks[0]` is the (-1)-dimensional group, which
/// is nonzero only for the complex {∅}.
struct ReducedHomology {
    std::vector<std::size_t> ranks;

    std::size_t in_dimension(int d) const {
        const auto k = static_cast<std::size_t>(d + 1);
        return d >= -1 && k < ranks.size() ? ranks[k] : 0;
    }
    bool vanishes() const;
};

ReducedHomology reduced_homology_dims(const ComplexView& complex, FaceMask w, FieldChoice field);

/// Rank of a sparse integer matrix given as columns of (row, entry) pairs.
/// Over GF(2) entries are taken mod 2. Exposed for testing.
std::size_t matrix_rank(const std::vector<std::vector<std::pair<std::uint32_t, int>>>& columns, FieldChoice field);

}  // namespace eil
