#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eil {

/// Bit i set means vertex i belongs to the set.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

/// Vertices 0..k-1.
inline constexpr VertexSet lower_bits(int k) { return k >= 64 ? ~VertexSet{0} : bit(k) - 1; }

/// Ascending vertex indices of a set.
std::vector<int> members(VertexSet s);

struct Edge {
    int u;
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over at most 64 labelled vertices.
///
/// Labels double as the names of the polynomial ring variables, so vertex i
/// is always the variable labels()[i]. Graphs are immutable once built.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on x1..xn.
    explicit Graph(int n);

    /// Throws std::invalid_argument on loops, duplicate labels or
    /// out-of-range endpoints. Repeated edges are merged.
    Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    std::optional<int> index_of(const std::string& label) const;

    VertexSet all() const;
    VertexSet neighbors(int v) const { return adjacency_.at(v); }
    VertexSet closed_neighbors(int v) const { return adjacency_.at(v) | bit(v); }
    bool adjacent(int u, int v) const { return (adjacency_.at(u) & bit(v)) != 0; }
    int degree(int v) const;

    /// Edges with u < v, sorted.
    std::vector<Edge> edges() const;
    int edge_count() const;

    /// Union of open neighbourhoods.
    VertexSet neighbors(VertexSet s) const;

    std::string describe(VertexSet s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> adjacency_;
};

/// G \ U: drops the vertices of U and every edge meeting U. Labels survive.
Graph delete_vertices(const Graph& g, VertexSet removed);

/// Shortest-path length, or nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);

struct StarPackingWitness {
    VertexSet centers = 0;
    int size = 0;
};

/// Star packing number: the largest set of vertices whose closed
/// neighbourhoods are pairwise disjoint, found by branch and bound.
StarPackingWitness star_packing_number(const Graph& g);

/// Same quantity by scanning all 2^n vertex subsets; n <= 24.
int star_packing_number_exhaustive(const Graph& g);

/// True iff the closed neighbourhoods of the given centres are pairwise disjoint.
bool is_star_packing(const Graph& g, VertexSet centers);

/// All 3-cliques as ascending triples, lexicographically sorted.
std::vector<std::array<int, 3>> triangles(const Graph& g);

/// True iff G has no induced whiskered triangle.
bool is_wk3_free(const Graph& g);

inline bool is_triangle_free(const Graph& g) { return triangles(g).empty(); }

/// Graph built from an edge x_i x_j after removing A.
///
/// `common` is N(x_i) ∩ N(x_j) in G \ A. `graph` lives on V(G) \ (A ∪ common)
/// and adds every pair p q with p adjacent to x_i and q adjacent to x_j.
struct EvenConnection {
    Graph graph;
    VertexSet common = 0;
};

/// Throws std::invalid_argument unless ij is an edge and A is contained in
/// (N(x_i) ∪ N(x_j)) \ {x_i, x_j}.
EvenConnection even_connection_graph(const Graph& g, int i, int j, VertexSet removed = 0);

/// (N(x_i) ∪ N(x_j)) \ {x_i, x_j}: the pool the removable sets A are drawn from.
VertexSet admissible_pool(const Graph& g, int i, int j);

/// Throws std::invalid_argument when ij is not an edge or A leaves the pool.
void require_admissible(const Graph& g, int i, int j, VertexSet removed);

/// The graph whose edge ideal is the polarization of (I(G \ A)^2 : x_i x_j):
/// G \ A, the even-connection pairs, and a whisker `name_2` on every common
/// neighbour of x_i and x_j.
Graph whiskered_colon_graph(const Graph& g, int i, int j, VertexSet removed = 0);

}  // namespace eil
