#include "eil/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace eil {

std::vector<int> members(VertexSet s) {
    std::vector<int> out;
    out.reserve(std::popcount(s));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    }
    labels_.reserve(n);
    for (int i = 1; i <= n; ++i) labels_.push_back("x" + std::to_string(i));
    adjacency_.assign(n, 0);
}

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)), adjacency_(labels_.size(), 0) {
    if (labels_.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw std::invalid_argument("graphs are limited to 64 vertices");
    }
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw std::invalid_argument("empty vertex label");
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate vertex label: " + l);
    }
    const int n = size();
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.u == e.v) throw std::invalid_argument("loop at vertex " + labels_[e.u]);
        adjacency_[e.u] |= bit(e.v);
        adjacency_[e.v] |= bit(e.u);
    }
}

std::optional<int> Graph::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

VertexSet Graph::all() const {
    return lower_bits(size());
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < size(); ++u) {
        for (int v : members(adjacency_[u] & ~lower_bits(u + 1))) out.push_back({u, v});
    }
    return out;
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto m : adjacency_) twice += std::popcount(m);
    return twice / 2;
}

VertexSet Graph::neighbors(VertexSet s) const {
    VertexSet out = 0;
    for (int v : members(s)) out |= adjacency_.at(v);
    return out;
}

std::string Graph::describe(VertexSet s) const {
    std::string out = "{";
    bool first = true;
    for (int v : members(s)) {
        if (!first) out += ",";
        out += labels_.at(v);
        first = false;
    }
    return out + "}";
}

Graph delete_vertices(const Graph& g, VertexSet removed) {
    if (removed & ~g.all()) throw std::invalid_argument("deleted set is not contained in V(G)");
    std::vector<int> new_index(g.size(), -1);
    std::vector<std::string> labels;
    for (int v = 0; v < g.size(); ++v) {
        if (removed & bit(v)) continue;
        new_index[v] = static_cast<int>(labels.size());
        labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (new_index[e.u] >= 0 && new_index[e.v] >= 0) edges.push_back({new_index[e.u], new_index[e.v]});
    }
    return Graph(std::move(labels), edges);
}

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.size() || v >= g.size()) {
        throw std::invalid_argument("unknown vertex");
    }
    VertexSet reached = bit(u);
    VertexSet frontier = bit(u);
    for (int d = 0; frontier; ++d) {
        if (reached & bit(v)) return d;
        frontier = g.neighbors(frontier) & ~reached;
        reached |= frontier;
    }
    return std::nullopt;
}

bool is_star_packing(const Graph& g, VertexSet centers) {
    VertexSet covered = 0;
    for (int c : members(centers)) {
        const VertexSet nb = g.closed_neighbors(c);
        if (covered & nb) return false;
        covered |= nb;
    }
    return true;
}

namespace {

struct PackingSearch {
    std::vector<int> order;           // branching order, descending degree
    std::vector<VertexSet> conflict;  // vertices within distance 2, self included
    VertexSet best = 0;
    int best_size = 0;

    void run(VertexSet candidates, VertexSet chosen, int chosen_size) {
        if (chosen_size + std::popcount(candidates) <= best_size) return;
        if (!candidates) {
            best = chosen;
            best_size = chosen_size;
            return;
        }
        int v = -1;
        for (int w : order) {
            if (candidates & bit(w)) {
                v = w;
                break;
            }
        }
        run(candidates & ~conflict[v], chosen | bit(v), chosen_size + 1);
        run(candidates & ~bit(v), chosen, chosen_size);
    }
};

}  // namespace

StarPackingWitness star_packing_number(const Graph& g) {
    const int n = g.size();
    PackingSearch search;
    search.conflict.resize(n);
    for (int v = 0; v < n; ++v) {
        search.conflict[v] = g.closed_neighbors(v) | g.neighbors(g.neighbors(v));
    }
    search.order.resize(n);
    for (int v = 0; v < n; ++v) search.order[v] = v;
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    search.run(g.all(), 0, 0);
    return {search.best, search.best_size};
}

int star_packing_number_exhaustive(const Graph& g) {
    if (g.size() > 24) throw std::invalid_argument("exhaustive packing search is limited to 24 vertices");
    int best = 0;
    for (VertexSet s = 0; s <= g.all(); ++s) {
        if (std::popcount(s) > best && is_star_packing(g, s)) best = std::popcount(s);
    }
    return best;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (const auto& e : g.edges()) {
        const VertexSet common = g.neighbors(e.u) & g.neighbors(e.v) & ~lower_bits(e.v + 1);
        for (int w : members(common)) out.push_back({e.u, e.v, w});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_wk3_free(const Graph& g) {
    for (const auto& t : triangles(g)) {
        const VertexSet tri = bit(t[0]) | bit(t[1]) | bit(t[2]);
        // a pendant at t[k] sees t[k] and neither of the other two corners
        std::array<VertexSet, 3> pendants{};
        for (int k = 0; k < 3; ++k) {
            VertexSet others = tri & ~bit(t[k]);
            VertexSet cand = g.neighbors(t[k]) & ~tri;
            for (int o : members(others)) cand &= ~g.neighbors(o);
            pendants[k] = cand;
        }
        for (int a : members(pendants[0])) {
            for (int b : members(pendants[1] & ~g.closed_neighbors(a))) {
                if (pendants[2] & ~g.closed_neighbors(a) & ~g.closed_neighbors(b)) return false;
            }
        }
    }
    return true;
}

VertexSet admissible_pool(const Graph& g, int i, int j) {
    return (g.neighbors(i) | g.neighbors(j)) & ~(bit(i) | bit(j));
}

void require_admissible(const Graph& g, int i, int j, VertexSet removed) {
    if (i < 0 || j < 0 || i >= g.size() || j >= g.size() || !g.adjacent(i, j)) {
        throw std::invalid_argument("not an edge of the graph");
    }
    if (removed & ~admissible_pool(g, i, j)) {
        throw std::invalid_argument("removed set must lie in (N(x_i) u N(x_j)) \\ {x_i, x_j}");
    }
}

EvenConnection even_connection_graph(const Graph& g, int i, int j, VertexSet removed) {
    require_admissible(g, i, j, removed);
    const VertexSet common = g.neighbors(i) & g.neighbors(j) & ~removed;
    const VertexSet gone = removed | common;
    const VertexSet ni = g.neighbors(i) & ~gone;
    const VertexSet nj = g.neighbors(j) & ~gone;

    std::vector<int> new_index(g.size(), -1);
    std::vector<std::string> labels;
    for (int v = 0; v < g.size(); ++v) {
        if (gone & bit(v)) continue;
        new_index[v] = static_cast<int>(labels.size());
        labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (new_index[e.u] >= 0 && new_index[e.v] >= 0) edges.push_back({new_index[e.u], new_index[e.v]});
    }
    for (int p : members(ni)) {
        for (int q : members(nj)) edges.push_back({new_index[p], new_index[q]});
    }
    return {Graph(std::move(labels), edges), common};
}

Graph whiskered_colon_graph(const Graph& g, int i, int j, VertexSet removed) {
    require_admissible(g, i, j, removed);
    const Graph rest = delete_vertices(g, removed);
    const int ri = *rest.index_of(g.label(i));
    const int rj = *rest.index_of(g.label(j));
    const VertexSet ni = rest.neighbors(ri);
    const VertexSet nj = rest.neighbors(rj);

    std::vector<std::string> labels = rest.labels();
    std::vector<Edge> edges = rest.edges();
    for (int p : members(ni)) {
        for (int q : members(nj)) {
            if (p != q) edges.push_back({p, q});
        }
    }
    for (int c : members(ni & nj)) {
        edges.push_back({c, static_cast<int>(labels.size())});
        labels.push_back(rest.label(c) + "_2");
    }
    return Graph(std::move(labels), edges);
}

}  // namespace eil
