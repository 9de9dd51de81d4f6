#include "eil/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace eil {

Graph edgeless_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) edges.push_back({i, j});
    return Graph(Graph(n).labels(), edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(Graph(n).labels(), edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(Graph(n).labels(), edges);
}

Graph whiskered_triangle() {
    return Graph({"x1", "x2", "x3", "z1", "z2", "z3"},
                 {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<Edge> edges = a.edges();
    for (const auto& e : b.edges()) edges.push_back({e.u + a.size(), e.v + a.size()});
    return Graph(std::move(labels), edges);
}

namespace {

std::vector<int> refine_colours(const Graph& g) {
    const int n = g.size();
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> signature;
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> around;
            for (int w : members(g.neighbors(v))) around.push_back(colour[w]);
            std::sort(around.begin(), around.end());
            sig[v] = {colour[v], std::move(around)};
            signature.emplace(sig[v], 0);
        }
        int next = 0;
        for (auto& [key, id] : signature) id = next++;
        std::vector<int> refined(n);
        for (int v = 0; v < n; ++v) refined[v] = signature.at(sig[v]);
        const auto classes = [](const std::vector<int>& c) { return std::set<int>(c.begin(), c.end()).size(); };
        const bool stable = classes(refined) == classes(colour);
        colour = std::move(refined);
        if (stable) return colour;
    }
}

std::uint64_t code_of(const Graph& g, const std::vector<int>& order) {
    std::uint64_t code = 0;
    const int n = g.size();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
    return code;
}

struct OrderSearch {
    const Graph& g;
    std::vector<int> slot_colour;  // colour required at each position
    std::vector<int> colour;
    std::vector<int> order;
    VertexSet used = 0;
    std::uint64_t best = ~std::uint64_t{0};

    void place(int pos) {
        if (pos == g.size()) {
            best = std::min(best, code_of(g, order));
            return;
        }
        for (int v = 0; v < g.size(); ++v) {
            if ((used & bit(v)) || colour[v] != slot_colour[pos]) continue;
            used |= bit(v);
            order[pos] = v;
            place(pos + 1);
            used &= ~bit(v);
        }
    }
};

Graph from_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    int k = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> --k) & 1) edges.push_back({i, j});
    return Graph(Graph(n).labels(), edges);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.size() > 11) throw std::invalid_argument("canonical_code supports at most 11 vertices");
    OrderSearch search{g, {}, refine_colours(g), std::vector<int>(g.size()), 0};
    search.slot_colour = search.colour;
    std::sort(search.slot_colour.begin(), search.slot_colour.end());
    search.place(0);
    return search.best;
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("enumerate_graphs supports 0..8 vertices");
    if (n == 0) return {Graph(0)};
    std::set<std::uint64_t> codes;
    for (const auto& smaller : enumerate_graphs(n - 1)) {
        for (VertexSet nb = 0; nb < bit(n - 1); ++nb) {
            std::vector<Edge> edges = smaller.edges();
            for (int v : members(nb)) edges.push_back({v, n - 1});
            codes.insert(canonical_code(Graph(Graph(n).labels(), edges)));
        }
    }
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (auto c : codes) out.push_back(from_code(n, c));
    return out;
}

std::vector<Graph> enumerate_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto level = enumerate_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Graph random_graph(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    std::uint64_t pool = 0;
    int left = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (left == 0) {
                pool = rng();
                left = 64;
            }
            if (pool & 1) edges.push_back({i, j});
            pool >>= 1;
            --left;
        }
    }
    return Graph(Graph(n).labels(), edges);
}

}  // namespace eil
