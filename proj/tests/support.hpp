#pragma once

// Oracles and generators shared by the test binaries. Everything here is
// written against plain adjacency matrices so it does not lean on the code
// under test.

#include <algorithm>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "eil/graph.hpp"
#include "eil/graph_io.hpp"

namespace testing_support {

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const eil::Graph& g) {
    Matrix a(g.size(), std::vector<int>(g.size(), 0));
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v) a[u][v] = g.adjacent(u, v) ? 1 : 0;
    return a;
}

constexpr int kFar = 1 << 20;

// Floyd-Warshall.
inline Matrix distances(const eil::Graph& g) {
    const int n = g.size();
    Matrix d(n, std::vector<int>(n, kFar));
    for (int u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) d[u][v] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// Largest vertex set with pairwise distance >= 3.
inline int brute_alpha2(const eil::Graph& g) {
    const int n = g.size();
    const Matrix d = distances(g);
    int best = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((s >> i & 1) && (s >> j & 1) && d[i][j] < 3) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

inline eil::Graph induced(const eil::Graph& g, eil::VertexSet keep) { return eil::delete_vertices(g, g.all() & ~keep); }

inline std::vector<eil::Graph> load_corpus(int max_n) {
    std::ifstream in(EIL_TEST_DATA "/graphs_le7.g6");
    std::vector<eil::Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        eil::Graph g = eil::parse_graph6(line);
        if (g.size() <= max_n) out.push_back(std::move(g));
    }
    return out;
}

inline eil::Graph random_labelled(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<eil::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    std::vector<std::string> labels;
    for (int v = 1; v <= n; ++v) labels.push_back("x" + std::to_string(v));
    return eil::Graph(labels, edges);
}

}  // namespace testing_support
