#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "eil/graph.hpp"

namespace eil {

// Small named families, labelled x1..xn unless noted.
Graph edgeless_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Triangle x1 x2 x3 with leaves z1, z2, z3 attached to x1, x2, x3.
Graph whiskered_triangle();

/// Vertex labels of the two sides must be distinct.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Adjacency bits of the upper triangle, column by column as in graph6,
/// minimized over all vertex orders that respect colour refinement.
/// Isomorphic graphs get equal codes. Intended for n <= 8.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class on exactly n vertices
/// (n <= 8), ordered by canonical code.
std::vector<Graph> enumerate_graphs(int n);

/// All classes on 1..max_n vertices, grouped by vertex count.
std::vector<Graph> enumerate_graphs_up_to(int max_n);

/// Erdos-Renyi G(n, 1/2) drawn from raw generator bits.
Graph random_graph(int n, std::mt19937_64& rng);

}  // namespace eil
