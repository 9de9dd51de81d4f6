#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eil/graph.hpp"

namespace eil {

/// Malformed graph6 or edge-list input. `position()` is a byte offset for
/// graph6 and a 1-based line number for edge lists.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Decodes one graph6 line (an optional ">>graph6<<" prefix is accepted).
/// Vertices are labelled x1..xn.
Graph parse_graph6(std::string_view text);

/// Encodes vertex order as-is; labels are not part of the format.
std::string to_graph6(const Graph& g);

/// "u v" lines are edges, "u" lines isolated vertices, '#' starts a comment.
/// Vertices are ordered by natural sort of their names (x2 before x10).
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

/// Natural ordering: digit runs compare numerically.
bool natural_less(std::string_view a, std::string_view b);

}  // namespace eil
