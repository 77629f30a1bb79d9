#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "wdom/graph.hpp"

namespace wdom {

/// Evaluates the graph-expression mini-language:
///   path:n  cycle:n  complete:n  star:n  kbip:a,b
///   fig1  fig2_1  fig2_2  fig2_3
///   union(E1,E2)  lex(E1,E2)  file:PATH
/// Throws std::invalid_argument with a position hint on malformed input.
Graph parse_graph_expression(const std::string& expr);

/// Top-level lex(E1,E2) factors, when the expression is a product. Lets
/// callers route product instances to the product-aware solver.
std::optional<std::pair<Graph, Graph>> parse_product_expression(const std::string& expr);

/// Edge-list text format: first line "n m", then m lines "u v" (0-based,
/// u != v). Duplicate edges are rejected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace wdom
