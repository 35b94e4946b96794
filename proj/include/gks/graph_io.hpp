#pragma once

#include <string>
#include <vector>

#include "gks/graph.hpp"

namespace gks {

// Nodes file: id<TAB>importance<TAB>node_type<TAB>text, ids 0..N-1 in order.
// Text is everything after the third tab and may itself contain tabs.
std::vector<Node> read_nodes_tsv(const std::string& path);

// Edges file: src<TAB>dst<TAB>weight. The weight column is optional when
// require_weight is false (Equal/Logarithmic schemes recompute it anyway).
// Endpoints are checked against node_count so errors carry a line number.
std::vector<EdgeRef> read_edges_tsv(const std::string& path, bool require_weight,
                                    std::size_t node_count);

void write_nodes_tsv(const std::string& path, const Graph& g);
void write_edges_tsv(const std::string& path, const Graph& g);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace gks
