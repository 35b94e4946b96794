// Shared fixtures: the reconstructed movie-graph scenario and helpers to
// run searches without a workspace on disk.
#pragma once

#include <string>
#include <vector>

#include "gks/graph.hpp"
#include "gks/graph_io.hpp"
#include "gks/search.hpp"
#include "gks/text_index.hpp"

#ifndef GKS_DATA_DIR
#define GKS_DATA_DIR "."
#endif

namespace testsup {

// Two actors connected both through a shared movie (high-importance title
// and cast_info middles) and through a shared birth-date info_type
// (low-importance middles). Equal base edge weights, so edge-based
// ranking cannot tell the two answers apart.
inline gks::Graph fig1_graph() {
    std::string dir = std::string(GKS_DATA_DIR) + "/fig1";
    std::vector<gks::Node> nodes = gks::read_nodes_tsv(dir + "/nodes.tsv");
    std::vector<gks::EdgeRef> edges = gks::read_edges_tsv(dir + "/edges.tsv", false, nodes.size());
    gks::Graph g(std::move(nodes), edges, gks::WeightScheme::equal(0.1));
    return gks::apply_weight_scheme(g, gks::WeightScheme::equal(0.1));
}

constexpr gks::NodeId kFig1Keanu = 0;
constexpr gks::NodeId kFig1Fishburne = 1;
constexpr gks::NodeId kFig1Matrix = 3;
constexpr gks::NodeId kFig1BirthDate = 6;

// Node sets of the two answers in the scenario.
inline std::vector<gks::NodeId> fig1_answer_b() { return {0, 1, 2, 3, 4}; }
inline std::vector<gks::NodeId> fig1_answer_a() { return {0, 1, 5, 6, 7}; }

inline std::vector<std::vector<gks::NodeId>> content_sets_for(
    const gks::Graph& g, const gks::InvertedIndex& idx,
    const std::vector<gks::KeywordPhrase>& kws) {
    std::vector<std::vector<gks::NodeId>> sets;
    for (const auto& kw : kws) sets.push_back(idx.content_nodes(g, kw));
    return sets;
}

}  // namespace testsup
