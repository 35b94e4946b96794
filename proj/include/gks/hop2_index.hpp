#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gks/graph.hpp"

namespace gks {

// One hub label: distance from `hub` to the owning node, plus the owner's
// predecessor on the hub-rooted shortest path (hub itself for single-edge
// paths, the owner for the self label).
struct LabelEntry {
    NodeId hub;
    NodeId parent;
    double dist;
};

struct IndexStats {
    std::uint64_t total_entries = 0;
    double mean_label_len = 0.0;
    std::uint64_t bytes = 0;  // serialized size
};

// Distance-aware 2-hop cover truncated at d_max, built by pruned Dijkstra
// in descending-degree order. Distances <= d_max are exact; anything
// farther reports disconnected (kInfDist).
class TwoHopIndex {
public:
    static TwoHopIndex build(const Graph& g, double d_max);

    // Ten times the mean edge weight of the graph being indexed.
    static double default_d_max(const Graph& g);

    // Descending degree, ties by ascending id.
    static std::vector<NodeId> degree_rank_order(const Graph& g);

    double d_max() const { return d_max_; }
    std::size_t node_count() const { return labels_.size(); }
    std::span<const LabelEntry> labels(NodeId id) const {
        return {labels_[id].data(), labels_[id].size()};
    }

    // Merge-join over the two label sets; kInfDist when no common hub
    // certifies a distance within d_max.
    double distance(NodeId s, NodeId t) const;

    // Node sequence s..t along real edges summing to distance(s, t);
    // nullopt when disconnected.
    std::optional<std::vector<NodeId>> shortest_path(NodeId s, NodeId t) const;

    IndexStats stats() const;

    // Binary format: magic "GKS2", u32 version, u64 node count, f64 d_max,
    // then per node a u32 entry count and (u32 hub, f64 dist, u32 parent)
    // triples. Little-endian, bit-exact round trip.
    void save(const std::string& path) const;
    static TwoHopIndex load(const std::string& path);

private:
    struct Meet {
        double dist = kInfDist;
        NodeId hub = 0;
    };
    Meet best_meet(NodeId s, NodeId t) const;
    const LabelEntry* find_label(NodeId node, NodeId hub) const;

    std::vector<std::vector<LabelEntry>> labels_;  // each sorted by hub id
    double d_max_ = kInfDist;
};

}  // namespace gks
