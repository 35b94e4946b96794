#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gks/errors.hpp"

namespace gks {

using NodeId = std::uint32_t;

constexpr double kInfDist = std::numeric_limits<double>::infinity();

struct Node {
    double importance = 1.0;  // in (0, 1]
    std::string type;
    std::string text;
};

struct Neighbor {
    NodeId to;
    double weight;
};

// Undirected edge as it appears in input or iteration, u < v once stored.
struct EdgeRef {
    NodeId u;
    NodeId v;
    double weight;
};

enum class SchemeKind { Equal, Logarithmic, Semantic };

struct WeightScheme {
    SchemeKind kind = SchemeKind::Semantic;
    double w0 = 1.0;  // Equal only, must be > 0

    static WeightScheme equal(double w0);
    static WeightScheme logarithmic() { return {SchemeKind::Logarithmic, 0.0}; }
    static WeightScheme semantic() { return {SchemeKind::Semantic, 0.0}; }
    static WeightScheme parse(const std::string& spec);  // "equal:0.1", "log", "semantic"
    std::string to_string() const;
};

// EW and NI live on different scales; these put them on a comparable one.
struct NormalizationConstants {
    double ew_scale = 1.0;
    double ni_scale = 1.0;
};

// Immutable undirected graph with per-node importance/text and per-edge
// weights. Adjacency is symmetric and sorted by neighbor id. Duplicate
// input edges collapse to the minimum weight, self-loops are dropped.
class Graph {
public:
    Graph(std::vector<Node> nodes, const std::vector<EdgeRef>& edges,
          WeightScheme scheme = WeightScheme::semantic());

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    const Node& node(NodeId id) const { return nodes_[id]; }
    std::span<const Neighbor> neighbors(NodeId id) const {
        return {adj_[id].data(), adj_[id].size()};
    }
    std::size_t degree(NodeId id) const { return adj_[id].size(); }
    WeightScheme scheme() const { return scheme_; }
    std::size_t dropped_self_loops() const { return dropped_self_loops_; }
    std::size_t collapsed_duplicates() const { return collapsed_duplicates_; }

    // Weight of edge (u,v); throws DataError if the edge does not exist.
    double edge_weight(NodeId u, NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;

    // Visits each undirected edge once with u < v.
    template <class F>
    void for_each_edge(F&& f) const {
        for (NodeId u = 0; u < nodes_.size(); ++u)
            for (const Neighbor& nb : adj_[u])
                if (u < nb.to) f(EdgeRef{u, nb.to, nb.weight});
    }

    double mean_edge_weight() const;

private:
    friend Graph with_weights(const Graph& g, const std::vector<std::vector<double>>& w,
                              WeightScheme scheme);

    std::vector<Node> nodes_;
    std::vector<std::vector<Neighbor>> adj_;
    std::size_t edge_count_ = 0;
    std::size_t dropped_self_loops_ = 0;
    std::size_t collapsed_duplicates_ = 0;
    WeightScheme scheme_;
};

// imp'(n) = 1 / imp(n); importance is validated positive at construction.
inline double inverse_importance(const Node& n) { return 1.0 / n.importance; }

// Rewrites edge weights per the scheme; Semantic leaves them unchanged,
// Logarithmic uses (log2(1+deg_u) + log2(1+deg_v)) / 2 with degrees of g.
Graph apply_weight_scheme(const Graph& g, WeightScheme s);

// G': w'(u,v) = lambda*(imp'(u)+imp'(v)) + 2*(1-lambda)*w(u,v)
Graph transform_combined(const Graph& g, double lambda);

// G'': w''(u,v) = imp'(u) + imp'(v)
Graph transform_node_importance(const Graph& g);

// ew_scale = 1/mean edge weight (1 if no edges), ni_scale = 1/mean imp'.
NormalizationConstants normalization_constants(const Graph& g);

}  // namespace gks
