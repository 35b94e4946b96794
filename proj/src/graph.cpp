#include "gks/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace gks {

WeightScheme WeightScheme::equal(double w0) {
    if (!(w0 > 0.0) || !std::isfinite(w0))
        throw DataError("equal weight scheme requires w0 > 0");
    return {SchemeKind::Equal, w0};
}

WeightScheme WeightScheme::parse(const std::string& spec) {
    if (spec == "log" || spec == "logarithmic") return logarithmic();
    if (spec == "semantic") return semantic();
    if (spec == "equal") return equal(1.0);
    if (spec.rfind("equal:", 0) == 0) {
        try {
            return equal(std::stod(spec.substr(6)));
        } catch (const std::logic_error&) {
            throw UsageError("bad weight scheme \"" + spec + "\"");
        }
    }
    throw UsageError("unknown weight scheme \"" + spec +
                     "\" (expected equal[:w0], log, semantic)");
}

std::string WeightScheme::to_string() const {
    switch (kind) {
        case SchemeKind::Equal: {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "equal:%.17g", w0);
            return buf;
        }
        case SchemeKind::Logarithmic:
            return "log";
        case SchemeKind::Semantic:
            return "semantic";
    }
    return "semantic";
}

Graph::Graph(std::vector<Node> nodes, const std::vector<EdgeRef>& edges, WeightScheme scheme)
    : nodes_(std::move(nodes)), adj_(nodes_.size()), scheme_(scheme) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        double imp = nodes_[i].importance;
        if (!std::isfinite(imp) || imp <= 0.0 || imp > 1.0)
            throw DataError("node " + std::to_string(i) +
                            ": importance must be in (0, 1], got " + std::to_string(imp));
    }

    // Collapse duplicates keeping the minimum weight; shortest-path
    // semantics never use the heavier parallel edge.
    std::map<std::pair<NodeId, NodeId>, double> uniq;
    for (const EdgeRef& e : edges) {
        if (e.u >= nodes_.size() || e.v >= nodes_.size())
            throw DataError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                            std::to_string(e.v));
        if (!std::isfinite(e.weight) || e.weight < 0.0)
            throw DataError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                            ": weight must be a non-negative finite number");
        if (e.u == e.v) {
            ++dropped_self_loops_;
            continue;
        }
        auto key = std::minmax(e.u, e.v);
        auto [it, inserted] = uniq.emplace(std::pair<NodeId, NodeId>(key), e.weight);
        if (!inserted) {
            ++collapsed_duplicates_;
            it->second = std::min(it->second, e.weight);
        }
    }
    for (const auto& [key, w] : uniq) {
        adj_[key.first].push_back({key.second, w});
        adj_[key.second].push_back({key.first, w});
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
    edge_count_ = uniq.size();
}

double Graph::edge_weight(NodeId u, NodeId v) const {
    auto span = neighbors(u);
    auto it = std::lower_bound(span.begin(), span.end(), v,
                               [](const Neighbor& n, NodeId id) { return n.to < id; });
    if (it == span.end() || it->to != v)
        throw DataError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    return it->weight;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto span = neighbors(u);
    auto it = std::lower_bound(span.begin(), span.end(), v,
                               [](const Neighbor& n, NodeId id) { return n.to < id; });
    return it != span.end() && it->to == v;
}

double Graph::mean_edge_weight() const {
    if (edge_count_ == 0) return 0.0;
    double sum = 0.0;
    for_each_edge([&](const EdgeRef& e) { sum += e.weight; });
    return sum / static_cast<double>(edge_count_);
}

// Internal: same topology, new per-adjacency-slot weights.
Graph with_weights(const Graph& g, const std::vector<std::vector<double>>& w,
                   WeightScheme scheme) {
    Graph out = g;
    out.scheme_ = scheme;
    for (std::size_t u = 0; u < out.adj_.size(); ++u)
        for (std::size_t i = 0; i < out.adj_[u].size(); ++i) out.adj_[u][i].weight = w[u][i];
    return out;
}

Graph apply_weight_scheme(const Graph& g, WeightScheme s) {
    std::vector<std::vector<double>> w(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto nbs = g.neighbors(u);
        w[u].resize(nbs.size());
        for (std::size_t i = 0; i < nbs.size(); ++i) {
            switch (s.kind) {
                case SchemeKind::Equal:
                    w[u][i] = s.w0;
                    break;
                case SchemeKind::Logarithmic:
                    w[u][i] = (std::log2(1.0 + static_cast<double>(g.degree(u))) +
                               std::log2(1.0 + static_cast<double>(g.degree(nbs[i].to)))) /
                              2.0;
                    break;
                case SchemeKind::Semantic:
                    w[u][i] = nbs[i].weight;
                    break;
            }
        }
    }
    if (s.kind == SchemeKind::Equal && !(s.w0 > 0.0))
        throw DataError("equal weight scheme requires w0 > 0");
    return with_weights(g, w, s);
}

Graph transform_combined(const Graph& g, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw DataError("lambda must be in [0, 1]");
    std::vector<std::vector<double>> w(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto nbs = g.neighbors(u);
        double imp_u = inverse_importance(g.node(u));
        w[u].resize(nbs.size());
        for (std::size_t i = 0; i < nbs.size(); ++i) {
            double imp_v = inverse_importance(g.node(nbs[i].to));
            w[u][i] = lambda * (imp_u + imp_v) + 2.0 * (1.0 - lambda) * nbs[i].weight;
        }
    }
    return with_weights(g, w, g.scheme());
}

Graph transform_node_importance(const Graph& g) {
    std::vector<std::vector<double>> w(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto nbs = g.neighbors(u);
        double imp_u = inverse_importance(g.node(u));
        w[u].resize(nbs.size());
        for (std::size_t i = 0; i < nbs.size(); ++i)
            w[u][i] = imp_u + inverse_importance(g.node(nbs[i].to));
    }
    return with_weights(g, w, g.scheme());
}

NormalizationConstants normalization_constants(const Graph& g) {
    if (g.node_count() == 0) throw DataError("cannot normalize an empty graph");
    NormalizationConstants nc;
    double mean_w = g.mean_edge_weight();
    nc.ew_scale = mean_w > 0.0 ? 1.0 / mean_w : 1.0;
    double sum_inv = 0.0;
    for (NodeId i = 0; i < g.node_count(); ++i) sum_inv += inverse_importance(g.node(i));
    double mean_inv = sum_inv / static_cast<double>(g.node_count());
    nc.ni_scale = mean_inv > 0.0 ? 1.0 / mean_inv : 1.0;
    return nc;
}

}  // namespace gks
