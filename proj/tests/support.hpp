// Test-only helpers: an independent Dijkstra oracle, random graph and
// query-instance generators, tree validity checks, and an independent
// exhaustive search used as the gold standard in tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gks/graph.hpp"
#include "gks/search.hpp"

namespace testsup {

using gks::Graph;
using gks::NodeId;

inline double runif(std::mt19937_64& rng, double a, double b) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
}

// Plain binary-heap Dijkstra, written separately from the library code.
struct OracleSssp {
    std::vector<double> dist;
    std::vector<NodeId> parent;
};

inline OracleSssp oracle_dijkstra(const Graph& g, NodeId src) {
    const std::size_t n = g.node_count();
    OracleSssp r;
    r.dist.assign(n, gks::kInfDist);
    r.parent.assign(n, src);
    std::priority_queue<std::pair<double, NodeId>, std::vector<std::pair<double, NodeId>>,
                        std::greater<>> pq;
    r.dist[src] = 0.0;
    pq.push({0.0, src});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > r.dist[u]) continue;
        for (const gks::Neighbor& nb : g.neighbors(u)) {
            if (d + nb.weight < r.dist[nb.to]) {
                r.dist[nb.to] = d + nb.weight;
                r.parent[nb.to] = u;
                pq.push({r.dist[nb.to], nb.to});
            }
        }
    }
    return r;
}

struct GraphSpec {
    std::size_t n = 100;
    double avg_degree = 4.0;
    double wmin = 0.01;
    double wmax = 1.0;
    bool unit_importance = false;
    double imp_min = 0.05;
};

// Connected: random recursive tree backbone plus extra random edges.
inline Graph random_connected_graph(std::mt19937_64& rng, const GraphSpec& spec) {
    std::vector<gks::Node> nodes(spec.n);
    for (auto& nd : nodes) {
        nd.importance = spec.unit_importance ? 1.0 : runif(rng, spec.imp_min, 1.0);
        nd.type = "n";
    }
    std::vector<gks::EdgeRef> edges;
    for (std::size_t i = 1; i < spec.n; ++i) {
        NodeId p = static_cast<NodeId>(rng() % i);
        edges.push_back({static_cast<NodeId>(i), p, runif(rng, spec.wmin, spec.wmax)});
    }
    std::size_t target = static_cast<std::size_t>(spec.n * spec.avg_degree / 2.0);
    while (edges.size() < target) {
        NodeId u = static_cast<NodeId>(rng() % spec.n);
        NodeId v = static_cast<NodeId>(rng() % spec.n);
        if (u == v) continue;
        edges.push_back({u, v, runif(rng, spec.wmin, spec.wmax)});
    }
    return Graph(std::move(nodes), edges);
}

// Plants each keyword token into `per_kw` distinct node texts.
inline Graph plant_keywords(Graph g, std::mt19937_64& rng,
                            const std::vector<std::string>& kws, std::size_t per_kw) {
    std::vector<gks::Node> nodes;
    nodes.reserve(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i) nodes.push_back(g.node(i));
    for (const std::string& kw : kws) {
        std::set<NodeId> picked;
        while (picked.size() < per_kw) {
            NodeId id = static_cast<NodeId>(rng() % g.node_count());
            if (picked.insert(id).second) {
                if (!nodes[id].text.empty()) nodes[id].text += " ";
                nodes[id].text += kw;
            }
        }
    }
    std::vector<gks::EdgeRef> edges;
    g.for_each_edge([&](const gks::EdgeRef& e) { edges.push_back(e); });
    return Graph(std::move(nodes), edges, g.scheme());
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Connected, acyclic, real edges only, keyword coverage, and every leaf a
// content node or the root.
inline bool is_valid_answer_tree(const gks::AnswerTree& t, const Graph& g) {
    if (t.nodes.empty()) return false;
    if (t.edges.size() + 1 != t.nodes.size()) return false;
    std::map<NodeId, std::size_t> pos;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) pos[t.nodes[i]] = i;
    if (pos.find(t.root) == pos.end()) return false;
    for (NodeId c : t.content)
        if (pos.find(c) == pos.end()) return false;
    UnionFind uf(t.nodes.size());
    std::map<NodeId, std::size_t> deg;
    for (const auto& [u, v] : t.edges) {
        if (!g.has_edge(u, v)) return false;
        auto iu = pos.find(u), iv = pos.find(v);
        if (iu == pos.end() || iv == pos.end()) return false;
        if (!uf.unite(iu->second, iv->second)) return false;  // cycle
        ++deg[u];
        ++deg[v];
    }
    std::set<NodeId> keep(t.content.begin(), t.content.end());
    keep.insert(t.root);
    for (NodeId id : t.nodes) {
        if (t.nodes.size() > 1 && deg[id] == 0) return false;  // disconnected
        if (deg[id] <= 1 && keep.find(id) == keep.end()) return false;
    }
    return true;
}

// Independent exhaustive gold standard. Enumerates every root and content
// assignment, assembling along shortest paths of the original graph, G'
// and G'' (the transforms re-derived locally), and returns the smallest
// EW / NI / C seen.
struct OracleBest {
    double ew = gks::kInfDist;
    double ni = gks::kInfDist;
    double c = gks::kInfDist;
};

inline Graph oracle_gprime(const Graph& g, double lambda) {
    std::vector<gks::Node> nodes;
    for (NodeId i = 0; i < g.node_count(); ++i) nodes.push_back(g.node(i));
    std::vector<gks::EdgeRef> edges;
    g.for_each_edge([&](const gks::EdgeRef& e) {
        double iu = 1.0 / g.node(e.u).importance;
        double iv = 1.0 / g.node(e.v).importance;
        edges.push_back({e.u, e.v, lambda * (iu + iv) + 2.0 * (1.0 - lambda) * e.weight});
    });
    return Graph(std::move(nodes), edges, g.scheme());
}

inline OracleBest oracle_exhaustive(const Graph& g,
                                    const std::vector<std::vector<NodeId>>& content_sets,
                                    double lambda, const gks::NormalizationConstants& norm) {
    OracleBest best;
    Graph variants[3] = {g, oracle_gprime(g, lambda), oracle_gprime(g, 1.0)};
    std::vector<std::size_t> idx(content_sets.size(), 0);
    for (NodeId root = 0; root < g.node_count(); ++root) {
        for (const Graph& variant : variants) {
            OracleSssp sp = oracle_dijkstra(variant, root);
            idx.assign(content_sets.size(), 0);
            while (true) {
                bool ok = true;
                for (std::size_t i = 0; i < idx.size(); ++i)
                    if (sp.dist[content_sets[i][idx[i]]] == gks::kInfDist) ok = false;
                if (ok) {
                    // Walk-union the parent paths into a tree, then prune
                    // non-content leaves.
                    std::set<NodeId> in_tree{root};
                    std::map<NodeId, std::set<NodeId>> adj;
                    adj[root];
                    for (std::size_t i = 0; i < idx.size(); ++i) {
                        std::vector<NodeId> path;
                        for (NodeId cur = content_sets[i][idx[i]]; cur != root;
                             cur = sp.parent[cur])
                            path.push_back(cur);
                        path.push_back(root);
                        std::reverse(path.begin(), path.end());
                        for (std::size_t j = 1; j < path.size(); ++j)
                            if (in_tree.insert(path[j]).second) {
                                adj[path[j - 1]].insert(path[j]);
                                adj[path[j]].insert(path[j - 1]);
                            }
                    }
                    std::set<NodeId> keep{root};
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        keep.insert(content_sets[i][idx[i]]);
                    bool changed = true;
                    while (changed) {
                        changed = false;
                        for (auto it = adj.begin(); it != adj.end();) {
                            if (adj.size() > 1 && it->second.size() <= 1 &&
                                keep.find(it->first) == keep.end()) {
                                if (!it->second.empty())
                                    adj[*it->second.begin()].erase(it->first);
                                it = adj.erase(it);
                                changed = true;
                            } else {
                                ++it;
                            }
                        }
                    }
                    double ew = 0.0, ni = 0.0;
                    for (const auto& [u, nbs] : adj) {
                        ni += 1.0 / g.node(u).importance;
                        for (NodeId v : nbs)
                            if (u < v) ew += g.edge_weight(u, v);
                    }
                    double c = lambda * ni * norm.ni_scale + (1.0 - lambda) * ew * norm.ew_scale;
                    best.ew = std::min(best.ew, ew);
                    best.ni = std::min(best.ni, ni);
                    best.c = std::min(best.c, c);
                }
                std::size_t pos = 0;
                while (pos < idx.size() && ++idx[pos] == content_sets[pos].size()) {
                    idx[pos] = 0;
                    ++pos;
                }
                if (pos == idx.size()) break;
            }
        }
    }
    return best;
}

}  // namespace testsup
