#include "gks/search.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace gks {

Method parse_method(const std::string& name) {
    if (name == "edge") return Method::EdgeOnly;
    if (name == "nodeimp") return Method::NodeImp;
    if (name == "combined1") return Method::Combined1;
    if (name == "combined2") return Method::Combined2;
    if (name == "exact") return Method::Exact;
    throw UsageError("unknown method \"" + name +
                     "\" (expected edge, nodeimp, combined1, combined2, exact)");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::EdgeOnly: return "edge";
        case Method::NodeImp: return "nodeimp";
        case Method::Combined1: return "combined1";
        case Method::Combined2: return "combined2";
        case Method::Exact: return "exact";
    }
    return "?";
}

double objective_ew(const AnswerTree& t, const Graph& g) {
    double sum = 0.0;
    for (const auto& [u, v] : t.edges) sum += g.edge_weight(u, v);
    return sum;
}

double objective_ni(const AnswerTree& t, const Graph& g) {
    double sum = 0.0;
    for (NodeId id : t.nodes) sum += inverse_importance(g.node(id));
    return sum;
}

double objective_combined(double ew, double ni, double lambda,
                          const NormalizationConstants& norm) {
    return lambda * (ni * norm.ni_scale) + (1.0 - lambda) * (ew * norm.ew_scale);
}

void score_tree(AnswerTree& t, const Graph& g, double lambda,
                const NormalizationConstants& norm) {
    t.scores.ew = objective_ew(t, g);
    t.scores.ni = objective_ni(t, g);
    t.scores.c = objective_combined(t.scores.ew, t.scores.ni, lambda, norm);
}

AnswerTree assemble_tree(NodeId root, const std::vector<NodeId>& content,
                         const PathProvider& paths) {
    // Tree adjacency; edges are added only toward unvisited nodes so the
    // union of overlapping shortest paths stays acyclic.
    std::map<NodeId, std::vector<NodeId>> adj;
    adj[root];
    for (NodeId c : content) {
        auto path = paths(root, c);
        if (!path) throw DataError("assemble_tree: content node unreachable from root");
        for (std::size_t i = 1; i < path->size(); ++i) {
            NodeId u = (*path)[i - 1];
            NodeId v = (*path)[i];
            if (adj.find(v) == adj.end()) {
                adj[v];
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
    }

    // Minimality: drop leaves that are neither content nodes nor the root.
    std::set<NodeId> keep(content.begin(), content.end());
    keep.insert(root);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = adj.begin(); it != adj.end();) {
            if (it->second.size() <= 1 && keep.find(it->first) == keep.end() &&
                adj.size() > 1) {
                if (!it->second.empty()) {
                    NodeId nb = it->second.front();
                    auto& list = adj[nb];
                    list.erase(std::find(list.begin(), list.end(), it->first));
                }
                it = adj.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }

    AnswerTree t;
    t.root = root;
    t.content = content;
    for (const auto& [id, nbs] : adj) {
        t.nodes.push_back(id);
        for (NodeId nb : nbs)
            if (id < nb) t.edges.push_back({id, nb});
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

AnswerTree assemble_tree(NodeId root, const std::vector<NodeId>& content,
                         const TwoHopIndex& path_index) {
    return assemble_tree(root, content, [&](NodeId from, NodeId to) {
        return path_index.shortest_path(from, to);
    });
}

std::vector<AnswerTree> rank_topk(std::vector<AnswerTree> candidates, int k, RankBy by) {
    auto value = [by](const AnswerTree& t) {
        switch (by) {
            case RankBy::SearchScore: return t.scores.search_score;
            case RankBy::Combined: return t.scores.c;
            case RankBy::EdgeWeight: return t.scores.ew;
            case RankBy::NodeImportance: return t.scores.ni;
        }
        return t.scores.c;
    };
    std::sort(candidates.begin(), candidates.end(),
              [&](const AnswerTree& a, const AnswerTree& b) {
                  double va = value(a), vb = value(b);
                  if (va != vb) return va < vb;
                  if (a.root != b.root) return a.root < b.root;
                  if (a.content != b.content) return a.content < b.content;
                  return a.nodes < b.nodes;
              });
    std::vector<AnswerTree> out;
    std::set<NodeId> roots_seen;
    for (auto& t : candidates) {
        if (static_cast<int>(out.size()) >= k) break;
        if (roots_seen.insert(t.root).second) out.push_back(std::move(t));
    }
    return out;
}

namespace {

void require_content(const Query& q, const std::vector<std::vector<NodeId>>& content_sets) {
    if (q.keywords.empty()) throw UsageError("query has no keywords");
    if (q.keywords.size() != content_sets.size())
        throw UsageError("content sets do not match keywords");
    for (std::size_t i = 0; i < content_sets.size(); ++i)
        if (content_sets[i].empty()) throw NoMatchError(q.keywords[i].raw);
}

}  // namespace

std::vector<AnswerTree> greedy_unique_root(const Query& q, const Graph& g,
                                           const TwoHopIndex& transformed_index,
                                           const std::vector<std::vector<NodeId>>& content_sets,
                                           const NormalizationConstants& norm) {
    require_content(q, content_sets);
    const std::size_t n = g.node_count();
    const std::size_t kw_count = content_sets.size();

    // Every node is a potential root; a root where some keyword stays
    // beyond d_max is skipped.
    std::vector<std::pair<double, NodeId>> scored;
    for (NodeId r = 0; r < n; ++r) {
        double total = 0.0;
        bool reachable = true;
        for (std::size_t i = 0; i < kw_count && reachable; ++i) {
            double best = kInfDist;
            for (NodeId c : content_sets[i]) {
                double d = transformed_index.distance(r, c);
                if (d < best) best = d;
            }
            if (best == kInfDist)
                reachable = false;
            else
                total += best;
        }
        if (reachable) scored.push_back({total, r});
    }
    std::sort(scored.begin(), scored.end());
    if (static_cast<int>(scored.size()) > q.k) scored.resize(static_cast<std::size_t>(q.k));

    std::vector<AnswerTree> answers;
    for (auto [score, r] : scored) {
        std::vector<NodeId> assignment(kw_count);
        for (std::size_t i = 0; i < kw_count; ++i) {
            double best = kInfDist;
            NodeId pick = content_sets[i].front();
            for (NodeId c : content_sets[i]) {
                double d = transformed_index.distance(r, c);
                if (d < best) {
                    best = d;
                    pick = c;
                }
            }
            assignment[i] = pick;
        }
        AnswerTree t = assemble_tree(r, assignment, transformed_index);
        score_tree(t, g, q.lambda, norm);
        t.scores.search_score = score;
        answers.push_back(std::move(t));
    }
    return rank_topk(std::move(answers), q.k, RankBy::SearchScore);
}

std::vector<AnswerTree> greedy_replace(const Query& q, const Graph& g,
                                       const TwoHopIndex& gpp_index,
                                       const std::vector<std::vector<NodeId>>& content_sets,
                                       const NormalizationConstants& norm) {
    require_content(q, content_sets);
    const std::size_t kw_count = content_sets.size();

    // Keyword with the smallest content set; ties by fewer tokens, then
    // lexicographic raw text.
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < kw_count; ++i) {
        const auto& a = content_sets[i];
        const auto& b = content_sets[pivot];
        if (a.size() != b.size()) {
            if (a.size() < b.size()) pivot = i;
        } else if (q.keywords[i].tokens.size() != q.keywords[pivot].tokens.size()) {
            if (q.keywords[i].tokens.size() < q.keywords[pivot].tokens.size()) pivot = i;
        } else if (q.keywords[i].raw < q.keywords[pivot].raw) {
            pivot = i;
        }
    }

    std::vector<AnswerTree> trees;
    for (NodeId root : content_sets[pivot]) {
        // Per-keyword candidate lists sorted by distance from this root.
        std::vector<std::vector<std::pair<double, NodeId>>> cand(kw_count);
        bool reachable = true;
        for (std::size_t i = 0; i < kw_count && reachable; ++i) {
            if (i == pivot) continue;
            for (NodeId c : content_sets[i]) {
                double d = gpp_index.distance(root, c);
                if (d < kInfDist) cand[i].push_back({d, c});
            }
            if (cand[i].empty()) {
                reachable = false;
                break;
            }
            std::sort(cand[i].begin(), cand[i].end());
        }
        if (!reachable) continue;

        std::vector<NodeId> assignment(kw_count);
        std::vector<std::size_t> cursor(kw_count, 0);
        assignment[pivot] = root;
        double dist_sum = 0.0;
        for (std::size_t i = 0; i < kw_count; ++i) {
            if (i == pivot) continue;
            assignment[i] = cand[i].front().second;
            dist_sum += cand[i].front().first;
        }

        AnswerTree best = assemble_tree(root, assignment, gpp_index);
        score_tree(best, g, q.lambda, norm);
        best.scores.search_score = dist_sum;

        // Replace loop: each round advances every non-pivot keyword to its
        // next-nearest unused candidate; a swap sticks only when it
        // strictly lowers C(T).
        for (int round = 0; round < q.max_iters; ++round) {
            double round_start = best.scores.c;
            for (std::size_t i = 0; i < kw_count; ++i) {
                if (i == pivot) continue;
                std::size_t next = cursor[i] + 1;
                auto used = [&](NodeId c) {
                    for (std::size_t j = 0; j < kw_count; ++j)
                        if (j != i && assignment[j] == c) return true;
                    return false;
                };
                while (next < cand[i].size() && used(cand[i][next].second)) ++next;
                if (next >= cand[i].size()) continue;
                cursor[i] = next;

                std::vector<NodeId> trial = assignment;
                trial[i] = cand[i][next].second;
                AnswerTree candidate = assemble_tree(root, trial, gpp_index);
                score_tree(candidate, g, q.lambda, norm);
                if (candidate.scores.c < best.scores.c) {
                    double ds = 0.0;
                    for (std::size_t j = 0; j < kw_count; ++j) {
                        if (j == pivot) continue;
                        for (const auto& [d, c] : cand[j])
                            if (c == trial[j]) {
                                ds += d;
                                break;
                            }
                    }
                    candidate.scores.search_score = ds;
                    assignment = std::move(trial);
                    best = std::move(candidate);
                }
            }
            if (round_start - best.scores.c <= q.delta) break;
        }
        trees.push_back(std::move(best));
    }
    return rank_topk(std::move(trees), q.k, RankBy::Combined);
}

DijkstraResult dijkstra(const Graph& g, NodeId source) {
    const std::size_t n = g.node_count();
    DijkstraResult r;
    r.dist.assign(n, kInfDist);
    r.parent.assign(n, source);
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    r.dist[source] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > r.dist[v]) continue;
        for (const Neighbor& nb : g.neighbors(v)) {
            double nd = d + nb.weight;
            if (nd < r.dist[nb.to]) {
                r.dist[nb.to] = nd;
                r.parent[nb.to] = v;
                heap.push({nd, nb.to});
            }
        }
    }
    return r;
}

namespace {

std::optional<std::vector<NodeId>> path_from_parents(const DijkstraResult& dr, NodeId root,
                                                     NodeId to) {
    if (dr.dist[to] == kInfDist) return std::nullopt;
    std::vector<NodeId> path;
    for (NodeId cur = to; cur != root; cur = dr.parent[cur]) path.push_back(cur);
    path.push_back(root);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

ExactResult exact_exhaustive(const Query& q, const Graph& g,
                             const std::vector<std::vector<NodeId>>& content_sets,
                             const NormalizationConstants& norm, std::uint64_t guard) {
    require_content(q, content_sets);
    const std::size_t n = g.node_count();
    const std::size_t kw_count = content_sets.size();

    std::uint64_t combos = 1;
    for (const auto& set : content_sets) {
        combos *= set.size();
        if (combos > guard) break;
    }
    const std::uint64_t roots = std::max<std::uint64_t>(n, 1);
    if (combos > guard || combos > guard / roots)
        throw RefusalError("exhaustive search refused: " + std::to_string(n) + " roots x " +
                           std::to_string(combos) + " assignments exceeds guard of " +
                           std::to_string(guard));

    const Graph gprime = transform_combined(g, q.lambda);
    const Graph gpp = transform_node_importance(g);
    const Graph* variants[3] = {&g, &gprime, &gpp};

    ExactResult result;
    // Tie-break on (root, nodes) so the winner does not depend on the
    // enumeration order.
    auto consider = [](const AnswerTree& t, double value, std::optional<AnswerTree>& best,
                       auto objective_of) {
        if (!best) {
            best = t;
            return;
        }
        double bv = objective_of(*best);
        if (value < bv ||
            (value == bv && (t.root < best->root ||
                             (t.root == best->root && t.nodes < best->nodes))))
            best = t;
    };

    std::vector<NodeId> assignment(kw_count);
    for (NodeId root = 0; root < n; ++root) {
        for (int vi = 0; vi < 3; ++vi) {
            DijkstraResult dr = dijkstra(*variants[vi], root);
            // Skip roots that cannot reach some keyword at all.
            bool reachable = true;
            for (const auto& set : content_sets) {
                bool any = false;
                for (NodeId c : set) any = any || dr.dist[c] < kInfDist;
                if (!any) {
                    reachable = false;
                    break;
                }
            }
            if (!reachable) continue;

            PathProvider provider = [&](NodeId, NodeId to) {
                return path_from_parents(dr, root, to);
            };

            // Lexicographic walk over the content assignment product.
            std::vector<std::size_t> idx(kw_count, 0);
            while (true) {
                bool ok = true;
                for (std::size_t i = 0; i < kw_count; ++i) {
                    assignment[i] = content_sets[i][idx[i]];
                    if (dr.dist[assignment[i]] == kInfDist) ok = false;
                }
                if (ok) {
                    ++result.combinations;
                    AnswerTree t = assemble_tree(root, assignment, provider);
                    score_tree(t, g, q.lambda, norm);
                    double ss = 0.0;
                    for (NodeId c : assignment) ss += dr.dist[c];
                    t.scores.search_score = ss;
                    consider(t, t.scores.ew, result.best_ew,
                             [](const AnswerTree& a) { return a.scores.ew; });
                    consider(t, t.scores.ni, result.best_ni,
                             [](const AnswerTree& a) { return a.scores.ni; });
                    consider(t, t.scores.c, result.best_c,
                             [](const AnswerTree& a) { return a.scores.c; });
                }
                std::size_t pos = 0;
                while (pos < kw_count && ++idx[pos] == content_sets[pos].size()) {
                    idx[pos] = 0;
                    ++pos;
                }
                if (pos == kw_count) break;
            }
        }
    }
    return result;
}

}  // namespace gks
