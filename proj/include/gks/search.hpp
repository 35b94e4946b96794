#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gks/graph.hpp"
#include "gks/hop2_index.hpp"
#include "gks/text_index.hpp"

namespace gks {

enum class Method { EdgeOnly, NodeImp, Combined1, Combined2, Exact };

Method parse_method(const std::string& name);
std::string method_name(Method m);

struct Query {
    std::vector<KeywordPhrase> keywords;
    Method method = Method::Combined1;
    double lambda = 0.5;
    int k = 5;
    double delta = 1e-3;  // replace-loop stop threshold, on normalized C
    int max_iters = 5;    // replace-loop round limit
};

struct Scores {
    double ew = 0.0;            // sum of original edge weights
    double ni = 0.0;            // sum of inverse importances over all tree nodes
    double c = 0.0;             // lambda*ni_norm + (1-lambda)*ew_norm
    double search_score = 0.0;  // transformed-graph distance sum used for ranking
};

struct AnswerTree {
    NodeId root = 0;
    std::vector<NodeId> content;                   // aligned with query keywords
    std::vector<NodeId> nodes;                     // sorted, deduped
    std::vector<std::pair<NodeId, NodeId>> edges;  // u < v, sorted
    Scores scores;
};

double objective_ew(const AnswerTree& t, const Graph& g);
double objective_ni(const AnswerTree& t, const Graph& g);
double objective_combined(double ew, double ni, double lambda,
                          const NormalizationConstants& norm);

// Fills ew/ni/c from the tree; search_score is the caller's.
void score_tree(AnswerTree& t, const Graph& g, double lambda,
                const NormalizationConstants& norm);

// root..to shortest path, or nullopt when unreachable.
using PathProvider =
    std::function<std::optional<std::vector<NodeId>>(NodeId from, NodeId to)>;

// Merges the root-to-content shortest paths into a tree (an edge is added
// only when it reaches a new node), then repeatedly deletes leaves that
// are neither content nodes nor the root.
AnswerTree assemble_tree(NodeId root, const std::vector<NodeId>& content,
                         const PathProvider& paths);
AnswerTree assemble_tree(NodeId root, const std::vector<NodeId>& content,
                         const TwoHopIndex& path_index);

enum class RankBy { SearchScore, Combined, EdgeWeight, NodeImportance };

// Ascending by the chosen objective, one answer per distinct root, at most
// k results. Ties break on (score, root id, assignment, nodes).
std::vector<AnswerTree> rank_topk(std::vector<AnswerTree> candidates, int k, RankBy by);

// Algorithm 1: every node is a candidate root; each keyword is assigned
// its closest content node in the transformed graph the index was built
// on; roots ranked by the summed distances. Returns the k best distinct
// roots as assembled trees.
std::vector<AnswerTree> greedy_unique_root(const Query& q, const Graph& g,
                                           const TwoHopIndex& transformed_index,
                                           const std::vector<std::vector<NodeId>>& content_sets,
                                           const NormalizationConstants& norm);

// Algorithm 2: roots are the content nodes of the keyword with the
// smallest content set; other keywords start at their nearest content
// node in G'' and a bounded replace loop advances each keyword to its
// next-nearest unused candidate, keeping swaps that strictly decrease
// C(T). Trees ranked by C.
std::vector<AnswerTree> greedy_replace(const Query& q, const Graph& g,
                                       const TwoHopIndex& gpp_index,
                                       const std::vector<std::vector<NodeId>>& content_sets,
                                       const NormalizationConstants& norm);

struct ExactResult {
    std::optional<AnswerTree> best_ew;
    std::optional<AnswerTree> best_ni;
    std::optional<AnswerTree> best_c;
    std::uint64_t combinations = 0;
};

// Exhaustive gold standard: every root x content assignment, each
// assembled along shortest paths in the original graph, G'(lambda) and
// G'', keeping the minimum-objective tree per objective. Refuses when
// |roots| * prod |content sets| exceeds the guard.
ExactResult exact_exhaustive(const Query& q, const Graph& g,
                             const std::vector<std::vector<NodeId>>& content_sets,
                             const NormalizationConstants& norm,
                             std::uint64_t guard = 10'000'000);

// Plain Dijkstra, used by the exhaustive search.
struct DijkstraResult {
    std::vector<double> dist;
    std::vector<NodeId> parent;
};
DijkstraResult dijkstra(const Graph& g, NodeId source);

}  // namespace gks
