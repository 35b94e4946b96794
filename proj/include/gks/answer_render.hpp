#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gks/graph.hpp"
#include "gks/search.hpp"

namespace gks {

enum class OutputFormat { Text, Json, Dot };

OutputFormat parse_format(const std::string& name);

void render_text(std::ostream& out, const Query& q, const std::vector<AnswerTree>& answers,
                 const Graph& g);

// Schema: {query, method, lambda, k, delta, max_iters,
//          answers: [{root, assignment, nodes, edges, scores}]}
void render_json(std::ostream& out, const Query& q, const std::vector<AnswerTree>& answers,
                 const Graph& g);

// One graph per answer; content nodes dotted, the root double-bordered.
void render_dot(std::ostream& out, const Query& q, const std::vector<AnswerTree>& answers,
                const Graph& g);

}  // namespace gks
