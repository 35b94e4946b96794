#include "gks/answer_render.hpp"

#include <algorithm>

#include <json.hpp>

#include "gks/graph_io.hpp"

namespace gks {

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "dot") return OutputFormat::Dot;
    throw UsageError("unknown output format \"" + name + "\" (expected text, json, dot)");
}

void render_text(std::ostream& out, const Query& q, const std::vector<AnswerTree>& answers,
                 const Graph& g) {
    out << "# query:";
    for (const auto& kw : q.keywords) out << " \"" << kw.raw << '"';
    out << "\n# method: " << method_name(q.method) << " lambda=" << format_double(q.lambda)
        << " k=" << q.k << "\n";
    if (answers.empty()) {
        out << "no answers\n";
        return;
    }
    for (std::size_t a = 0; a < answers.size(); ++a) {
        const AnswerTree& t = answers[a];
        const Node& rn = g.node(t.root);
        out << "answer " << a + 1 << ": root=" << t.root << " (" << rn.type << ") \""
            << rn.text << "\"\n";
        out << "  scores: ew=" << format_double(t.scores.ew)
            << " ni=" << format_double(t.scores.ni) << " c=" << format_double(t.scores.c)
            << " search_score=" << format_double(t.scores.search_score) << "\n";
        for (std::size_t i = 0; i < q.keywords.size(); ++i) {
            const Node& cn = g.node(t.content[i]);
            out << "  keyword \"" << q.keywords[i].raw << "\" -> node " << t.content[i] << " ("
                << cn.type << ") \"" << cn.text << "\"\n";
        }
        out << "  nodes:";
        for (NodeId id : t.nodes) out << ' ' << id;
        out << "\n  edges:";
        for (const auto& [u, v] : t.edges)
            out << ' ' << u << '-' << v << " (" << format_double(g.edge_weight(u, v)) << ')';
        out << "\n";
    }
}

void render_json(std::ostream& out, const Query& q, const std::vector<AnswerTree>& answers,
                 const Graph& g) {
    nlohmann::json root;
    root["query"] = nlohmann::json::array();
    for (const auto& kw : q.keywords) root["query"].push_back(kw.raw);
    root["method"] = method_name(q.method);
    root["lambda"] = q.lambda;
    root["k"] = q.k;
    root["delta"] = q.delta;
    root["max_iters"] = q.max_iters;
    root["answers"] = nlohmann::json::array();
    for (const AnswerTree& t : answers) {
        nlohmann::json a;
        a["root"] = t.root;
        a["assignment"] = nlohmann::json::array();
        for (std::size_t i = 0; i < q.keywords.size(); ++i)
            a["assignment"].push_back({{"keyword", q.keywords[i].raw}, {"node", t.content[i]}});
        a["nodes"] = nlohmann::json::array();
        for (NodeId id : t.nodes) {
            const Node& n = g.node(id);
            a["nodes"].push_back({{"id", id},
                                  {"type", n.type},
                                  {"importance", n.importance},
                                  {"text", n.text}});
        }
        a["edges"] = nlohmann::json::array();
        for (const auto& [u, v] : t.edges)
            a["edges"].push_back({{"u", u}, {"v", v}, {"w", g.edge_weight(u, v)}});
        a["scores"] = {{"ew", t.scores.ew},
                       {"ni", t.scores.ni},
                       {"c", t.scores.c},
                       {"search_score", t.scores.search_score}};
        root["answers"].push_back(std::move(a));
    }
    out << root.dump(2) << "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

void render_dot(std::ostream& out, const Query& q, const std::vector<AnswerTree>& answers,
                const Graph& g) {
    for (std::size_t a = 0; a < answers.size(); ++a) {
        const AnswerTree& t = answers[a];
        out << "graph answer_" << a + 1 << " {\n";
        out << "  node [shape=box];\n";
        for (NodeId id : t.nodes) {
            const Node& n = g.node(id);
            out << "  n" << id << " [label=\"" << dot_escape(n.type) << "\\n"
                << dot_escape(n.text) << "\"";
            bool content =
                std::find(t.content.begin(), t.content.end(), id) != t.content.end();
            if (content) out << ", style=dotted";
            if (id == t.root) out << ", peripheries=2";
            out << "];\n";
        }
        for (const auto& [u, v] : t.edges)
            out << "  n" << u << " -- n" << v << " [label=\""
                << format_double(g.edge_weight(u, v)) << "\"];\n";
        out << "}\n";
    }
    (void)q;
}

}  // namespace gks
