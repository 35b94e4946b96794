#include "gks/workspace.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "gks/graph_io.hpp"

namespace gks {

using nlohmann::json;

Workspace Workspace::load(const std::string& dir) {
    std::ifstream in(dir + "/manifest.json");
    if (!in)
        throw DataError("no workspace manifest in " + dir + " (run the ingest command first)");
    json m;
    try {
        in >> m;
    } catch (const json::parse_error& e) {
        throw DataError(dir + "/manifest.json: " + e.what());
    }
    if (m.value("format_version", 0) != 1)
        throw DataError(dir + "/manifest.json: unsupported manifest version");

    Workspace ws;
    ws.dir = dir;
    ws.nodes_file = m.at("nodes_file").get<std::string>();
    ws.edges_file = m.at("edges_file").get<std::string>();
    ws.text_index_file = m.at("text_index_file").get<std::string>();
    ws.scheme = WeightScheme::parse(m.at("scheme").get<std::string>());
    ws.node_count = m.at("node_count").get<std::size_t>();
    ws.edge_count = m.at("edge_count").get<std::size_t>();
    ws.norm.ew_scale = m.at("ew_scale").get<double>();
    ws.norm.ni_scale = m.at("ni_scale").get<double>();
    for (const auto& j : m.value("indexes", json::array())) {
        IndexRecord rec;
        rec.key = j.at("key").get<std::string>();
        rec.file = j.at("file").get<std::string>();
        rec.method = j.at("method").get<std::string>();
        if (j.contains("lambda") && !j.at("lambda").is_null())
            rec.lambda = j.at("lambda").get<double>();
        rec.d_max = j.at("d_max").get<double>();
        rec.entries = j.at("entries").get<std::uint64_t>();
        rec.bytes = j.at("bytes").get<std::uint64_t>();
        ws.indexes.push_back(std::move(rec));
    }
    return ws;
}

void Workspace::save() const {
    json m;
    m["format_version"] = 1;
    m["nodes_file"] = nodes_file;
    m["edges_file"] = edges_file;
    m["text_index_file"] = text_index_file;
    m["scheme"] = scheme.to_string();
    m["node_count"] = node_count;
    m["edge_count"] = edge_count;
    m["ew_scale"] = norm.ew_scale;
    m["ni_scale"] = norm.ni_scale;
    m["indexes"] = json::array();
    for (const IndexRecord& rec : indexes) {
        json j;
        j["key"] = rec.key;
        j["file"] = rec.file;
        j["method"] = rec.method;
        if (rec.lambda)
            j["lambda"] = *rec.lambda;
        else
            j["lambda"] = nullptr;
        j["d_max"] = rec.d_max;
        j["entries"] = rec.entries;
        j["bytes"] = rec.bytes;
        m["indexes"].push_back(std::move(j));
    }
    std::ofstream out(dir + "/manifest.json", std::ios::trunc);
    if (!out) throw DataError("cannot write " + dir + "/manifest.json");
    out << m.dump(2) << "\n";
}

Graph Workspace::load_graph() const {
    std::vector<Node> nodes = read_nodes_tsv(path(nodes_file));
    // Canonical edge files always carry materialized weights.
    std::vector<EdgeRef> edges = read_edges_tsv(path(edges_file), true, nodes.size());
    Graph g(std::move(nodes), edges, scheme);
    if (g.node_count() != node_count || g.edge_count() != edge_count)
        throw DataError("workspace files do not match manifest counts in " + dir);
    return g;
}

InvertedIndex Workspace::load_text_index() const { return InvertedIndex::load(path(text_index_file)); }

const IndexRecord* Workspace::find_index(const std::string& key) const {
    for (const IndexRecord& rec : indexes)
        if (rec.key == key) return &rec;
    return nullptr;
}

void Workspace::put_index(IndexRecord rec) {
    for (IndexRecord& r : indexes)
        if (r.key == rec.key) {
            r = std::move(rec);
            return;
        }
    indexes.push_back(std::move(rec));
    std::sort(indexes.begin(), indexes.end(),
              [](const IndexRecord& a, const IndexRecord& b) { return a.key < b.key; });
}

std::string index_key_for(Method m, double lambda) {
    switch (m) {
        case Method::EdgeOnly:
            return "base";
        case Method::NodeImp:
        case Method::Combined2:
            return "gpp";
        case Method::Combined1:
            return "gprime-" + format_double(lambda);
        case Method::Exact:
            return "base";  // exact runs its own Dijkstra; base is unused
    }
    return "base";
}

Graph transform_for_key(const Graph& g, const std::string& key, double lambda) {
    if (key == "base") return g;
    if (key == "gpp") return transform_node_importance(g);
    if (key.rfind("gprime-", 0) == 0) return transform_combined(g, lambda);
    throw DataError("unknown index key " + key);
}

}  // namespace gks
