#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gks/graph.hpp"
#include "gks/hop2_index.hpp"
#include "gks/search.hpp"
#include "gks/text_index.hpp"

namespace gks {

// One persisted 2-hop index; the key identifies the transform it was
// built over ("base", "gpp", or "gprime-<lambda>").
struct IndexRecord {
    std::string key;
    std::string file;
    std::string method;  // build method as given on the command line
    std::optional<double> lambda;
    double d_max = 0.0;
    std::uint64_t entries = 0;
    std::uint64_t bytes = 0;
};

// manifest.json + the flat files it references, all inside one directory.
struct Workspace {
    std::string dir;
    std::string nodes_file = "nodes.tsv";
    std::string edges_file = "edges.tsv";
    std::string text_index_file = "text_index.tsv";
    WeightScheme scheme;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    NormalizationConstants norm;
    std::vector<IndexRecord> indexes;  // sorted by key

    static Workspace load(const std::string& dir);
    void save() const;

    std::string path(const std::string& rel) const { return dir + "/" + rel; }
    Graph load_graph() const;
    InvertedIndex load_text_index() const;

    const IndexRecord* find_index(const std::string& key) const;
    void put_index(IndexRecord rec);
};

// Index key for a query or build method. NodeImp and Combined2 share the
// lambda-independent G'' index.
std::string index_key_for(Method m, double lambda);

// The transform a key's index is built over.
Graph transform_for_key(const Graph& g, const std::string& key, double lambda);

}  // namespace gks
