#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gks/graph.hpp"

namespace gks {

// Lowercase, split on every non-alphanumeric character, drop empty pieces.
std::vector<std::string> tokenize(std::string_view text);

// A query keyword. Quoted multi-word keywords are phrases and must match
// a contiguous token run in the node text.
struct KeywordPhrase {
    std::string raw;
    std::vector<std::string> tokens;

    static KeywordPhrase parse(std::string_view raw);  // UsageError if no tokens survive
};

// token -> ascending, duplicate-free node id postings.
class InvertedIndex {
public:
    static InvertedIndex build(const Graph& g);

    // nullptr when the token is absent.
    const std::vector<NodeId>* postings(std::string_view token) const;

    // Nodes whose tokenized text contains the phrase tokens contiguously;
    // postings of all tokens are intersected first, then each survivor is
    // verified against the node text. Unknown token -> empty set.
    std::vector<NodeId> content_nodes(const Graph& g, const KeywordPhrase& p) const;

    std::size_t token_count() const { return entries_.size(); }
    std::size_t posting_count() const;

    // Sorted TSV: token<TAB>comma-separated-node-ids.
    void save(const std::string& path) const;
    static InvertedIndex load(const std::string& path);

private:
    struct Entry {
        std::string token;
        std::vector<NodeId> ids;
    };
    std::vector<Entry> entries_;  // sorted by token
};

}  // namespace gks
