#include "gks/text_index.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

namespace gks {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        unsigned char uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc)) {
            cur.push_back(static_cast<char>(std::tolower(uc)));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

KeywordPhrase KeywordPhrase::parse(std::string_view raw) {
    KeywordPhrase p;
    p.raw = std::string(raw);
    p.tokens = tokenize(raw);
    if (p.tokens.empty())
        throw UsageError("keyword \"" + p.raw + "\" contains no searchable tokens");
    return p;
}

InvertedIndex InvertedIndex::build(const Graph& g) {
    std::map<std::string, std::vector<NodeId>> postings;
    for (NodeId id = 0; id < g.node_count(); ++id)
        for (std::string& tok : tokenize(g.node(id).text)) {
            auto& ids = postings[std::move(tok)];
            if (ids.empty() || ids.back() != id) ids.push_back(id);
        }
    InvertedIndex idx;
    idx.entries_.reserve(postings.size());
    for (auto& [tok, ids] : postings) idx.entries_.push_back({tok, std::move(ids)});
    return idx;
}

const std::vector<NodeId>* InvertedIndex::postings(std::string_view token) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), token,
                               [](const Entry& e, std::string_view t) { return e.token < t; });
    if (it == entries_.end() || it->token != token) return nullptr;
    return &it->ids;
}

namespace {

bool contains_contiguous(const std::vector<std::string>& text_tokens,
                         const std::vector<std::string>& phrase) {
    return std::search(text_tokens.begin(), text_tokens.end(), phrase.begin(), phrase.end()) !=
           text_tokens.end();
}

}  // namespace

std::vector<NodeId> InvertedIndex::content_nodes(const Graph& g, const KeywordPhrase& p) const {
    std::vector<NodeId> candidates;
    for (std::size_t i = 0; i < p.tokens.size(); ++i) {
        const std::vector<NodeId>* ids = postings(p.tokens[i]);
        if (ids == nullptr) return {};
        if (i == 0) {
            candidates = *ids;
        } else {
            std::vector<NodeId> merged;
            std::set_intersection(candidates.begin(), candidates.end(), ids->begin(),
                                  ids->end(), std::back_inserter(merged));
            candidates = std::move(merged);
        }
        if (candidates.empty()) return {};
    }
    if (p.tokens.size() == 1) return candidates;
    std::vector<NodeId> result;
    for (NodeId id : candidates)
        if (contains_contiguous(tokenize(g.node(id).text), p.tokens)) result.push_back(id);
    return result;
}

std::size_t InvertedIndex::posting_count() const {
    std::size_t n = 0;
    for (const Entry& e : entries_) n += e.ids.size();
    return n;
}

void InvertedIndex::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw DataError("cannot write " + path);
    for (const Entry& e : entries_) {
        out << e.token << '\t';
        for (std::size_t i = 0; i < e.ids.size(); ++i) {
            if (i) out << ',';
            out << e.ids[i];
        }
        out << '\n';
    }
}

InvertedIndex InvertedIndex::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open text index " + path);
    InvertedIndex idx;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw DataError(path + ":" + std::to_string(line_no) + ": expected token<TAB>ids");
        Entry e;
        e.token = line.substr(0, tab);
        std::size_t pos = tab + 1;
        while (pos <= line.size()) {
            std::size_t comma = line.find(',', pos);
            std::size_t end = comma == std::string::npos ? line.size() : comma;
            if (end > pos) e.ids.push_back(static_cast<NodeId>(std::stoul(line.substr(pos, end - pos))));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (!idx.entries_.empty() && !(idx.entries_.back().token < e.token))
            throw DataError(path + ":" + std::to_string(line_no) + ": tokens out of order");
        idx.entries_.push_back(std::move(e));
    }
    return idx;
}

}  // namespace gks
