#include "gks/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

namespace gks {

namespace {

bool parse_double(std::string_view s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_u32(std::string_view s, std::uint32_t& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

[[noreturn]] void fail(const std::string& path, std::size_t line_no, const std::string& what) {
    throw DataError(path + ":" + std::to_string(line_no) + ": " + what);
}

// Splits into at most max_fields on tabs; the last field keeps the rest.
std::vector<std::string_view> split_tabs(std::string_view line, std::size_t max_fields) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (out.size() + 1 < max_fields) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) break;
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    out.push_back(line.substr(start));
    return out;
}

}  // namespace

std::vector<Node> read_nodes_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open nodes file " + path);
    std::vector<Node> nodes;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fields = split_tabs(line, 4);
        if (fields.size() != 4)
            fail(path, line_no, "expected id<TAB>importance<TAB>node_type<TAB>text");
        std::uint32_t id;
        if (!parse_u32(fields[0], id)) fail(path, line_no, "bad node id");
        if (id != nodes.size())
            fail(path, line_no,
                 "ids must be 0..N-1 in order; expected " + std::to_string(nodes.size()));
        double imp;
        if (!parse_double(fields[1], imp)) fail(path, line_no, "bad importance value");
        if (!std::isfinite(imp) || imp <= 0.0 || imp > 1.0)
            fail(path, line_no, "importance must be in (0, 1]");
        nodes.push_back({imp, std::string(fields[2]), std::string(fields[3])});
    }
    return nodes;
}

std::vector<EdgeRef> read_edges_tsv(const std::string& path, bool require_weight,
                                    std::size_t node_count) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edges file " + path);
    std::vector<EdgeRef> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fields = split_tabs(line, 3);
        if (fields.size() < 2) fail(path, line_no, "expected src_id<TAB>dst_id[<TAB>weight]");
        EdgeRef e{0, 0, 1.0};
        if (!parse_u32(fields[0], e.u)) fail(path, line_no, "bad src id");
        if (!parse_u32(fields[1], e.v)) fail(path, line_no, "bad dst id");
        if (e.u >= node_count || e.v >= node_count)
            fail(path, line_no, "edge references unknown node id");
        if (fields.size() == 3 && !fields[2].empty()) {
            if (!parse_double(fields[2], e.weight)) fail(path, line_no, "bad edge weight");
            if (!std::isfinite(e.weight) || e.weight < 0.0)
                fail(path, line_no, "edge weight must be non-negative");
        } else if (require_weight) {
            fail(path, line_no, "missing edge weight (required for this scheme)");
        }
        edges.push_back(e);
    }
    return edges;
}

void write_nodes_tsv(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw DataError("cannot write " + path);
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const Node& n = g.node(i);
        out << i << '\t' << format_double(n.importance) << '\t' << n.type << '\t' << n.text
            << '\n';
    }
}

void write_edges_tsv(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw DataError("cannot write " + path);
    g.for_each_edge([&](const EdgeRef& e) {
        out << e.u << '\t' << e.v << '\t' << format_double(e.weight) << '\n';
    });
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace gks
