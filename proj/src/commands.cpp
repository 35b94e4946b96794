#include "gks/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "gks/graph_io.hpp"

namespace gks {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<KeywordPhrase> parse_keywords(const std::vector<std::string>& raw) {
    if (raw.empty()) throw UsageError("at least one keyword is required");
    std::vector<KeywordPhrase> out;
    out.reserve(raw.size());
    for (const std::string& s : raw) out.push_back(KeywordPhrase::parse(s));
    return out;
}

std::vector<std::vector<NodeId>> gather_content_sets(const Graph& g, const InvertedIndex& idx,
                                                     const std::vector<KeywordPhrase>& kws) {
    std::vector<std::vector<NodeId>> sets;
    sets.reserve(kws.size());
    for (const KeywordPhrase& kw : kws) sets.push_back(idx.content_nodes(g, kw));
    return sets;
}

}  // namespace

Workspace cmd_ingest(const IngestOptions& opt, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    WeightScheme scheme = WeightScheme::parse(opt.scheme);

    std::vector<Node> nodes = read_nodes_tsv(opt.nodes_path);
    if (nodes.empty()) throw DataError(opt.nodes_path + ": no nodes");
    std::vector<EdgeRef> edges =
        read_edges_tsv(opt.edges_path, scheme.kind == SchemeKind::Semantic, nodes.size());

    Graph g(std::move(nodes), edges, scheme);
    if (g.dropped_self_loops() > 0)
        err << "warning: dropped " << g.dropped_self_loops() << " self-loop(s)\n";
    if (g.collapsed_duplicates() > 0)
        err << "warning: collapsed " << g.collapsed_duplicates()
            << " duplicate edge(s) to minimum weight\n";
    g = apply_weight_scheme(g, scheme);

    Workspace ws;
    ws.dir = opt.out_dir;
    ws.scheme = scheme;
    ws.node_count = g.node_count();
    ws.edge_count = g.edge_count();
    ws.norm = normalization_constants(g);
    if (opt.ew_scale) ws.norm.ew_scale = *opt.ew_scale;
    if (opt.ni_scale) ws.norm.ni_scale = *opt.ni_scale;
    if (!(ws.norm.ew_scale > 0.0) || !(ws.norm.ni_scale > 0.0))
        throw UsageError("normalization scales must be positive");

    std::filesystem::create_directories(opt.out_dir);
    write_nodes_tsv(ws.path(ws.nodes_file), g);
    write_edges_tsv(ws.path(ws.edges_file), g);
    InvertedIndex text = InvertedIndex::build(g);
    text.save(ws.path(ws.text_index_file));
    ws.save();

    out << "workspace: " << ws.dir << "\n";
    out << "nodes: " << ws.node_count << "\n";
    out << "edges: " << ws.edge_count << "\n";
    out << "scheme: " << scheme.to_string() << "\n";
    out << "tokens: " << text.token_count() << "\n";
    out << "postings: " << text.posting_count() << "\n";
    out << "ew_scale: " << format_double(ws.norm.ew_scale) << "\n";
    out << "ni_scale: " << format_double(ws.norm.ni_scale) << "\n";
    err << "ingest took " << seconds_since(start) << " s\n";
    return ws;
}

IndexRecord cmd_build_index(const BuildIndexOptions& opt, std::ostream& out, std::ostream& err) {
    Method method = parse_method(opt.method);
    if (method == Method::Exact)
        throw UsageError("the exact method needs no index; use edge, nodeimp, combined1 or combined2");
    if (!(opt.lambda >= 0.0 && opt.lambda <= 1.0))
        throw UsageError("lambda must be in [0, 1]");

    Workspace ws = Workspace::load(opt.workspace);
    Graph g = ws.load_graph();
    const std::string key = index_key_for(method, opt.lambda);
    Graph transformed = transform_for_key(g, key, opt.lambda);

    double d_max = opt.d_max ? *opt.d_max : TwoHopIndex::default_d_max(transformed);
    if (!(d_max > 0.0)) throw UsageError("d_max must be positive");

    auto start = std::chrono::steady_clock::now();
    TwoHopIndex ix = TwoHopIndex::build(transformed, d_max);
    double build_s = seconds_since(start);
    IndexStats st = ix.stats();

    IndexRecord rec;
    rec.key = key;
    rec.file = "hop2-" + key + ".bin";
    rec.method = method_name(method);
    if (key.rfind("gprime-", 0) == 0) rec.lambda = opt.lambda;
    rec.d_max = d_max;
    rec.entries = st.total_entries;
    rec.bytes = st.bytes;
    ix.save(ws.path(rec.file));
    ws.put_index(rec);
    ws.save();

    out << "index: " << rec.key << "\n";
    out << "file: " << rec.file << "\n";
    out << "d_max: " << format_double(rec.d_max) << "\n";
    out << "entries: " << rec.entries << "\n";
    out << "mean_label_len: " << format_double(st.mean_label_len) << "\n";
    out << "bytes: " << rec.bytes << "\n";
    err << "build took " << build_s << " s\n";
    return rec;
}

std::vector<AnswerTree> cmd_query(const QueryOptions& opt, std::ostream& out, std::ostream& err) {
    Query q;
    q.keywords = parse_keywords(opt.keywords);
    q.method = parse_method(opt.method);
    q.lambda = opt.lambda;
    q.k = opt.k;
    q.delta = opt.delta;
    q.max_iters = opt.max_iters;
    if (!(q.lambda >= 0.0 && q.lambda <= 1.0)) throw UsageError("lambda must be in [0, 1]");
    if (q.k <= 0) throw UsageError("k must be positive");
    if (q.max_iters <= 0) throw UsageError("max-iters must be positive");
    if (q.delta < 0.0) throw UsageError("delta must be >= 0");
    OutputFormat format = parse_format(opt.format);

    auto start = std::chrono::steady_clock::now();
    Workspace ws = Workspace::load(opt.workspace);
    Graph g = ws.load_graph();
    InvertedIndex text = ws.load_text_index();
    auto content_sets = gather_content_sets(g, text, q.keywords);

    std::vector<AnswerTree> answers;
    if (q.method == Method::Exact) {
        ExactResult ex = exact_exhaustive(q, g, content_sets, ws.norm);
        if (ex.best_c) answers.push_back(*ex.best_c);
    } else {
        const std::string key = index_key_for(q.method, q.lambda);
        const IndexRecord* rec = ws.find_index(key);
        if (rec == nullptr) {
            std::string hint = "gks build-index " + opt.workspace + " --method " + opt.method;
            if (q.method == Method::Combined1) hint += " --lambda " + format_double(q.lambda);
            throw MissingIndexError("no index \"" + key + "\" in workspace; run: " + hint);
        }
        TwoHopIndex ix = TwoHopIndex::load(ws.path(rec->file));
        if (q.method == Method::Combined2)
            answers = greedy_replace(q, g, ix, content_sets, ws.norm);
        else
            answers = greedy_unique_root(q, g, ix, content_sets, ws.norm);
    }

    switch (format) {
        case OutputFormat::Text: render_text(out, q, answers, g); break;
        case OutputFormat::Json: render_json(out, q, answers, g); break;
        case OutputFormat::Dot: render_dot(out, q, answers, g); break;
    }
    err << "query took " << seconds_since(start) << " s\n";
    return answers;
}

void cmd_compare_exact(const CompareExactOptions& opt, std::ostream& out, std::ostream& err) {
    Workspace ws = Workspace::load(opt.workspace);
    Graph g = ws.load_graph();
    InvertedIndex text = ws.load_text_index();

    std::ifstream qin(opt.queries_path);
    if (!qin) throw DataError("cannot open query file " + opt.queries_path);
    std::vector<std::vector<std::string>> query_lines;
    std::string line;
    while (std::getline(qin, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> phrases;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t tab = line.find('\t', start);
            std::size_t end = tab == std::string::npos ? line.size() : tab;
            if (end > start) phrases.push_back(line.substr(start, end - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (!phrases.empty()) query_lines.push_back(std::move(phrases));
    }
    if (query_lines.empty()) throw DataError(opt.queries_path + ": no queries");

    auto t0 = std::chrono::steady_clock::now();
    TwoHopIndex base_ix = TwoHopIndex::build(g, opt.d_max);
    TwoHopIndex gprime_ix = TwoHopIndex::build(transform_combined(g, opt.lambda), opt.d_max);
    TwoHopIndex gpp_ix = TwoHopIndex::build(transform_node_importance(g), opt.d_max);
    err << "index builds took " << seconds_since(t0) << " s\n";

    out << "query\tmethod\tew\tni\tc\tratio_ni\tratio_c\n";
    std::vector<double> ratios_c1, ratios_c2;
    for (std::size_t qi = 0; qi < query_lines.size(); ++qi) {
        Query q;
        q.keywords = parse_keywords(query_lines[qi]);
        q.lambda = opt.lambda;
        q.k = 1;
        q.delta = opt.delta;
        q.max_iters = opt.max_iters;
        auto content_sets = gather_content_sets(g, text, q.keywords);

        ExactResult ex = exact_exhaustive(q, g, content_sets, ws.norm);

        struct Row {
            const char* name;
            std::vector<AnswerTree> answers;
        };
        q.method = Method::EdgeOnly;
        Row rows[4];
        rows[0] = {"edge", greedy_unique_root(q, g, base_ix, content_sets, ws.norm)};
        q.method = Method::NodeImp;
        rows[1] = {"nodeimp", greedy_unique_root(q, g, gpp_ix, content_sets, ws.norm)};
        q.method = Method::Combined1;
        rows[2] = {"combined1", greedy_unique_root(q, g, gprime_ix, content_sets, ws.norm)};
        q.method = Method::Combined2;
        rows[3] = {"combined2", greedy_replace(q, g, gpp_ix, content_sets, ws.norm)};

        double exact_ew = ex.best_ew ? ex.best_ew->scores.ew : kInfDist;
        double exact_ni = ex.best_ni ? ex.best_ni->scores.ni : kInfDist;
        double exact_c = ex.best_c ? ex.best_c->scores.c : kInfDist;

        for (const Row& row : rows) {
            out << qi + 1 << '\t' << row.name << '\t';
            if (row.answers.empty()) {
                out << "-\t-\t-\t-\t-\n";
                continue;
            }
            const Scores& s = row.answers.front().scores;
            double rni = exact_ni > 0.0 && exact_ni < kInfDist ? s.ni / exact_ni : 0.0;
            double rc = exact_c > 0.0 && exact_c < kInfDist ? s.c / exact_c : 0.0;
            out << format_double(s.ew) << '\t' << format_double(s.ni) << '\t'
                << format_double(s.c) << '\t' << format_double(rni) << '\t'
                << format_double(rc) << '\n';
            if (row.name[0] == 'c' && rc > 0.0) {
                if (std::string(row.name) == "combined1") ratios_c1.push_back(rc);
                if (std::string(row.name) == "combined2") ratios_c2.push_back(rc);
            }
        }
        out << qi + 1 << "\texact\t" << format_double(exact_ew) << '\t'
            << format_double(exact_ni) << '\t' << format_double(exact_c) << "\t1\t1\n";
    }

    auto median = [](std::vector<double> v) {
        if (v.empty()) return 0.0;
        std::size_t mid = v.size() / 2;
        std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
        double hi = v[mid];
        if (v.size() % 2 == 1) return hi;
        double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
        return (lo + hi) / 2.0;
    };
    out << "# median ratio_c combined1: " << format_double(median(ratios_c1)) << "\n";
    out << "# median ratio_c combined2: " << format_double(median(ratios_c2)) << "\n";
}

void cmd_bench_index(const BenchIndexOptions& opt, std::ostream& out, std::ostream& err) {
    Method method = parse_method(opt.method);
    if (method == Method::Exact) throw UsageError("bench-index needs an indexable method");
    Workspace ws = Workspace::load(opt.workspace);
    Graph g = ws.load_graph();
    Graph transformed = transform_for_key(g, index_key_for(method, opt.lambda), opt.lambda);
    double mean_w = transformed.mean_edge_weight();

    // Fixed pair sample shared by every d_max row.
    const std::size_t n = transformed.node_count();
    std::mt19937_64 rng(opt.seed);
    std::vector<std::pair<NodeId, NodeId>> pairs(opt.pairs);
    for (auto& [s, t] : pairs) {
        s = static_cast<NodeId>(rng() % n);
        t = static_cast<NodeId>(rng() % n);
    }

    out << "method: " << method_name(method) << "\n";
    out << "pairs: " << opt.pairs << "\n";
    out << "seed: " << opt.seed << "\n";
    out << "mean_edge_weight: " << format_double(mean_w) << "\n";
    out << "d_max\tentries\tmean_label\tbytes\tconnected\tmean_finite_dist\tbuild_s\tquery_us\n";

    for (const std::string& token : opt.dmax_list) {
        double d_max;
        if (token == "inf") {
            d_max = kInfDist;
        } else if (!token.empty() && token.back() == 'x') {
            d_max = std::stod(token.substr(0, token.size() - 1)) * mean_w;
        } else {
            d_max = std::stod(token);
        }
        if (!(d_max > 0.0)) throw UsageError("d_max must be positive: " + token);

        auto t0 = std::chrono::steady_clock::now();
        TwoHopIndex ix = TwoHopIndex::build(transformed, d_max);
        double build_s = seconds_since(t0);
        IndexStats st = ix.stats();

        std::uint64_t connected = 0;
        double dist_sum = 0.0;
        auto t1 = std::chrono::steady_clock::now();
        for (const auto& [s, t] : pairs) {
            double d = ix.distance(s, t);
            if (d < kInfDist) {
                ++connected;
                dist_sum += d;
            }
        }
        double query_us = seconds_since(t1) * 1e6 / static_cast<double>(pairs.size());

        out << (token == "inf" ? "inf" : format_double(d_max)) << '\t' << st.total_entries
            << '\t' << format_double(st.mean_label_len) << '\t' << st.bytes << '\t'
            << connected << '\t'
            << format_double(connected ? dist_sum / static_cast<double>(connected) : 0.0)
            << '\t' << format_double(build_s) << '\t' << format_double(query_us) << '\n';
        err << "d_max " << token << ": build " << build_s << " s, mean query " << query_us
            << " us\n";
    }
}

}  // namespace gks
