// gks: keyword search over node-labeled weighted graphs.
//
// Subcommands: ingest, build-index, query, compare-exact, bench-index.
// Exit codes: 0 ok, 2 usage, 3 data, 4 missing index, 5 refusal.

#include <iostream>

#include <CLI11.hpp>

#include "gks/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"keyword search over node-labeled weighted graphs"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    gks::IngestOptions ingest;
    CLI::App* cmd_ingest = app.add_subcommand(
        "ingest", "parse node/edge TSV files into a workspace and build the text index");
    cmd_ingest->add_option("out_dir", ingest.out_dir, "workspace directory")->required();
    cmd_ingest->add_option("--nodes", ingest.nodes_path, "nodes TSV (id, importance, type, text)")
        ->required();
    cmd_ingest->add_option("--edges", ingest.edges_path, "edges TSV (src, dst[, weight])")
        ->required();
    cmd_ingest->add_option("--scheme", ingest.scheme,
                           "edge weight scheme: equal[:w0], log, semantic (default semantic)");
    cmd_ingest->add_option("--ew-scale", ingest.ew_scale, "override edge-weight normalization");
    cmd_ingest->add_option("--ni-scale", ingest.ni_scale, "override importance normalization");

    gks::BuildIndexOptions build;
    CLI::App* cmd_build = app.add_subcommand("build-index", "build and persist a 2-hop index");
    cmd_build->add_option("workspace", build.workspace, "workspace directory")->required();
    cmd_build->add_option("--method", build.method, "edge, nodeimp, combined1, combined2")
        ->required();
    cmd_build->add_option("--lambda", build.lambda, "tradeoff for combined1 (default 0.5)");
    cmd_build->add_option("--dmax", build.d_max,
                          "truncation radius (default: 10x mean edge weight)");

    gks::QueryOptions query;
    CLI::App* cmd_query = app.add_subcommand("query", "run a keyword query");
    cmd_query->add_option("workspace", query.workspace, "workspace directory")->required();
    cmd_query->add_option("--keywords", query.keywords, "keyword phrases (quote multi-word)")
        ->required()
        ->take_all();
    cmd_query->add_option("--method", query.method,
                          "edge, nodeimp, combined1, combined2, exact (default combined1)");
    cmd_query->add_option("--lambda", query.lambda, "tradeoff in [0,1] (default 0.5)");
    cmd_query->add_option("--k", query.k, "answers to return (default 5)");
    cmd_query->add_option("--delta", query.delta,
                          "replace-loop stop threshold on C (default 1e-3)");
    cmd_query->add_option("--max-iters", query.max_iters,
                          "replace-loop round limit (default 5)");
    cmd_query->add_option("--format", query.format, "text, json, dot (default text)");

    gks::CompareExactOptions compare;
    CLI::App* cmd_compare = app.add_subcommand(
        "compare-exact", "compare greedy rankings against exhaustive search");
    cmd_compare->add_option("workspace", compare.workspace, "workspace directory")->required();
    cmd_compare->add_option("--queries", compare.queries_path,
                            "query file, tab-separated phrases per line")
        ->required();
    cmd_compare->add_option("--lambda", compare.lambda, "tradeoff in [0,1] (default 0.5)");
    cmd_compare->add_option("--dmax", compare.d_max, "truncation radius (default: unbounded)");
    cmd_compare->add_option("--delta", compare.delta, "combined2 stop threshold");
    cmd_compare->add_option("--max-iters", compare.max_iters, "combined2 round limit");

    gks::BenchIndexOptions bench;
    CLI::App* cmd_bench = app.add_subcommand(
        "bench-index", "index size and distance-query latency across d_max values");
    cmd_bench->add_option("workspace", bench.workspace, "workspace directory")->required();
    cmd_bench->add_option("--dmax-list", bench.dmax_list,
                          "d_max values; absolute, Nx mean edge weight, or inf")
        ->delimiter(',');
    cmd_bench->add_option("--pairs", bench.pairs, "random query pairs (default 1000000)");
    cmd_bench->add_option("--seed", bench.seed, "pair sampling seed (default 42)");
    cmd_bench->add_option("--method", bench.method, "transform to index (default edge)");
    cmd_bench->add_option("--lambda", bench.lambda, "tradeoff for combined1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? gks::kExitOk : gks::kExitUsage;
    }

    try {
        if (cmd_ingest->parsed()) gks::cmd_ingest(ingest, std::cout, std::cerr);
        if (cmd_build->parsed()) gks::cmd_build_index(build, std::cout, std::cerr);
        if (cmd_query->parsed()) gks::cmd_query(query, std::cout, std::cerr);
        if (cmd_compare->parsed()) gks::cmd_compare_exact(compare, std::cout, std::cerr);
        if (cmd_bench->parsed()) gks::cmd_bench_index(bench, std::cout, std::cerr);
    } catch (const gks::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gks::kExitUsage;
    } catch (const gks::MissingIndexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gks::kExitMissingIndex;
    } catch (const gks::RefusalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gks::kExitRefusal;
    } catch (const gks::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gks::kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gks::kExitData;
    }
    return gks::kExitOk;
}
