#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gks/answer_render.hpp"
#include "gks/workspace.hpp"

namespace gks {

// Data goes to `out`; timings and warnings go to `err` so reruns of any
// command produce byte-identical data output.

struct IngestOptions {
    std::string nodes_path;
    std::string edges_path;
    std::string scheme = "semantic";
    std::string out_dir;
    std::optional<double> ew_scale;
    std::optional<double> ni_scale;
};
Workspace cmd_ingest(const IngestOptions& opt, std::ostream& out, std::ostream& err);

struct BuildIndexOptions {
    std::string workspace;
    std::string method = "combined1";
    double lambda = 0.5;
    std::optional<double> d_max;
};
IndexRecord cmd_build_index(const BuildIndexOptions& opt, std::ostream& out, std::ostream& err);

struct QueryOptions {
    std::string workspace;
    std::vector<std::string> keywords;
    std::string method = "combined1";
    double lambda = 0.5;
    int k = 5;
    double delta = 1e-3;
    int max_iters = 5;
    std::string format = "text";
};
std::vector<AnswerTree> cmd_query(const QueryOptions& opt, std::ostream& out, std::ostream& err);

struct CompareExactOptions {
    std::string workspace;
    std::string queries_path;  // one query per line, phrases tab-separated
    double lambda = 0.5;
    double d_max = kInfDist;
    double delta = 1e-3;
    int max_iters = 5;
};
void cmd_compare_exact(const CompareExactOptions& opt, std::ostream& out, std::ostream& err);

struct BenchIndexOptions {
    std::string workspace;
    std::vector<std::string> dmax_list = {"2x", "5x", "10x", "inf"};
    std::uint64_t pairs = 1'000'000;
    std::uint64_t seed = 42;
    std::string method = "edge";
    double lambda = 0.5;
};
void cmd_bench_index(const BenchIndexOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace gks
