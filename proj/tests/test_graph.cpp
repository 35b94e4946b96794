#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gks/graph.hpp"
#include "gks/graph_io.hpp"
#include "support.hpp"

using namespace gks;

namespace {

Graph two_node_graph(double imp_u, double imp_v, double w) {
    std::vector<Node> nodes{{imp_u, "a", ""}, {imp_v, "b", ""}};
    return Graph(std::move(nodes), {{0, 1, w}});
}

}  // namespace

TEST_CASE("inverse importance") {
    CHECK(inverse_importance(Node{1.0, "", ""}) == 1.0);
    CHECK(inverse_importance(Node{0.5, "", ""}) == 2.0);
    CHECK(inverse_importance(Node{0.1, "", ""}) == doctest::Approx(10.0));
}

TEST_CASE("importance outside (0,1] rejected") {
    CHECK_THROWS_AS(two_node_graph(0.0, 1.0, 1.0), DataError);
    CHECK_THROWS_AS(two_node_graph(-0.5, 1.0, 1.0), DataError);
    CHECK_THROWS_AS(two_node_graph(1.5, 1.0, 1.0), DataError);
}

TEST_CASE("duplicate edges collapse to minimum, self-loops dropped") {
    std::vector<Node> nodes{{1.0, "", ""}, {1.0, "", ""}, {1.0, "", ""}};
    Graph g(std::move(nodes), {{0, 1, 0.7}, {1, 0, 0.3}, {0, 1, 0.9}, {2, 2, 1.0}});
    CHECK(g.edge_count() == 1);
    CHECK(g.edge_weight(0, 1) == 0.3);
    CHECK(g.edge_weight(1, 0) == 0.3);
    CHECK(g.dropped_self_loops() == 1);
    CHECK(g.collapsed_duplicates() == 2);
}

TEST_CASE("weight schemes") {
    // path a-b-c: deg(a)=1, deg(b)=2, deg(c)=1
    std::vector<Node> nodes{{1.0, "", ""}, {1.0, "", ""}, {1.0, "", ""}};
    Graph g(std::move(nodes), {{0, 1, 0.42}, {1, 2, 0.17}});

    SUBCASE("equal") {
        Graph e = apply_weight_scheme(g, WeightScheme::equal(0.1));
        e.for_each_edge([](const EdgeRef& ed) { CHECK(ed.weight == 0.1); });
    }
    SUBCASE("logarithmic uses degrees of both ends") {
        Graph l = apply_weight_scheme(g, WeightScheme::logarithmic());
        // deg 1 & 2: (log2(2) + log2(3)) / 2
        CHECK(l.edge_weight(0, 1) ==
              doctest::Approx((1.0 + std::log2(3.0)) / 2.0).epsilon(1e-12));
    }
    SUBCASE("logarithmic examples from degree pairs") {
        std::vector<Node> n2{{1.0, "", ""}, {1.0, "", ""}};
        Graph pair(std::move(n2), {{0, 1, 5.0}});
        Graph l = apply_weight_scheme(pair, WeightScheme::logarithmic());
        CHECK(l.edge_weight(0, 1) == 1.0);  // deg 1, deg 1 -> log2(2) = 1

        std::vector<Node> n4{{1.0, "", ""}, {1.0, "", ""}, {1.0, "", ""}, {1.0, "", ""}};
        Graph star(std::move(n4), {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}});
        Graph ls = apply_weight_scheme(star, WeightScheme::logarithmic());
        CHECK(ls.edge_weight(0, 1) == 1.5);  // (log2(4) + log2(2)) / 2
    }
    SUBCASE("semantic keeps weights") {
        Graph s = apply_weight_scheme(g, WeightScheme::semantic());
        CHECK(s.edge_weight(0, 1) == 0.42);
        CHECK(s.edge_weight(1, 2) == 0.17);
    }
    SUBCASE("idempotent") {
        for (WeightScheme s :
             {WeightScheme::equal(0.25), WeightScheme::logarithmic(), WeightScheme::semantic()}) {
            Graph once = apply_weight_scheme(g, s);
            Graph twice = apply_weight_scheme(once, s);
            once.for_each_edge([&](const EdgeRef& ed) {
                CHECK(twice.edge_weight(ed.u, ed.v) == ed.weight);
            });
        }
    }
    SUBCASE("equal requires positive w0") {
        CHECK_THROWS_AS(WeightScheme::equal(0.0), DataError);
        CHECK_THROWS_AS(WeightScheme::equal(-1.0), DataError);
    }
}

TEST_CASE("combined transform formula") {
    // imp'(u) = 2, imp'(v) = 4, w = 0.1, lambda = 0.5:
    // 0.5 * 6 + 2 * 0.5 * 0.1 = 3.1
    Graph g = two_node_graph(0.5, 0.25, 0.1);
    Graph gp = transform_combined(g, 0.5);
    CHECK(gp.edge_weight(0, 1) == doctest::Approx(3.1).epsilon(1e-12));
}

TEST_CASE("transform identities on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        testsup::GraphSpec spec;
        spec.n = 60;
        spec.avg_degree = 3.5;
        Graph g = testsup::random_connected_graph(rng, spec);

        Graph lambda0 = transform_combined(g, 0.0);
        g.for_each_edge([&](const EdgeRef& e) {
            CHECK(lambda0.edge_weight(e.u, e.v) == 2.0 * e.weight);
        });

        Graph lambda1 = transform_combined(g, 1.0);
        Graph gpp = transform_node_importance(g);
        gpp.for_each_edge([&](const EdgeRef& e) {
            // bit-identical, not approximately equal
            CHECK(lambda1.edge_weight(e.u, e.v) == e.weight);
        });

        // strictly positive transformed weights
        for (double lambda : {0.25, 0.5, 1.0}) {
            Graph t = transform_combined(g, lambda);
            t.for_each_edge([](const EdgeRef& e) { CHECK(e.weight > 0.0); });
        }
    }
}

TEST_CASE("node importance transform values") {
    CHECK(transform_node_importance(two_node_graph(1.0, 1.0, 9.0)).edge_weight(0, 1) == 2.0);
    CHECK(transform_node_importance(two_node_graph(0.5, 0.25, 9.0)).edge_weight(0, 1) == 6.0);
}

TEST_CASE("adjacency symmetry on random graphs") {
    std::mt19937_64 rng(11);
    testsup::GraphSpec spec;
    spec.n = 120;
    spec.avg_degree = 5.0;
    Graph g = testsup::random_connected_graph(rng, spec);
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (const Neighbor& nb : g.neighbors(u)) {
            CHECK(g.has_edge(nb.to, u));
            CHECK(g.edge_weight(nb.to, u) == nb.weight);
        }
}

TEST_CASE("normalization constants") {
    SUBCASE("uniform values") {
        std::vector<Node> nodes{{1.0, "", ""}, {1.0, "", ""}, {1.0, "", ""}};
        Graph g(std::move(nodes), {{0, 1, 0.1}, {1, 2, 0.1}});
        NormalizationConstants nc = normalization_constants(g);
        CHECK(nc.ew_scale == doctest::Approx(10.0).epsilon(1e-12));
        CHECK(nc.ni_scale == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("edgeless graph") {
        std::vector<Node> nodes{{0.5, "", ""}};
        Graph g(std::move(nodes), {});
        NormalizationConstants nc = normalization_constants(g);
        CHECK(nc.ew_scale == 1.0);
        CHECK(nc.ni_scale == 0.5);  // 1 / imp' = 1 / 2
    }
    SUBCASE("mixed graph matches direct averaging") {
        std::mt19937_64 rng(3);
        testsup::GraphSpec spec;
        spec.n = 80;
        Graph g = testsup::random_connected_graph(rng, spec);
        double wsum = 0.0;
        std::size_t wcnt = 0;
        g.for_each_edge([&](const EdgeRef& e) {
            wsum += e.weight;
            ++wcnt;
        });
        double isum = 0.0;
        for (NodeId i = 0; i < g.node_count(); ++i) isum += 1.0 / g.node(i).importance;
        NormalizationConstants nc = normalization_constants(g);
        CHECK(nc.ew_scale ==
              doctest::Approx(1.0 / (wsum / static_cast<double>(wcnt))).epsilon(1e-12));
        CHECK(nc.ni_scale ==
              doctest::Approx(1.0 / (isum / static_cast<double>(g.node_count()))).epsilon(1e-12));
    }
}

TEST_CASE("tsv parsing errors carry line numbers") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "gks_io_test";
    fs::create_directories(dir);

    SUBCASE("bad importance") {
        std::ofstream f(dir / "nodes_bad.tsv");
        f << "0\t0.5\tt\thello\n1\t1.5\tt\tworld\n";
        f.close();
        try {
            read_nodes_tsv((dir / "nodes_bad.tsv").string());
            FAIL("expected DataError");
        } catch (const DataError& e) {
            CHECK(std::string(e.what()).find(":2:") != std::string::npos);
        }
    }
    SUBCASE("out-of-order ids") {
        std::ofstream f(dir / "nodes_order.tsv");
        f << "0\t0.5\tt\ta\n2\t0.5\tt\tb\n";
        f.close();
        CHECK_THROWS_AS(read_nodes_tsv((dir / "nodes_order.tsv").string()), DataError);
    }
    SUBCASE("dangling edge endpoint") {
        std::ofstream f(dir / "edges_dangling.tsv");
        f << "0\t1\t0.5\n0\t7\t0.5\n";
        f.close();
        try {
            read_edges_tsv((dir / "edges_dangling.tsv").string(), true, 2);
            FAIL("expected DataError");
        } catch (const DataError& e) {
            CHECK(std::string(e.what()).find(":2:") != std::string::npos);
            CHECK(std::string(e.what()).find("unknown node id") != std::string::npos);
        }
    }
    SUBCASE("missing required weight") {
        std::ofstream f(dir / "edges_noweight.tsv");
        f << "0\t1\n";
        f.close();
        CHECK_THROWS_AS(read_edges_tsv((dir / "edges_noweight.tsv").string(), true, 2), DataError);
        CHECK(read_edges_tsv((dir / "edges_noweight.tsv").string(), false, 2).size() == 1);
    }
    SUBCASE("node round trip") {
        std::vector<Node> nodes{{0.123456789012345, "title", "The Matrix"},
                                {1.0, "name", "Keanu Reeves"}};
        Graph g(std::move(nodes), {{0, 1, 0.25}});
        write_nodes_tsv((dir / "nodes_rt.tsv").string(), g);
        write_edges_tsv((dir / "edges_rt.tsv").string(), g);
        auto nodes2 = read_nodes_tsv((dir / "nodes_rt.tsv").string());
        REQUIRE(nodes2.size() == 2);
        CHECK(nodes2[0].importance == 0.123456789012345);
        CHECK(nodes2[0].text == "The Matrix");
        auto edges2 = read_edges_tsv((dir / "edges_rt.tsv").string(), true, 2);
        REQUIRE(edges2.size() == 1);
        CHECK(edges2[0].weight == 0.25);
    }
}
