#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "powergraph/graph.hpp"
#include "testutil.hpp"

using namespace powergraph;

TEST_CASE("build_dn basics") {
    PowerGraph d1 = build_dn(1);
    CHECK(d1.order() == 1);
    CHECK(d1.edge_count() == 0);

    PowerGraph d16 = build_dn(16);
    CHECK(d16.order() == 16);
    CHECK(d16.is_full_range());
    CHECK(d16.edge_count() == 50);  // 15 path + C(8,2) + C(4,2) + C(2,2)

    CHECK_THROWS_AS(build_dn(0), std::invalid_argument);
}

TEST_CASE("D_16 power cliques match the standard picture") {
    PowerGraph d16 = build_dn(16);
    std::map<unsigned, std::vector<label_t>> classes;
    for (const auto& [exp, members] : d16.power_classes()) classes[exp] = members;
    CHECK(classes[0] == std::vector<label_t>{1, 3, 5, 7, 9, 11, 13, 15});
    CHECK(classes[1] == std::vector<label_t>{2, 6, 10, 14});
    CHECK(classes[2] == std::vector<label_t>{4, 12});
    CHECK(classes[3] == std::vector<label_t>{8});
    CHECK(classes[4] == std::vector<label_t>{16});
}

TEST_CASE("construction validates labels") {
    CHECK_THROWS_AS(PowerGraph::from_labels({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PowerGraph::from_labels({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(PowerGraph::from_labels({1, kDefaultLabelCap + 1}), std::invalid_argument);
    CHECK(PowerGraph::from_labels({9, 2, 4}).labels() == std::vector<label_t>{2, 4, 9});
}

TEST_CASE("adjacency and edge kinds") {
    PowerGraph d16 = build_dn(16);
    CHECK(d16.edge_kind(1, 3) == EdgeKind::kClique);
    CHECK(d16.edge_kind(3, 4) == EdgeKind::kPath);
    CHECK(d16.edge_kind(4, 12) == EdgeKind::kClique);
    CHECK(d16.edge_kind(4, 8) == EdgeKind::kNone);
    CHECK(d16.edge_kind(7, 7) == EdgeKind::kNone);
    CHECK(d16.adjacent(4, 12));
    CHECK_FALSE(d16.adjacent(4, 8));
    CHECK_THROWS_AS(d16.adjacent(1, 17), std::invalid_argument);
    CHECK_THROWS_AS(d16.adjacent(0, 1), std::invalid_argument);
}

TEST_CASE("edge kinds partition the edge set") {
    PowerGraph g = build_dn(64);
    std::size_t path = 0, clique = 0;
    for (label_t a = 1; a <= 64; ++a)
        for (label_t b = a + 1; b <= 64; ++b) {
            EdgeKind k = g.edge_kind(a, b);
            if (k == EdgeKind::kPath) ++path;
            if (k == EdgeKind::kClique) ++clique;
            CHECK((k != EdgeKind::kNone) == testutil::slow_adjacent(a, b));
        }
    CHECK(path + clique == g.edge_count());
    CHECK(path == 63);
}

TEST_CASE("induced subgraphs") {
    PowerGraph d16 = build_dn(16);
    CHECK(d16.induced(d16.labels()) == d16);
    CHECK(d16.induced({}).order() == 0);
    PowerGraph sub = d16.induced({5, 6, 8, 9});
    CHECK(sub.edges() == std::vector<std::pair<label_t, label_t>>{{5, 6}, {5, 9}, {8, 9}});
    CHECK_THROWS_AS(d16.induced({5, 17}), std::invalid_argument);
}

TEST_CASE("factor components") {
    PowerGraph g = PowerGraph::from_labels({1, 2, 3, 7, 8});
    auto fs = factor_components(g);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].lo == 1);
    CHECK(fs[0].hi == 3);
    CHECK(fs[1].lo == 7);
    CHECK(fs[1].hi == 8);

    CHECK(factor_components(build_dn(16)).size() == 1);
    CHECK(factor_components(PowerGraph::from_labels({2, 4, 6})).size() == 3);
    CHECK(factor_components(PowerGraph{}).empty());
}

TEST_CASE("factor components partition the labels") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<label_t> labels;
        for (label_t v = 1; v <= 40; ++v)
            if (rng() % 2) labels.push_back(v);
        PowerGraph g = PowerGraph::from_labels(labels);
        std::vector<label_t> joined;
        for (const Factor& f : factor_components(g))
            for (label_t v = f.lo; v <= f.hi; ++v) joined.push_back(v);
        CHECK(joined == g.labels());
    }
}

TEST_CASE("maximal vertex of an interval") {
    Factor f = Factor::scan(5, 9);
    CHECK(f.m() == 8);
    CHECK(f.s() == 5);
    CHECK(f.offset() == 3);
    CHECK(f.length() == 5);

    CHECK(Factor::scan(7, 7).m() == 7);
    Factor whole = Factor::scan(1, 16);
    CHECK(whole.m() == 16);
    CHECK(q(whole.m()) == 16);
    CHECK_THROWS_AS(maximal_vertex(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(maximal_vertex(0, 2), std::invalid_argument);
}

TEST_CASE("maximal vertex is unique on random intervals up to 2^20") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        label_t a = 1 + rng() % ((label_t{1} << 20) - 1);
        label_t len = 1 + rng() % 512;
        label_t b = std::min(a + len - 1, label_t{1} << 20);
        label_t m = maximal_vertex(a, b);  // throws if the maximum is attained twice
        label_t expected = a;
        for (label_t v = a; v <= b; ++v)
            if (testutil::slow_q(v) > testutil::slow_q(expected)) expected = v;
        REQUIRE(m == expected);
    }
}

TEST_CASE("dense conversion") {
    CHECK(to_dense(PowerGraph{}).order() == 0);

    DenseGraph d4 = to_dense(build_dn(4));
    CHECK(d4.order() == 4);
    CHECK(d4.edge_count() == 4);
    CHECK(d4.adjacent(0, 1));  // 1-2
    CHECK(d4.adjacent(0, 2));  // 1-3 odd clique
    CHECK(d4.adjacent(1, 2));  // 2-3
    CHECK(d4.adjacent(2, 3));  // 3-4
    CHECK_FALSE(d4.adjacent(0, 3));
    CHECK_FALSE(d4.adjacent(1, 3));

    CHECK(to_dense(build_dn(16)).edge_count() == 50);
}

TEST_CASE("dense graph rejects bad edges") {
    DenseGraph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    g.add_edge(2, 0);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
}
