#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "powergraph/similarity.hpp"
#include "testutil.hpp"

using namespace powergraph;

TEST_CASE("similarity classes on D_4") {
    PowerGraph d4 = build_dn(4);
    SimilarityReport r = similarity_classes(d4, {1, 2});
    REQUIRE(r.class_count() == 1);  // both see exactly {3} outside
    CHECK(r.classes[0] == std::vector<label_t>{1, 2});

    CHECK(similarity_classes(d4, {}).class_count() == 0);
    CHECK(similarity_classes(d4, d4.labels()).class_count() == 1);
    CHECK_THROWS_AS(similarity_classes(d4, {5}), std::invalid_argument);
}

TEST_CASE("similarity classes partition U and match the naive oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<label_t> labels;
        for (label_t v = 1; v <= 20; ++v)
            if (rng() % 2) labels.push_back(v);
        if (labels.empty()) continue;
        PowerGraph g = PowerGraph::from_labels(labels);
        std::vector<label_t> u;
        for (label_t v : labels)
            if (rng() % 2) u.push_back(v);

        SimilarityReport r = similarity_classes(g, u);
        std::vector<label_t> joined;
        label_t prev_front = 0;
        for (const auto& cls : r.classes) {
            REQUIRE(!cls.empty());
            CHECK(cls.front() > prev_front);  // classes ordered by smallest member
            prev_front = cls.front();
            for (label_t v : cls) joined.push_back(v);
        }
        std::sort(joined.begin(), joined.end());
        CHECK(joined == r.u);
        CHECK(r.class_count() == testutil::slow_mu(labels, {u.begin(), u.end()}));
    }
}

TEST_CASE("mu invariants") {
    PowerGraph g = build_dn(9);
    CHECK(similarity_classes(g, {}).class_count() == 0);
    CHECK(similarity_classes(g, g.labels()).class_count() == 1);
    std::vector<label_t> u{2, 5, 6, 9};
    CHECK(similarity_classes(g, u).class_count() <= u.size());
}

TEST_CASE("mu_exact on D_4") {
    MuResult r = mu_exact(build_dn(4));
    CHECK(r.value == 1);
    CHECK(r.witness == std::vector<label_t>{1, 2});
    CHECK(r.mode == MuResult::Mode::kExact);
    CHECK(r.violations.empty());
}

TEST_CASE("mu_exact degenerate cases") {
    MuResult one = mu_exact(build_dn(1));
    CHECK(one.value == 0);
    CHECK(one.witness.empty());
    CHECK(mu_exact(PowerGraph{}).value == 0);
}

TEST_CASE("mu_exact refuses above the cap") {
    CHECK_THROWS_WITH(mu_exact(build_dn(10), 9),
                      Catch::Matchers::ContainsSubstring("mu_sampled"));
}

TEST_CASE("mu(D_12) = 3") {
    std::vector<label_t> labels;
    for (label_t v = 1; v <= 12; ++v) labels.push_back(v);
    auto [value, witness] = testutil::slow_mu_exact(labels);
    REQUIRE(value == 3);  // independent brute force over all 2^12 subsets
    REQUIRE(witness == std::vector<label_t>{1, 2, 3, 4});

    MuResult r = mu_exact(build_dn(12));
    CHECK(r.value == 3);
    CHECK(r.witness == witness);
    // the witness attains the minimum
    CHECK(similarity_classes(build_dn(12), r.witness).class_count() == r.value);
}

TEST_CASE("sampled subsets of D_108 stay above the Theorem-2 bound for any seed") {
    PowerGraph g = build_dn(108);
    for (std::uint64_t seed : {1ull, 99ull, 123456789ull}) {
        MuResult r = mu_sampled(g, 300, seed);
        CHECK(r.value >= 2);
        CHECK(r.violations.empty());
    }
}

TEST_CASE("mu_exact matches the naive scan on random subgraphs of D_12") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<label_t> labels;
        for (label_t v = 1; v <= 12; ++v)
            if (rng() % 2) labels.push_back(v);
        PowerGraph g = PowerGraph::from_labels(labels);
        auto [value, witness] = testutil::slow_mu_exact(labels);
        MuResult r = mu_exact(g);
        REQUIRE(r.value == value);
        REQUIRE(r.witness == witness);
    }
}

TEST_CASE("mu_sampled is reproducible and bounded below by mu") {
    PowerGraph d12 = build_dn(12);
    MuResult exact = mu_exact(d12);
    MuResult a = mu_sampled(d12, 50, 42);
    MuResult b = mu_sampled(d12, 50, 42);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.value >= exact.value);
    CHECK(a.violations.empty());

    MuResult c = mu_sampled(d12, 50, 43);
    CHECK(c.value >= exact.value);
}

TEST_CASE("mu_sampled falls back to exhaustive enumeration on tiny graphs") {
    MuResult r = mu_sampled(build_dn(4), 1000, 7);
    CHECK(r.mode == MuResult::Mode::kExact);
    CHECK(r.value == 1);
    CHECK(r.witness == std::vector<label_t>{1, 2});

    MuResult single = mu_sampled(build_dn(4), 1, 7);
    CHECK(single.mode == MuResult::Mode::kSampled);
    CHECK(single.value >= 1);

    CHECK_THROWS_AS(mu_sampled(build_dn(4), 0, 7), std::invalid_argument);
}

TEST_CASE("admissible size range uses ceil and floor") {
    CHECK(admissible_size_range(1) == std::pair<std::size_t, std::size_t>{1, 0});  // empty
    CHECK(admissible_size_range(2) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(admissible_size_range(4) == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(admissible_size_range(12) == std::pair<std::size_t, std::size_t>{4, 8});
    CHECK(admissible_size_range(108) == std::pair<std::size_t, std::size_t>{36, 72});
}
