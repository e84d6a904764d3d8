#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satlab/builders.hpp"
#include "satlab/canonical.hpp"
#include "satlab/constructions.hpp"
#include "satlab/counting.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"
#include "satlab/saturation.hpp"

using namespace satlab;

TEST_CASE("the 11-vertex graph is a C6-builder at its distinguished vertex") {
    Graph b = named_graph(NamedGraph::C6Builder11);
    auto spec = verify_builder(b, kC6Builder11Distinguished, 6);
    CHECK(spec.has_value());
}

TEST_CASE("non-builders are rejected") {
    // K2 + Kbar4 is K4-saturated, not C6-saturated.
    CHECK(!verify_builder(make(ehm_join(6, 4)), 0, 6).has_value());
    CHECK_THROWS(verify_builder(cycle_graph(5), 9, 6));
    CHECK_THROWS(verify_builder(cycle_graph(5), 0, 4));
}

TEST_CASE("path length profiles on simple shapes") {
    // Star with the center distinguished: every leaf reaches it only by one edge.
    Graph star(5);
    for (int v = 1; v < 5; ++v) star.add_edge(0, v);
    PathLengthProfile p = path_length_profile({star, 0, 6});
    for (int v = 1; v < 5; ++v) CHECK(p.lengths[v] == 0b10);
    CHECK(p.lengths[0] == 0b1);

    // Path with a distinguished endpoint: single growing lengths.
    p = path_length_profile({path_graph(4), 0, 6});
    CHECK(p.lengths[1] == 0b10);
    CHECK(p.lengths[2] == 0b100);
    CHECK(p.lengths[3] == 0b1000);

    // A cycle offers both ways around.
    p = path_length_profile({cycle_graph(5), 0, 6});
    CHECK(p.lengths[1] == ((1u << 1) | (1u << 4)));
    CHECK(p.lengths[2] == ((1u << 2) | (1u << 3)));
}

TEST_CASE("builder profiles hit every needed length") {
    BuilderSpec b{named_graph(NamedGraph::C6Builder11), kC6Builder11Distinguished, 6};
    PathLengthProfile p = path_length_profile(b);
    std::uint64_t window = 0b111110;  // lengths 1..5
    for (int v = 0; v < 11; ++v) {
        if (v == b.distinguished) continue;
        CHECK((p.lengths[v] & window) != 0);
    }
}

TEST_CASE("the builder is self-compatible") {
    BuilderSpec b{named_graph(NamedGraph::C6Builder11), kC6Builder11Distinguished, 6};
    CHECK(are_compatible(b, b));
}

TEST_CASE("a profile stuck at length 1 is incompatible with itself") {
    Graph star(4);
    for (int v = 1; v < 4; ++v) star.add_edge(0, v);
    BuilderSpec s{star, 0, 6};  // not a verified builder; profiles only
    CHECK(!are_compatible(s, s));
    BuilderSpec b{named_graph(NamedGraph::C6Builder11), kC6Builder11Distinguished, 6};
    CHECK_THROWS(are_compatible(b, BuilderSpec{star, 0, 7}));
}

TEST_CASE("gluing the builder") {
    BuilderSpec b{named_graph(NamedGraph::C6Builder11), kC6Builder11Distinguished, 6};
    Graph once = glue(b, 1);
    CHECK(is_isomorphic(once, b.graph));
    for (int t = 1; t <= 3; ++t) {
        Graph g = glue(b, t);
        CHECK(g.order() == 10 * t + 1);
        CHECK(is_saturated_quick(g, Pattern::cycle(6)));
        CHECK(count_copies(g, Pattern::cycle(4)).copies == 2 * t);
    }
    CHECK_THROWS(glue(b, 0));
    CHECK_THROWS(glue(b, 7));  // 71 vertices
}

TEST_CASE("compatible pairs glue to saturated graphs") {
    BuilderSpec b{named_graph(NamedGraph::C6Builder11), kC6Builder11Distinguished, 6};
    REQUIRE(are_compatible(b, b));
    Graph g = glue(b, 2, &b, 1);
    CHECK(g.order() == 31);
    CHECK(is_saturated_quick(g, Pattern::cycle(6)));
}

TEST_CASE("size coverage") {
    SizeCoverage cov = size_coverage(11, 12, 1320);
    REQUIRE(cov.has_threshold);
    CHECK(cov.threshold == 111);

    cov = size_coverage(1, 5, 50);
    REQUIRE(cov.has_threshold);
    CHECK(cov.threshold == 1);

    cov = size_coverage(2, 4, 100);
    CHECK(!cov.has_threshold);
    for (int n : cov.representable) CHECK(n % 2 == 1);
}

TEST_CASE("coverage threshold agrees with a brute scan") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 5}, {4, 7}, {5, 6}}) {
        int limit = 10 * a * b;
        SizeCoverage cov = size_coverage(a, b, limit);
        REQUIRE(cov.has_threshold);
        std::vector<char> hit(limit + 1, 0);
        for (int x : cov.representable) hit[x] = 1;
        for (int n = cov.threshold; n <= limit; ++n) CHECK(hit[n]);
        CHECK(!hit[cov.threshold - 1]);
    }
}

TEST_CASE("builder JSON record") {
    BuilderSpec b{named_graph(NamedGraph::C6Builder11), kC6Builder11Distinguished, 6};
    std::string j = builder_to_json(b, true);
    CHECK(j.find("\"graph6\"") != std::string::npos);
    CHECK(j.find("\"distinguished\":5") != std::string::npos);
    CHECK(j.find("\"k\":6") != std::string::npos);
    CHECK(j.find("\"verified\":true") != std::string::npos);
}
