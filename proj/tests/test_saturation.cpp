#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satlab/constructions.hpp"
#include "satlab/counting.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"
#include "satlab/saturation.hpp"

using namespace satlab;

TEST_CASE("freeness") {
    CHECK(is_free(complete_bipartite(4, 4), Pattern::clique(3)));
    CHECK(!is_free(complete_graph(4), Pattern::clique(3)));
    CHECK(is_free(named_graph(NamedGraph::Petersen), Pattern::cycle(4)));
    CHECK(!is_free(cycle_graph(6), Pattern::cycle(6)));
}

TEST_CASE("clique saturation of the join construction") {
    for (int s = 3; s <= 5; ++s) {
        for (int n = s; n <= 10; ++n) {
            Graph g = make(ehm_join(n, s));
            CHECK(is_saturated_quick(g, Pattern::clique(s)));
            CHECK(!is_saturated_quick(g, Pattern::clique(s + 1)));
        }
    }
}

TEST_CASE("cycle saturation basics") {
    // C5 is C4-saturated: C4-free, and every chord closes a triangle+path
    // giving a 4-cycle.
    CHECK(is_saturated_quick(cycle_graph(5), Pattern::cycle(4)));
    CHECK(is_saturated_quick(named_graph(NamedGraph::Petersen), Pattern::cycle(4)));
    // C6 itself is not C4-saturated: a long chord creates only C3+C5 splits.
    CHECK(!is_saturated_quick(cycle_graph(6), Pattern::cycle(4)));
    // Complete bipartite graphs are odd-cycle-saturated.
    CHECK(is_saturated_quick(complete_bipartite(4, 5), Pattern::cycle(5)));
    CHECK(is_saturated_quick(complete_bipartite(5, 5), Pattern::cycle(7)));
}

TEST_CASE("creates_through returns a genuine copy") {
    Graph g = cycle_graph(5);
    auto copy = creates_through(g, 0, 2, Pattern::cycle(4));
    REQUIRE(copy.has_value());
    CHECK(copy->size() == 4);
    // The returned vertices trace a 4-cycle in g + {0,2}.
    Graph plus = g;
    plus.add_edge(0, 2);
    for (int i = 0; i < 4; ++i) CHECK(plus.has_edge((*copy)[i], (*copy)[(i + 1) % 4]));
}

TEST_CASE("certificates verify and round-trip through JSON") {
    Graph g = make(ehm_join(7, 4));
    SaturationCheck check = is_saturated(g, Pattern::clique(4));
    REQUIRE(check.saturated);
    REQUIRE(check.certificate.has_value());
    CHECK(check.certificate->witnesses.size() == g.nonedges().size());
    CHECK(verify_certificate(g, *check.certificate));

    SaturationCertificate parsed = certificate_from_json(check.certificate->to_json());
    CHECK(verify_certificate(g, parsed));

    // Tampering breaks verification.
    parsed.witnesses[0].copy[0] = (parsed.witnesses[0].copy[0] + 1) % g.order();
    CHECK(!verify_certificate(g, parsed));
}

TEST_CASE("certificate rejected on the wrong graph") {
    Graph g = make(ehm_join(7, 4));
    SaturationCheck check = is_saturated(g, Pattern::clique(4));
    REQUIRE(check.saturated);
    CHECK(!verify_certificate(make(ehm_join(8, 4)), *check.certificate));
}

TEST_CASE("non-saturated graphs fail") {
    // Missing edges that create nothing: empty graph is trivially K3-free but
    // not saturated.
    CHECK(!is_saturated_quick(empty_graph(5), Pattern::clique(3)));
    CHECK(!is_saturated(empty_graph(5), Pattern::clique(3)).saturated);
    // A graph containing the target is not saturated either.
    CHECK(!is_saturated_quick(complete_graph(5), Pattern::clique(3)));
}

TEST_CASE("quick and certified saturation agree") {
    std::vector<std::pair<Graph, Pattern>> cases = {
        {cycle_graph(5), Pattern::cycle(4)},
        {cycle_graph(6), Pattern::cycle(4)},
        {make(ehm_join(8, 4)), Pattern::clique(4)},
        {complete_bipartite(3, 4), Pattern::cycle(5)},
        {path_graph(5), Pattern::cycle(4)},
        {named_graph(NamedGraph::Petersen), Pattern::cycle(4)},
    };
    for (const auto& [g, p] : cases) CHECK(is_saturated_quick(g, p) == is_saturated(g, p).saturated);
}

TEST_CASE("moore classification") {
    CHECK(moore_check(named_graph(NamedGraph::Petersen)) == MooreClass::Moore);
    CHECK(moore_check(cycle_graph(5)) == MooreClass::Moore);
    CHECK(moore_check(named_graph(NamedGraph::HoffmanSingleton)) == MooreClass::Moore);
    CHECK(moore_check(complete_graph(4)) == MooreClass::NotApplicable);
}

TEST_CASE("hoffman-singleton sanity") {
    Graph hs = named_graph(NamedGraph::HoffmanSingleton);
    VertexMetrics m = metrics(hs);
    CHECK(hs.order() == 50);
    CHECK(hs.edge_count() == 175);
    CHECK(m.is_regular);
    CHECK(m.max_degree == 7);
    CHECK(m.girth == 5);
    CHECK(m.diameter == 2);
}
