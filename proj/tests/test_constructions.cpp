#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satlab/canonical.hpp"
#include "satlab/constructions.hpp"
#include "satlab/counting.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"
#include "satlab/saturation.hpp"

using namespace satlab;

TEST_CASE("join family sizes and edge counts") {
    Graph g = make(ehm_join(10, 4));
    CHECK(g.order() == 10);
    // (s-2)(n-s+2) + C(s-2,2) edges.
    CHECK(g.edge_count() == 2 * 8 + 1);
    CHECK(count_copies(g, Pattern::clique(3)).copies == 8);  // n - 2

    Graph b = make(book_join(10, 5));
    CHECK(b.order() == 10);
    CHECK(is_saturated_quick(b, Pattern::clique(5)));
}

TEST_CASE("Ws graphs are K_s-saturated with minimum degree s-1") {
    for (int s : {4, 5}) {
        Graph g = make(ws(s, 2, 2, 3));
        CHECK(is_saturated_quick(g, Pattern::clique(s)));
        CHECK(metrics(g).min_degree == s - 1);
    }
}

TEST_CASE("G4k family is triangle-free and cycle-saturated") {
    Graph g8 = make(g4k(2));  // 10 vertices, C8
    CHECK(g8.order() == 10);
    CHECK(g8.edge_count() == 3 * 4 + 2 + 2);  // 3k^2 + k + 2 with k = 2
    CHECK(is_free(g8, Pattern::clique(3)));
    CHECK(is_saturated_quick(g8, Pattern::cycle(8)));

    // The k=1 member is the repaired 9-vertex base case: the natural degree-2
    // shape on 8 vertices is not C6-saturated, and no 8-vertex triangle-free
    // C6-saturated graph exists (exhaustive check).
    Graph g6 = make(g4k2(1));
    CHECK(g6.order() == 9);
    CHECK(is_free(g6, Pattern::clique(3)));
    CHECK(is_saturated_quick(g6, Pattern::cycle(6)));

    Graph g10 = make(g4k2(2));  // 12 vertices, C10
    CHECK(g10.order() == 12);
    CHECK(is_free(g10, Pattern::clique(3)));
    CHECK(is_saturated_quick(g10, Pattern::cycle(10)));
}

TEST_CASE("friendship-like identification") {
    Graph g = make(friendship_like(3, 3));  // 3 triangles sharing a vertex
    CHECK(g.order() == 7);
    CHECK(g.edge_count() == 9);
    CHECK(g.degree(0) == 6);
    CHECK(count_copies(g, Pattern::clique(3)).copies == 3);
}

TEST_CASE("star-matching graph is (K4-e)-saturated and C4-free") {
    for (int n = 5; n <= 13; ++n) {
        Graph g = make(star_matching(n));
        CHECK(is_free(g, Pattern::cycle(4)));
        CHECK(is_saturated_quick(g, Pattern::clique_minus_edge(4)));
    }
}

TEST_CASE("two-apex clique shape") {
    Graph g = make(two_apex_clique(8, 3));
    CHECK(g.order() == 8);
    // Clique 0..3; vertices 4..7 hang from both apexes 0 and 1.
    CHECK(g.degree(0) == 7);
    CHECK(g.degree(1) == 7);
    CHECK(g.degree(2) == 3);
    CHECK(g.degree(4) == 2);
}

TEST_CASE("independence number") {
    CHECK(independence_number(complete_graph(5)) == 1);
    CHECK(independence_number(empty_graph(6)) == 6);
    CHECK(independence_number(cycle_graph(7)) == 3);
    CHECK(independence_number(named_graph(NamedGraph::Petersen)) == 4);
    CHECK(independence_number(complete_bipartite(3, 5)) == 5);
}

TEST_CASE("greedy construction is saturated for several targets") {
    for (const Graph& f : {complete_graph(3), complete_graph(4), path_graph(3)}) {
        for (int n : {6, 9, 12}) {
            Graph g = kaszonyi_tuza(n, f);
            CHECK(is_saturated_quick(g, Pattern::explicit_graph(f)));
        }
    }
}

TEST_CASE("greedy construction for K_s reproduces the join graph") {
    for (int s : {3, 4, 5}) {
        for (int n : {8, 10}) {
            CHECK(is_isomorphic(kaszonyi_tuza(n, complete_graph(s)), make(ehm_join(n, s))));
        }
    }
}

TEST_CASE("named graphs have the right invariants") {
    Graph petersen = named_graph(NamedGraph::Petersen);
    CHECK(petersen.order() == 10);
    CHECK(petersen.edge_count() == 15);
    CHECK(metrics(petersen).girth == 5);
    CHECK(metrics(petersen).diameter == 2);

    Graph coxeter = named_graph(NamedGraph::Coxeter);
    VertexMetrics cm = metrics(coxeter);
    CHECK(coxeter.order() == 28);
    CHECK(coxeter.edge_count() == 42);
    CHECK(cm.is_regular);
    CHECK(cm.max_degree == 3);
    CHECK(cm.girth == 7);

    CHECK(named_graph(NamedGraph::C5) == cycle_graph(5));
}

TEST_CASE("11-vertex C6 builder transcription") {
    Graph b = named_graph(NamedGraph::C6Builder11);
    CHECK(b.order() == 11);
    CHECK(b.edge_count() == 15);
    CHECK(count_copies(b, Pattern::cycle(4)).copies == 2);
    CHECK(is_saturated_quick(b, Pattern::cycle(6)));
}
