#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "satlab/canonical.hpp"
#include "satlab/constructions.hpp"
#include "satlab/counting.hpp"
#include "satlab/graph.hpp"

using namespace satlab;

namespace {

Graph random_graph(std::mt19937& rng, int n, int denom = 2) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % denom) == 0) g.add_edge(u, v);
    return g;
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(rng, n);
        std::string form = canonical_form(g);
        for (int p = 0; p < 50; ++p) {
            Graph h = apply_permutation(g, random_permutation(rng, n));
            CHECK(canonical_form(h) == form);
        }
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    CHECK(canonical_form(path_graph(4)) != canonical_form(cycle_graph(4)));
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(canonical_form(star) != canonical_form(path_graph(4)));
    CHECK(!is_isomorphic(complete_bipartite(3, 3), cycle_graph(6)));
    CHECK(is_isomorphic(complete_bipartite(2, 2), cycle_graph(4)));
}

TEST_CASE("automorphism group orders of standard graphs") {
    CHECK(automorphism_group(complete_graph(4)).size() == 24);
    CHECK(automorphism_group(cycle_graph(5)).size() == 10);
    CHECK(automorphism_group(cycle_graph(6)).size() == 12);
    CHECK(automorphism_group(path_graph(4)).size() == 2);
    CHECK(automorphism_group(complete_bipartite(3, 3)).size() == 72);
    CHECK(automorphism_group(named_graph(NamedGraph::Petersen)).size() == 120);
}

TEST_CASE("group closure matches the embedding-count oracle") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6));
        CHECK(static_cast<Count>(automorphism_group(g).size()) == automorphism_count(g));
    }
}

TEST_CASE("vertex orbits") {
    std::vector<int> orb = vertex_orbits(cycle_graph(7));
    for (int v = 0; v < 7; ++v) CHECK(orb[v] == 0);

    orb = vertex_orbits(path_graph(3));
    CHECK(orb[0] == 0);
    CHECK(orb[2] == 0);
    CHECK(orb[1] == 1);

    Graph g = join(complete_graph(2), empty_graph(3));
    orb = vertex_orbits(g);
    CHECK(orb[0] == orb[1]);
    CHECK(orb[2] == orb[3]);
    CHECK(orb[0] != orb[2]);
}

TEST_CASE("automorphism_maps respects orbits") {
    Graph g = path_graph(4);
    CHECK(automorphism_maps(g, 0, 3));
    CHECK(automorphism_maps(g, 1, 2));
    CHECK(!automorphism_maps(g, 0, 1));
}
