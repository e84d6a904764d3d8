#pragma once

#include <string>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

// Canonical labeling by equitable-partition refinement plus backtracking over
// the vertices of the first non-singleton cell.  Automorphisms discovered at
// equal leaves prune branches that fix the individualized prefix.
struct CanonicalResult {
    // labeling[v] = canonical position of vertex v.
    std::vector<int> labeling;
    // Byte string identical across isomorphic graphs.
    std::string form;
    // Automorphisms discovered during the search.  These generate Aut(G).
    std::vector<std::vector<int>> generators;
};

CanonicalResult canonical_labeling(const Graph& g);

std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g1, const Graph& g2);

// Relabel: vertex v of g becomes perm[v].
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

// Explicit automorphism group, by closure over the discovered generators.
std::vector<std::vector<int>> automorphism_group(const Graph& g);

// True iff some automorphism of g maps a to b.
bool automorphism_maps(const Graph& g, int a, int b);

// Orbits of Aut(g) on vertices, as orbit id per vertex (smallest member).
std::vector<int> vertex_orbits(const Graph& g);

}  // namespace satlab
