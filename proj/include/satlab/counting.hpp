#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

using Count = long long;

struct CountReport {
    Count embeddings = 0;     // injective edge-preserving maps, labeled
    Count automorphisms = 1;  // |Aut(H)|
    Count copies = 0;         // embeddings / automorphisms
};

// Number of copies (subgraphs, not induced) of the pattern in g.
// Fast paths: cliques by neighbor-set-intersection pivoting, cycles by rooted
// DFS canonicalized at the smallest vertex and lexicographically smaller
// direction.  Explicit patterns go through embedding backtracking.
CountReport count_copies(const Graph& g, const Pattern& p);

// Injective maps V(h) -> V(g) preserving the edges of h.
Count count_embeddings(const Graph& g, const Graph& h);

// |Aut(h)| = count_embeddings(h, h).
Count automorphism_count(const Graph& h);

// True iff g contains at least one copy of the pattern (early exit).
bool has_copy(const Graph& g, const Pattern& p);

// i_3(G): 3-subsets with no internal edge (triangles of the complement).
Count count_independent_triples(const Graph& g);

// f_{h1,h2}(H): copies of h in K_s with the nonedge pair (h1, h2) pinned onto
// a fixed ordered vertex pair of K_s.
Count rooted_pair_count(const Graph& h, int h1, int h2, int s);

// First embedding of h into g (lexicographic DFS) honoring the given
// pattern-vertex -> host-vertex pins, or nullopt.  image[i] = host vertex of
// pattern vertex i.
std::optional<std::vector<int>> find_embedding(const Graph& g, const Graph& h,
                                               const std::vector<std::pair<int, int>>& pins);

// True iff the vertices of `candidates` contain a clique of the given size.
bool has_clique_in(const Graph& g, std::uint64_t candidates, int size);

Count binomial(long long n, long long k);

}  // namespace satlab
