#pragma once

#include <string>

#include "satlab/graph.hpp"

namespace satlab {

// Explicit graph families, each with a fixed documented labeling so that
// certificates are reproducible.
enum class Family {
    EhmJoin,            // K_{s-2} + Kbar_{n-s+2}; clique vertices 0..s-3
    BookJoin,           // (K_{s-1} - e) + Kbar_{n-s+1}; missing edge {s-3, s-2}
    Ws,                 // wheel-like W_s(m1,1,m3,m4,1); center clique 0..s-4
    G4k,                // triangle-free C_{4k}-saturated graph on 4k+2 vertices
    G4k2,               // triangle-free C_{4k+2}-saturated graph on 4k+4 vertices
                        // (the k=1 base case needs 9 vertices; see make_g4k2)
    CompleteBipartite,  // parts 0..a-1 and a..a+b-1
    FriendshipLike,     // m copies of K_r identified at hub vertex 0
    ApexCliqueFan,      // apex 0 joined to q copies of K_{k-2} and one K_r
    TwoApexClique,      // clique 0..2k-3 with apexes x=0, z=1; pendant y_i's
    StarMatching,       // center 0, matching (1,2), (3,4), ... in its neighborhood
};

struct FamilyParams {
    Family family = Family::EhmJoin;
    // Named per family: EhmJoin/BookJoin(n,s); Ws(s,m1,m3,m4); G4k(k);
    // G4k2(k); CompleteBipartite(a,b); FriendshipLike(m,r); ApexCliqueFan(n,k);
    // TwoApexClique(n,k); StarMatching(n).
    int n = 0, s = 0, k = 0, r = 0, m = 0;
    int a = 0, b = 0;
    int m1 = 0, m3 = 0, m4 = 0;
};

Graph make(const FamilyParams& params);

FamilyParams ehm_join(int n, int s);
FamilyParams book_join(int n, int s);
FamilyParams ws(int s, int m1, int m3, int m4);
FamilyParams g4k(int k);
FamilyParams g4k2(int k);
FamilyParams friendship_like(int m, int r);
FamilyParams apex_clique_fan(int n, int k);
FamilyParams two_apex_clique(int n, int k);
FamilyParams star_matching(int n);

// Kaszonyi-Tuza construction for a target graph f: clique of size
// |V(f)| - alpha(f) - 1 joined to an independent set, then edges added
// greedily inside the independent set in lexicographic order, each kept only
// if no copy of f appears.  The result is f-saturated.
Graph kaszonyi_tuza(int n, const Graph& f);

// Exact independence number by branch and bound (f small).
int independence_number(const Graph& g);

enum class NamedGraph { Petersen, C5, Coxeter, HoffmanSingleton, C6Builder11 };

Graph named_graph(NamedGraph name);

// Distinguished vertex of the 11-vertex C6-builder transcription.
inline constexpr int kC6Builder11Distinguished = 5;

std::string family_name(Family f);

}  // namespace satlab
