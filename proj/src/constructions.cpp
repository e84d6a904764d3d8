#include "satlab/constructions.hpp"

#include <bit>
#include <stdexcept>

#include "satlab/counting.hpp"

namespace satlab {

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

Graph make_ehm_join(int n, int s) {
    require(s >= 3 && n >= s, "EhmJoin needs n >= s >= 3");
    return join(complete_graph(s - 2), empty_graph(n - s + 2));
}

Graph make_book_join(int n, int s) {
    require(s >= 3 && n > s - 1, "BookJoin needs s >= 3 and n > s-1");
    Graph book = complete_graph(s - 1);
    book.remove_edge(s - 3, s - 2);
    return join(book, empty_graph(n - s + 1));
}

// W_s(m1, 1, m3, m4, 1): a 5-cycle a1..a5 with a1 blown up to an independent
// set of size m1, a3 to m3, a4 to m4, and the hub replaced by a clique of
// size s-3 joined to everything.  Labeling: hub clique 0..s-4, then I1, a2,
// I3, I4, a5.
Graph make_ws(int s, int m1, int m3, int m4) {
    require(s >= 3 && m1 >= 1 && m3 >= 1 && m4 >= 1, "Ws needs s >= 3 and m1,m3,m4 >= 1");
    int hub = s - 3;
    int n = hub + m1 + 1 + m3 + m4 + 1;
    require(n <= Graph::kMaxVertices, "Ws exceeds 64 vertices");
    Graph g(n);
    int i1 = hub;          // I1: [i1, i1+m1)
    int a2 = i1 + m1;      // single vertex
    int i3 = a2 + 1;       // I3: [i3, i3+m3)
    int i4 = i3 + m3;      // I4: [i4, i4+m4)
    int a5 = i4 + m4;      // single vertex

    for (int u = 0; u < hub; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    for (int x = i1; x < i1 + m1; ++x) {
        g.add_edge(x, a2);
        g.add_edge(x, a5);
    }
    for (int x = i3; x < i3 + m3; ++x) {
        g.add_edge(a2, x);
        for (int y = i4; y < i4 + m4; ++y) g.add_edge(x, y);
    }
    for (int y = i4; y < i4 + m4; ++y) g.add_edge(y, a5);
    return g;
}

// Shared builder for G(4k) and G(4k+2): vertex v of degree 2 with neighbors
// u1, u2; u1 joined to X, u2 joined to A; X joined to A and Y; A joined to B.
// Labeling: v=0, u1=1, u2=2, then X, Y, A, B blocks in that order.
Graph make_g4k_shape(int x_size, int a_size, int b_size) {
    int n = 3 + x_size + x_size + a_size + b_size;  // |Y| = |X|
    require(n <= Graph::kMaxVertices, "G(4k) family exceeds 64 vertices");
    Graph g(n);
    int x0 = 3;
    int y0 = x0 + x_size;
    int a0 = y0 + x_size;
    int b0 = a0 + a_size;
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    for (int x = x0; x < x0 + x_size; ++x) {
        g.add_edge(1, x);
        for (int y = y0; y < y0 + x_size; ++y) g.add_edge(x, y);
        for (int a = a0; a < a0 + a_size; ++a) g.add_edge(x, a);
    }
    for (int a = a0; a < a0 + a_size; ++a) {
        g.add_edge(2, a);
        for (int b = b0; b < b0 + b_size; ++b) g.add_edge(a, b);
    }
    return g;
}

Graph make_g4k(int k) {
    require(k >= 2, "G4k needs k >= 2");
    return make_g4k_shape(k, k, k - 1);
}

Graph make_g4k2(int k) {
    require(k >= 1, "G4k2 needs k >= 1");
    if (k == 1) {
        // The degree-2 shape below is not C6-saturated at k = 1 (the nonedges
        // v y1 and u2 x1 create no 6-cycle), and exhaustive search shows no
        // 8-vertex triangle-free C6-saturated graph exists at all.  The
        // smallest ones have nine vertices; this is the canonically first.
        Graph g(9);
        const int edges[12][2] = {{0, 5}, {0, 6}, {1, 6}, {1, 8}, {2, 6}, {2, 8},
                                  {3, 7}, {3, 8}, {4, 7}, {4, 8}, {5, 7}, {6, 7}};
        for (const auto& e : edges) g.add_edge(e[0], e[1]);
        return g;
    }
    return make_g4k_shape(k, k + 1, k);
}

Graph make_friendship_like(int m, int r) {
    require(m >= 1 && r >= 2, "FriendshipLike needs m >= 1 and r >= 2");
    std::vector<std::pair<Graph, int>> parts(static_cast<std::size_t>(m),
                                             {complete_graph(r), 0});
    return identify_vertices(parts);
}

// n - 1 = q(k-2) + r with 0 <= r <= k-3; q copies of K_{k-2} and one K_r all
// joined to the apex.
Graph make_apex_clique_fan(int n, int k) {
    require(k >= 4 && n >= k - 1, "ApexCliqueFan needs k >= 4 and n >= k-1");
    int q = (n - 1) / (k - 2);
    int r = (n - 1) % (k - 2);
    std::vector<std::pair<Graph, int>> parts;
    for (int i = 0; i < q; ++i) parts.push_back({complete_graph(k - 1), 0});
    if (r > 0) parts.push_back({complete_graph(r + 1), 0});
    if (parts.empty()) parts.push_back({complete_graph(1), 0});
    return identify_vertices(parts);
}

Graph make_two_apex_clique(int n, int k) {
    require(k >= 3 && n >= 2 * k - 2, "TwoApexClique needs k >= 3 and n >= 2k-2");
    require(n <= Graph::kMaxVertices, "TwoApexClique exceeds 64 vertices");
    Graph g(n);
    int c = 2 * k - 2;
    for (int u = 0; u < c; ++u)
        for (int v = u + 1; v < c; ++v) g.add_edge(u, v);
    for (int y = c; y < n; ++y) {
        g.add_edge(0, y);  // x
        g.add_edge(1, y);  // z
    }
    return g;
}

Graph make_star_matching(int n) {
    require(n >= 2, "StarMatching needs n >= 2");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    for (int v = 1; v + 1 < n; v += 2) g.add_edge(v, v + 1);
    return g;
}

}  // namespace

Graph make(const FamilyParams& p) {
    switch (p.family) {
        case Family::EhmJoin: return make_ehm_join(p.n, p.s);
        case Family::BookJoin: return make_book_join(p.n, p.s);
        case Family::Ws: return make_ws(p.s, p.m1, p.m3, p.m4);
        case Family::G4k: return make_g4k(p.k);
        case Family::G4k2: return make_g4k2(p.k);
        case Family::CompleteBipartite: return complete_bipartite(p.a, p.b);
        case Family::FriendshipLike: return make_friendship_like(p.m, p.r);
        case Family::ApexCliqueFan: return make_apex_clique_fan(p.n, p.k);
        case Family::TwoApexClique: return make_two_apex_clique(p.n, p.k);
        case Family::StarMatching: return make_star_matching(p.n);
    }
    throw std::logic_error("unreachable");
}

FamilyParams ehm_join(int n, int s) { return {.family = Family::EhmJoin, .n = n, .s = s}; }
FamilyParams book_join(int n, int s) { return {.family = Family::BookJoin, .n = n, .s = s}; }
FamilyParams ws(int s, int m1, int m3, int m4) {
    return {.family = Family::Ws, .s = s, .m1 = m1, .m3 = m3, .m4 = m4};
}
FamilyParams g4k(int k) { return {.family = Family::G4k, .k = k}; }
FamilyParams g4k2(int k) { return {.family = Family::G4k2, .k = k}; }
FamilyParams friendship_like(int m, int r) {
    return {.family = Family::FriendshipLike, .r = r, .m = m};
}
FamilyParams apex_clique_fan(int n, int k) {
    return {.family = Family::ApexCliqueFan, .n = n, .k = k};
}
FamilyParams two_apex_clique(int n, int k) {
    return {.family = Family::TwoApexClique, .n = n, .k = k};
}
FamilyParams star_matching(int n) { return {.family = Family::StarMatching, .n = n}; }

int independence_number(const Graph& g) {
    // Max independent set = max clique of the complement; branch and bound.
    Graph c = g.complement();
    int best = 0;
    auto rec = [&](auto&& self, std::uint64_t candidates, int size) -> void {
        if (size + std::popcount(candidates) <= best) return;
        if (candidates == 0) {
            best = std::max(best, size);
            return;
        }
        std::uint64_t work = candidates;
        while (work) {
            int v = std::countr_zero(work);
            work &= work - 1;
            if (size + std::popcount(work) + 1 <= best) return;
            self(self, candidates & c.neighbors(v) & ~((std::uint64_t(2) << v) - 1), size + 1);
        }
        best = std::max(best, size);
    };
    std::uint64_t all = g.order() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.order()) - 1;
    rec(rec, all, 0);
    return best;
}

Graph kaszonyi_tuza(int n, const Graph& f) {
    require(f.edge_count() >= 1, "kaszonyi_tuza: target must have an edge");
    require(n >= f.order(), "kaszonyi_tuza: n too small");
    int clique_size = f.order() - independence_number(f) - 1;
    Graph g = join(complete_graph(clique_size), empty_graph(n - clique_size));
    Pattern target = Pattern::explicit_graph(f);
    for (int u = clique_size; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
            if (has_copy(g, target)) g.remove_edge(u, v);
        }
    }
    return g;
}

namespace {

Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

// Three concentric heptagons with skips 1, 2, 3 plus seven hub vertices each
// joined to one vertex of every heptagon.
Graph make_coxeter() {
    Graph g(28);
    for (int i = 0; i < 7; ++i) {
        g.add_edge(i, (i + 1) % 7);
        g.add_edge(7 + i, 7 + (i + 2) % 7);
        g.add_edge(14 + i, 14 + (i + 3) % 7);
        g.add_edge(21 + i, i);
        g.add_edge(21 + i, 7 + i);
        g.add_edge(21 + i, 14 + i);
    }
    return g;
}

// Pentagons P_h and pentagrams Q_i with p(h,j) ~ q(i, h*i + j mod 5).
Graph make_hoffman_singleton() {
    Graph g(50);
    auto p = [](int h, int j) { return 5 * h + j; };
    auto q = [](int i, int j) { return 25 + 5 * i + j; };
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) {
            g.add_edge(p(h, j), p(h, (j + 1) % 5));
            g.add_edge(q(h, j), q(h, (j + 2) % 5));
        }
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) g.add_edge(p(h, j), q(i, (h * i + j) % 5));
    return g;
}

// Transcription of the 11-vertex C6-builder figure; vertices indexed in the
// order the figure lists them, distinguished vertex 5.
Graph make_c6_builder11() {
    Graph g(11);
    const int edges[15][2] = {{0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 5}, {2, 6}, {4, 5},
                              {4, 7}, {5, 6}, {5, 9}, {6, 10}, {7, 8}, {8, 9}, {9, 10}};
    for (const auto& e : edges) g.add_edge(e[0], e[1]);
    return g;
}

}  // namespace

Graph named_graph(NamedGraph name) {
    switch (name) {
        case NamedGraph::Petersen: return make_petersen();
        case NamedGraph::C5: return cycle_graph(5);
        case NamedGraph::Coxeter: return make_coxeter();
        case NamedGraph::HoffmanSingleton: return make_hoffman_singleton();
        case NamedGraph::C6Builder11: return make_c6_builder11();
    }
    throw std::logic_error("unreachable");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::EhmJoin: return "EhmJoin";
        case Family::BookJoin: return "BookJoin";
        case Family::Ws: return "Ws";
        case Family::G4k: return "G4k";
        case Family::G4k2: return "G4k2";
        case Family::CompleteBipartite: return "CompleteBipartite";
        case Family::FriendshipLike: return "FriendshipLike";
        case Family::ApexCliqueFan: return "ApexCliqueFan";
        case Family::TwoApexClique: return "TwoApexClique";
        case Family::StarMatching: return "StarMatching";
    }
    throw std::logic_error("unreachable");
}

}  // namespace satlab
