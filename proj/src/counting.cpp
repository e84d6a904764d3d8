#include "satlab/counting.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace satlab {

namespace {

using Mask = std::uint64_t;

Count clique_count_rec(const Graph& g, Mask candidates, int need) {
    if (need == 0) return 1;
    if (std::popcount(candidates) < need) return 0;
    Count total = 0;
    Mask work = candidates;
    while (work) {
        int v = std::countr_zero(work);
        work &= work - 1;
        // Only extend with vertices above v so each clique is counted once.
        total += clique_count_rec(g, candidates & g.neighbors(v) & ~((Mask(2) << v) - 1), need - 1);
    }
    return total;
}

bool clique_exists_rec(const Graph& g, Mask candidates, int need) {
    if (need == 0) return true;
    if (std::popcount(candidates) < need) return false;
    Mask work = candidates;
    while (work) {
        int v = std::countr_zero(work);
        work &= work - 1;
        if (clique_exists_rec(g, candidates & g.neighbors(v) & ~((Mask(2) << v) - 1), need - 1))
            return true;
    }
    return false;
}

// Cycle counting: every cycle is rooted at its minimum vertex and traversed
// in the direction whose second vertex is the smaller neighbor, so each
// cycle is seen exactly once.
struct CycleCounter {
    const Graph& g;
    int length;
    bool early_exit;
    unsigned __int128 total = 0;
    bool found = false;
    std::vector<int> path;
    Mask used = 0;
    Mask above_root = 0;  // vertices strictly greater than the current root

    CycleCounter(const Graph& graph, int l, bool exit_on_first)
        : g(graph), length(l), early_exit(exit_on_first) {}

    void dfs(int v, int depth) {
        if (depth == length) {
            if (g.has_edge(v, path[0]) && path[1] < path[static_cast<std::size_t>(length - 1)]) {
                ++total;
                found = true;
            }
            return;
        }
        Mask nb = g.neighbors(v) & ~used & above_root;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            path[static_cast<std::size_t>(depth)] = w;
            used |= Mask(1) << w;
            dfs(w, depth + 1);
            used &= ~(Mask(1) << w);
            if (found && early_exit) return;
        }
    }

    void run() {
        path.assign(static_cast<std::size_t>(length), 0);
        for (int root = 0; root + length <= g.order(); ++root) {
            path[0] = root;
            used = Mask(1) << root;
            above_root = root == 63 ? 0 : ~((Mask(2) << root) - 1);
            dfs(root, 1);
            used = 0;
            if (found && early_exit) return;
        }
    }
};

Count count_cycles(const Graph& g, int length) {
    if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
    CycleCounter counter(g, length, false);
    counter.run();
    if (counter.total > static_cast<unsigned __int128>(0x7fffffffffffffffLL))
        throw std::overflow_error("cycle count overflows 64 bits");
    return static_cast<Count>(counter.total);
}

bool cycle_exists(const Graph& g, int length) {
    if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
    CycleCounter counter(g, length, true);
    counter.run();
    return counter.found;
}

// Pattern vertex order for embedding backtracking: BFS-like, every vertex
// after the first in its component touches an already-placed vertex.
std::vector<int> embedding_order(const Graph& h) {
    int m = h.order();
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(m), false);
    while (static_cast<int>(order.size()) < m) {
        int next = -1;
        for (int v = 0; v < m && next < 0; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            for (int u : order) {
                if (h.has_edge(u, v)) {
                    next = v;
                    break;
                }
            }
        }
        if (next < 0)
            for (int v = 0; v < m; ++v)
                if (!placed[static_cast<std::size_t>(v)]) {
                    next = v;
                    break;
                }
        placed[static_cast<std::size_t>(next)] = true;
        order.push_back(next);
    }
    return order;
}

struct EmbeddingCounter {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;
    std::vector<int> image;       // pattern vertex -> host vertex (or -1)
    Mask used = 0;
    Count total = 0;
    bool early_exit;
    bool found = false;

    EmbeddingCounter(const Graph& host, const Graph& pattern, bool exit_on_first)
        : g(host), h(pattern), order(embedding_order(pattern)),
          image(static_cast<std::size_t>(pattern.order()), -1), early_exit(exit_on_first) {}

    void rec(std::size_t depth) {
        if (found && early_exit) return;
        if (depth == order.size()) {
            ++total;
            found = true;
            return;
        }
        int pv = order[depth];
        if (image[static_cast<std::size_t>(pv)] >= 0) {  // pre-pinned
            rec(depth + 1);
            return;
        }
        for (int w = 0; w < g.order(); ++w) {
            if ((used >> w) & 1) continue;
            bool ok = true;
            for (int pu = 0; pu < h.order(); ++pu) {
                int iu = image[static_cast<std::size_t>(pu)];
                if (iu < 0) continue;
                if (h.has_edge(pu, pv) && !g.has_edge(iu, w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(pv)] = w;
            used |= Mask(1) << w;
            rec(depth + 1);
            if (found && early_exit) return;  // keep the completed image intact
            used &= ~(Mask(1) << w);
            image[static_cast<std::size_t>(pv)] = -1;
        }
    }
};

Count embeddings_with_pins(const Graph& g, const Graph& h,
                           const std::vector<std::pair<int, int>>& pins) {
    EmbeddingCounter counter(g, h, false);
    for (auto [pv, hv] : pins) {
        counter.image[static_cast<std::size_t>(pv)] = hv;
        counter.used |= Mask(1) << hv;
    }
    counter.rec(0);
    return counter.total;
}

}  // namespace

Count count_embeddings(const Graph& g, const Graph& h) {
    if (h.order() < 1) throw std::invalid_argument("pattern must be nonempty");
    if (h.order() > g.order()) return 0;
    EmbeddingCounter counter(g, h, false);
    counter.rec(0);
    return counter.total;
}

Count automorphism_count(const Graph& h) { return count_embeddings(h, h); }

Count binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Count result = 1;
    for (long long i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

CountReport count_copies(const Graph& g, const Pattern& p) {
    CountReport report;
    switch (p.kind()) {
        case PatternKind::Clique: {
            int r = p.param_a();
            Mask all = g.order() == 64 ? ~Mask(0) : (Mask(1) << g.order()) - 1;
            report.copies = clique_count_rec(g, all, r);
            report.automorphisms = 1;
            for (int i = 2; i <= r; ++i) report.automorphisms *= i;
            report.embeddings = report.copies * report.automorphisms;
            return report;
        }
        case PatternKind::Cycle: {
            int l = p.param_a();
            report.copies = count_cycles(g, l);
            report.automorphisms = 2LL * l;
            report.embeddings = report.copies * report.automorphisms;
            return report;
        }
        case PatternKind::CompleteBipartite:
        case PatternKind::Explicit: {
            report.embeddings = count_embeddings(g, p.graph());
            report.automorphisms = automorphism_count(p.graph());
            report.copies = report.embeddings / report.automorphisms;
            return report;
        }
    }
    throw std::logic_error("unreachable");
}

bool has_copy(const Graph& g, const Pattern& p) {
    if (p.vertex_count() > g.order()) return false;
    switch (p.kind()) {
        case PatternKind::Clique: {
            Mask all = g.order() == 64 ? ~Mask(0) : (Mask(1) << g.order()) - 1;
            return clique_exists_rec(g, all, p.param_a());
        }
        case PatternKind::Cycle:
            return cycle_exists(g, p.param_a());
        case PatternKind::CompleteBipartite:
        case PatternKind::Explicit: {
            EmbeddingCounter counter(g, p.graph(), true);
            counter.rec(0);
            return counter.found;
        }
    }
    throw std::logic_error("unreachable");
}

Count count_independent_triples(const Graph& g) {
    return count_copies(g.complement(), Pattern::clique(3)).copies;
}

std::optional<std::vector<int>> find_embedding(const Graph& g, const Graph& h,
                                               const std::vector<std::pair<int, int>>& pins) {
    EmbeddingCounter counter(g, h, true);
    for (auto [pv, hv] : pins) {
        if (hv < 0 || hv >= g.order()) return std::nullopt;
        counter.image[static_cast<std::size_t>(pv)] = hv;
        counter.used |= Mask(1) << hv;
    }
    counter.rec(0);
    if (!counter.found) return std::nullopt;
    return counter.image;
}

bool has_clique_in(const Graph& g, std::uint64_t candidates, int size) {
    return clique_exists_rec(g, candidates, size);
}

Count rooted_pair_count(const Graph& h, int h1, int h2, int s) {
    if (h1 == h2 || h1 < 0 || h2 < 0 || h1 >= h.order() || h2 >= h.order())
        throw std::invalid_argument("rooted_pair_count: bad vertex pair");
    if (h.has_edge(h1, h2))
        throw std::invalid_argument("rooted_pair_count: h1h2 must be a nonedge");
    if (h.order() > s) throw std::invalid_argument("rooted_pair_count: pattern larger than K_s");

    Graph host = complete_graph(s);
    Count pinned = embeddings_with_pins(host, h, {{h1, 0}, {h2, 1}});
    Count stabilizer = embeddings_with_pins(h, h, {{h1, h1}, {h2, h2}});
    return pinned / stabilizer;
}

}  // namespace satlab
