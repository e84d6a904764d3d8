#include "satlab/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "satlab/canonical.hpp"
#include "satlab/constructions.hpp"
#include "satlab/counting.hpp"
#include "satlab/saturation.hpp"

namespace satlab {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetTracker {
    const SearchBudget& budget;
    Clock::time_point start = Clock::now();
    long long nodes = 0;
    bool exhausted = false;

    bool charge() {
        if (exhausted) return false;
        ++nodes;
        if (nodes > budget.max_nodes) {
            exhausted = true;
        } else if ((nodes & 0x3ff) == 0 &&
                   std::chrono::duration<double>(Clock::now() - start).count() >
                       budget.max_seconds) {
            exhausted = true;
        }
        return !exhausted;
    }

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

std::uint64_t permute_subset(std::uint64_t s, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        out |= std::uint64_t(1) << perm[v];
    }
    return out;
}

// McKay-style canonical augmentation: a child built by appending vertex m is
// kept only if m lies in the same Aut-orbit as the vertex in the last
// canonical position, so each isomorphism class has exactly one accepted
// generation path.
struct Enumerator {
    int n;
    const std::function<bool(const Graph&)>& visitor;
    const std::vector<Pattern>& avoid;
    BudgetTracker& tracker;
    long long visited = 0;
    bool stopped = false;

    bool contains_avoided(const Graph& g) {
        for (const Pattern& p : avoid)
            if (has_copy(g, p)) return true;
        return false;
    }

    void extend(const Graph& g) {
        if (stopped || !tracker.charge()) {
            stopped = true;
            return;
        }
        if (g.order() == n) {
            ++visited;
            if (!visitor(g)) stopped = true;
            return;
        }
        int m = g.order();
        std::vector<std::vector<int>> aut = automorphism_group(g);
        std::uint64_t limit = std::uint64_t(1) << m;
        for (std::uint64_t s = 0; s < limit && !stopped; ++s) {
            bool minimal = true;
            for (const auto& perm : aut) {
                if (permute_subset(s, perm) < s) {
                    minimal = false;
                    break;
                }
            }
            if (!minimal) continue;
            Graph child(m + 1);
            for (int u = 0; u < m; ++u)
                for (int v = u + 1; v < m; ++v)
                    if (g.has_edge(u, v)) child.add_edge(u, v);
            std::uint64_t nb = s;
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                child.add_edge(v, m);
            }
            if (contains_avoided(child)) continue;
            CanonicalResult canon = canonical_labeling(child);
            int last = 0;
            for (int v = 0; v <= m; ++v)
                if (canon.labeling[v] == m) last = v;
            if (last != m && !automorphism_maps(child, m, last)) continue;
            extend(child);
        }
    }
};

}  // namespace

long long enumerate_graphs(int n, const std::function<bool(const Graph&)>& visitor,
                           const std::vector<Pattern>& avoid, const SearchBudget& budget,
                           SearchStatus* status) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs: n must be positive");
    int cap = avoid.empty() ? 10 : 16;
    if (n > cap) throw std::invalid_argument("enumerate_graphs: n too large for full enumeration");
    BudgetTracker tracker{budget};
    Enumerator e{n, visitor, avoid, tracker};
    e.extend(Graph(1));
    if (status) *status = tracker.exhausted ? SearchStatus::BudgetExhausted : SearchStatus::Complete;
    return e.visited;
}

std::string OracleResult::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["pattern_h"] = pattern_h;
    j["pattern_f"] = pattern_f;
    j["minimum"] = minimum;
    j["witnesses"] = witnesses;
    j["saturated_count"] = saturated_count;
    j["elapsed_seconds"] = elapsed_seconds;
    j["status"] = status == SearchStatus::Complete ? "complete" : "budget_exhausted";
    return j.dump();
}

OracleResult sat_oracle(int n, const Pattern& h, const Pattern& f, const SearchBudget& budget) {
    OracleResult out;
    out.n = n;
    out.pattern_h = h.name();
    out.pattern_f = f.name();
    auto start = Clock::now();
    SearchStatus status = SearchStatus::Complete;
    enumerate_graphs(
        n,
        [&](const Graph& g) {
            if (!is_saturated_quick(g, f)) return true;
            ++out.saturated_count;
            Count copies = count_copies(g, h).copies;
            if (out.minimum < 0 || copies < out.minimum) {
                out.minimum = copies;
                out.witnesses.clear();
            }
            if (copies == out.minimum) out.witnesses.push_back(to_graph6(g));
            return true;
        },
        {f}, budget, &status);
    out.status = status;
    out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

namespace {

// Constructions known to be f-saturated with zero copies of h, tried before
// any search.
std::optional<Graph> construction_candidates(int n, const Pattern& h, const Pattern& f) {
    std::vector<Graph> candidates;
    if (f.kind() == PatternKind::Cycle) {
        int k = f.param_a();
        if (k % 2 == 1 && n >= 2) candidates.push_back(complete_bipartite(n / 2, n - n / 2));
        if (k == 4 && n == 10) candidates.push_back(named_graph(NamedGraph::Petersen));
        if (k == 4 && n == 5) candidates.push_back(cycle_graph(5));
        if (k >= 8 && k % 4 == 0 && n >= k + 2) {
            Graph g = make(g4k(k / 4));
            int y = 3 + k / 4;  // first vertex of the Y block
            while (g.order() < n && g.order() < Graph::kMaxVertices) g = clone_vertex(g, y);
            if (g.order() == n) candidates.push_back(g);
        }
        if (k >= 6 && k % 4 == 2 && n >= k + 2) {
            Graph g = make(g4k2((k - 2) / 4));
            int y = 3 + (k - 2) / 4;
            while (g.order() < n && g.order() < Graph::kMaxVertices) g = clone_vertex(g, y);
            if (g.order() == n) candidates.push_back(g);
        }
    }
    if (f.kind() == PatternKind::Explicit && f == Pattern::clique_minus_edge(4) && n >= 2)
        candidates.push_back(make(star_matching(n)));
    for (const Graph& g : candidates)
        if (g.order() == n && !has_copy(g, h) && is_saturated_quick(g, f)) return g;
    return std::nullopt;
}

}  // namespace

std::optional<Graph> find_h_free_saturated(int n, const Pattern& h, const Pattern& f,
                                           const SearchBudget& budget) {
    if (auto g = construction_candidates(n, h, f)) return g;
    if (n <= 10) {
        std::optional<Graph> found;
        enumerate_graphs(
            n,
            [&](const Graph& g) {
                if (is_saturated_quick(g, f)) {
                    found = g;
                    return false;
                }
                return true;
            },
            {f, h}, budget);
        return found;
    }
    // Beyond enumeration reach: extend a smaller witness by vertex cloning,
    // which preserves cycle saturation and triangle-freeness of non-adjacent
    // clones.
    if (f.kind() == PatternKind::Cycle) {
        for (int base = 10; base >= 5; --base) {
            auto seed = find_h_free_saturated(base, h, f, budget);
            if (!seed) continue;
            Graph g = *seed;
            bool grew = true;
            while (g.order() < n && grew) {
                grew = false;
                for (int v = 0; v < g.order() && !grew; ++v) {
                    Graph c = clone_vertex(g, v);
                    if (!has_copy(c, h) && is_saturated_quick(c, f)) {
                        g = c;
                        grew = true;
                    }
                }
            }
            if (g.order() == n) return g;
        }
    }
    return std::nullopt;
}

std::vector<BuilderSpec> search_builder(int k, const Pattern& h_forbidden, int n_lo, int n_hi,
                                        const SearchBudget& budget, SearchStatus* status) {
    if (k < 5) throw std::invalid_argument("search_builder: k must be at least 5");
    std::vector<BuilderSpec> found;
    SearchStatus worst = SearchStatus::Complete;
    Pattern ck = Pattern::cycle(k);
    for (int n = std::max(n_lo, 3); n <= n_hi; ++n) {
        SearchStatus st = SearchStatus::Complete;
        enumerate_graphs(
            n,
            [&](const Graph& g) {
                if (!is_saturated_quick(g, ck)) return true;
                std::vector<int> orbit = vertex_orbits(g);
                for (int v = 0; v < g.order(); ++v) {
                    if (orbit[v] != v) continue;  // one vertex per orbit
                    if (auto b = verify_builder(g, v, k)) found.push_back(*b);
                }
                return true;
            },
            {ck, h_forbidden}, budget, &st);
        if (st == SearchStatus::BudgetExhausted) worst = st;
    }
    if (status) *status = worst;
    return found;
}

}  // namespace satlab
