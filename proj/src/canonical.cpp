#include "satlab/canonical.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace satlab {

namespace {

using Mask = std::uint64_t;

struct Partition {
    // Ordered list of cells; each cell is a sorted list of vertices.
    std::vector<std::vector<int>> cells;

    bool discrete() const {
        for (const auto& c : cells)
            if (c.size() > 1) return false;
        return true;
    }
};

Mask cell_mask(const std::vector<int>& cell) {
    Mask m = 0;
    for (int v : cell) m |= Mask(1) << v;
    return m;
}

// Equitable refinement: split cells by neighbor counts into splitter cells
// until stable.
void refine(const Graph& g, Partition& p, std::vector<Mask> worklist) {
    while (!worklist.empty()) {
        Mask splitter = worklist.back();
        worklist.pop_back();
        for (std::size_t ci = 0; ci < p.cells.size(); ++ci) {
            auto& cell = p.cells[ci];
            if (cell.size() <= 1) continue;
            int first_count = std::popcount(g.neighbors(cell[0]) & splitter);
            bool uniform = true;
            for (int v : cell) {
                if (std::popcount(g.neighbors(v) & splitter) != first_count) {
                    uniform = false;
                    break;
                }
            }
            if (uniform) continue;

            std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
                return std::popcount(g.neighbors(a) & splitter) <
                       std::popcount(g.neighbors(b) & splitter);
            });
            std::vector<std::vector<int>> pieces;
            std::size_t start = 0;
            for (std::size_t i = 1; i <= cell.size(); ++i) {
                if (i == cell.size() ||
                    std::popcount(g.neighbors(cell[i]) & splitter) !=
                        std::popcount(g.neighbors(cell[start]) & splitter)) {
                    pieces.emplace_back(cell.begin() + start, cell.begin() + i);
                    start = i;
                }
            }
            p.cells[ci] = std::move(pieces[0]);
            for (std::size_t k = 1; k < pieces.size(); ++k) {
                worklist.push_back(cell_mask(pieces[k]));
                p.cells.insert(p.cells.begin() + static_cast<long>(ci + k),
                               std::move(pieces[k]));
            }
            worklist.push_back(cell_mask(p.cells[ci]));
        }
    }
}

Partition initial_partition(const Graph& g) {
    Partition p;
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    if (!all.empty()) p.cells.push_back(std::move(all));
    std::vector<Mask> work;
    for (const auto& c : p.cells) work.push_back(cell_mask(c));
    refine(g, p, std::move(work));
    return p;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::uint64_t> best_code;
    std::vector<int> best_labeling;
    std::vector<std::vector<int>> autos;
    std::vector<int> prefix;  // individualized vertices, in order

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    std::vector<int> labeling_of(const Partition& p) const {
        std::vector<int> labeling(static_cast<std::size_t>(n));
        int pos = 0;
        for (const auto& cell : p.cells) labeling[static_cast<std::size_t>(cell[0])] = pos++;
        return labeling;
    }

    std::vector<std::uint64_t> code_of(const std::vector<int>& labeling) const {
        std::vector<std::uint64_t> code(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            Mask nb = g.neighbors(v);
            std::uint64_t row = 0;
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                row |= std::uint64_t(1) << labeling[static_cast<std::size_t>(w)];
            }
            code[static_cast<std::size_t>(labeling[static_cast<std::size_t>(v)])] = row;
        }
        return code;
    }

    void handle_leaf(const Partition& p) {
        auto labeling = labeling_of(p);
        auto code = code_of(labeling);
        if (best_code.empty() || code < best_code) {
            best_code = std::move(code);
            best_labeling = std::move(labeling);
        } else if (code == best_code) {
            // Two labelings onto the same canonical graph compose to an
            // automorphism.
            std::vector<int> inverse(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                inverse[static_cast<std::size_t>(labeling[static_cast<std::size_t>(v)])] = v;
            std::vector<int> alpha(static_cast<std::size_t>(n));
            bool identity = true;
            for (int v = 0; v < n; ++v) {
                alpha[static_cast<std::size_t>(v)] =
                    inverse[static_cast<std::size_t>(best_labeling[static_cast<std::size_t>(v)])];
                if (alpha[static_cast<std::size_t>(v)] != v) identity = false;
            }
            if (!identity) autos.push_back(std::move(alpha));
        }
    }

    bool pruned_by_automorphism(int candidate, const std::vector<int>& tried) const {
        for (const auto& alpha : autos) {
            bool fixes_prefix = true;
            for (int pv : prefix) {
                if (alpha[static_cast<std::size_t>(pv)] != pv) {
                    fixes_prefix = false;
                    break;
                }
            }
            if (!fixes_prefix) continue;
            int image = alpha[static_cast<std::size_t>(candidate)];
            if (std::find(tried.begin(), tried.end(), image) != tried.end()) return true;
        }
        return false;
    }

    void search(const Partition& p) {
        std::size_t target = p.cells.size();
        for (std::size_t i = 0; i < p.cells.size(); ++i) {
            if (p.cells[i].size() > 1) {
                target = i;
                break;
            }
        }
        if (target == p.cells.size()) {
            handle_leaf(p);
            return;
        }

        std::vector<int> tried;
        for (int v : p.cells[target]) {
            if (pruned_by_automorphism(v, tried)) continue;
            Partition child = p;
            auto& cell = child.cells[target];
            cell.erase(std::find(cell.begin(), cell.end(), v));
            child.cells.insert(child.cells.begin() + static_cast<long>(target), {v});
            refine(g, child, {Mask(1) << v});
            prefix.push_back(v);
            search(child);
            prefix.pop_back();
            tried.push_back(v);
        }
    }
};

std::string encode_form(int n, const std::vector<std::uint64_t>& code) {
    std::string out;
    out.reserve(1 + static_cast<std::size_t>(n) * 8);
    out.push_back(static_cast<char>(n));
    for (std::uint64_t row : code)
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((row >> (8 * b)) & 0xff));
    return out;
}

}  // namespace

CanonicalResult canonical_labeling(const Graph& g) {
    CanonicalResult result;
    if (g.order() == 0) {
        result.form = encode_form(0, {});
        return result;
    }
    CanonSearch searcher(g);
    searcher.search(initial_partition(g));
    result.labeling = std::move(searcher.best_labeling);
    result.form = encode_form(g.order(), searcher.best_code);
    result.generators = std::move(searcher.autos);
    return result;
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
    return canonical_form(g1) == canonical_form(g2);
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

namespace {

// Exhaustive automorphism enumeration by backtracking, independent of the
// canonical-labeling search.
void enumerate_autos(const Graph& g, std::vector<int>& image, Mask used, int depth,
                     std::vector<std::vector<int>>& out) {
    int n = g.order();
    if (depth == n) {
        out.push_back(image);
        return;
    }
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1) continue;
        if (g.degree(depth) != g.degree(w)) continue;
        bool ok = true;
        for (int prev = 0; prev < depth; ++prev) {
            if (g.has_edge(depth, prev) != g.has_edge(w, image[static_cast<std::size_t>(prev)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[static_cast<std::size_t>(depth)] = w;
        enumerate_autos(g, image, used | (Mask(1) << w), depth + 1, out);
    }
}

}  // namespace

std::vector<std::vector<int>> automorphism_group(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> image(static_cast<std::size_t>(g.order()));
    enumerate_autos(g, image, 0, 0, out);
    return out;
}

namespace {

bool find_constrained_auto(const Graph& g, std::vector<int>& image, Mask used, int depth,
                           int a, int b) {
    int n = g.order();
    if (depth == n) return true;
    for (int w = 0; w < n; ++w) {
        if (depth == a && w != b) continue;
        if ((used >> w) & 1) continue;
        if (g.degree(depth) != g.degree(w)) continue;
        bool ok = true;
        for (int prev = 0; prev < depth; ++prev) {
            if (g.has_edge(depth, prev) != g.has_edge(w, image[static_cast<std::size_t>(prev)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[static_cast<std::size_t>(depth)] = w;
        if (find_constrained_auto(g, image, used | (Mask(1) << w), depth + 1, a, b)) return true;
    }
    return false;
}

}  // namespace

bool automorphism_maps(const Graph& g, int a, int b) {
    if (a == b) return true;
    if (g.degree(a) != g.degree(b)) return false;
    std::vector<int> image(static_cast<std::size_t>(g.order()));
    return find_constrained_auto(g, image, 0, 0, a, b);
}

std::vector<int> vertex_orbits(const Graph& g) {
    int n = g.order();
    std::vector<int> orbit(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) orbit[static_cast<std::size_t>(v)] = v;
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < v; ++w) {
            if (orbit[static_cast<std::size_t>(w)] == orbit[static_cast<std::size_t>(v)]) continue;
            if (automorphism_maps(g, v, w)) {
                int from = orbit[static_cast<std::size_t>(v)];
                int to = orbit[static_cast<std::size_t>(w)];
                if (to > from) std::swap(from, to);
                for (int x = 0; x < n; ++x)
                    if (orbit[static_cast<std::size_t>(x)] == from)
                        orbit[static_cast<std::size_t>(x)] = to;
            }
        }
    }
    return orbit;
}

}  // namespace satlab
