#include "satlab/saturation.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

#include "satlab/counting.hpp"

namespace satlab {

namespace {

using Mask = std::uint64_t;

// First u-v simple path with exactly `edges` edges, lexicographic DFS with
// remaining-distance pruning.
struct PathSearch {
    const Graph& g;
    int target;
    int total_edges;
    std::vector<int> dist_to_target;
    std::vector<int> path;
    Mask used = 0;
    bool found = false;

    PathSearch(const Graph& graph, int u, int v, int edges)
        : g(graph), target(v), total_edges(edges), dist_to_target(bfs_distances(graph, v)) {
        path.reserve(static_cast<std::size_t>(edges) + 1);
        path.push_back(u);
        used = Mask(1) << u;
    }

    bool dfs(int v, int remaining) {
        if (remaining == 0) return v == target;
        if (dist_to_target[static_cast<std::size_t>(v)] < 0 ||
            dist_to_target[static_cast<std::size_t>(v)] > remaining)
            return false;
        Mask nb = g.neighbors(v) & ~used;
        if (remaining > 1) nb &= ~(Mask(1) << target);
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            path.push_back(w);
            used |= Mask(1) << w;
            if (dfs(w, remaining - 1)) return true;
            used &= ~(Mask(1) << w);
            path.pop_back();
        }
        return false;
    }
};

std::optional<std::vector<int>> find_path(const Graph& g, int u, int v, int edges) {
    PathSearch search(g, u, v, edges);
    if (search.dfs(u, edges)) return search.path;
    return std::nullopt;
}

bool path_exists(const Graph& g, int u, int v, int edges) {
    PathSearch search(g, u, v, edges);
    return search.dfs(u, edges);
}

// Smallest clique (lexicographically) of the given size inside `candidates`.
bool find_clique_in(const Graph& g, Mask candidates, int size, std::vector<int>& out) {
    if (size == 0) return true;
    Mask work = candidates;
    while (work) {
        int v = std::countr_zero(work);
        work &= work - 1;
        out.push_back(v);
        Mask next = candidates & g.neighbors(v) & ~((Mask(2) << v) - 1);
        if (find_clique_in(g, next, size - 1, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

bool is_free(const Graph& g, const Pattern& f) { return !has_copy(g, f); }

std::optional<std::vector<int>> creates_through(const Graph& g, int u, int v, const Pattern& f) {
    if (g.has_edge(u, v)) throw std::invalid_argument("creates_through: uv is already an edge");

    if (f.kind() == PatternKind::Cycle) {
        // A copy of C_k through uv is exactly a u-v path of length k-1 in g.
        return find_path(g, u, v, f.param_a() - 1);
    }
    if (f.kind() == PatternKind::Clique) {
        int s = f.param_a();
        if (s < 2) return std::nullopt;
        std::vector<int> clique;
        if (!find_clique_in(g, g.neighbors(u) & g.neighbors(v), s - 2, clique))
            return std::nullopt;
        std::vector<int> copy = {u, v};
        copy.insert(copy.end(), clique.begin(), clique.end());
        return copy;
    }

    // Generic pattern: pin a pattern edge onto uv and extend in g + uv.
    Graph host = g;
    host.add_edge(u, v);
    const Graph& pat = f.graph();
    for (auto [i, j] : pat.edges()) {
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            auto image = find_embedding(host, pat, {{i, a}, {j, b}});
            if (image) return image;
        }
    }
    return std::nullopt;
}

SaturationCheck is_saturated(const Graph& g, const Pattern& f) {
    SaturationCheck result;
    if (!is_free(g, f)) return result;
    SaturationCertificate cert;
    cert.target = f;
    cert.free_checked = true;
    for (auto [u, v] : g.nonedges()) {
        auto witness = creates_through(g, u, v, f);
        if (!witness) return result;
        cert.witnesses.push_back({u, v, std::move(*witness)});
    }
    result.saturated = true;
    result.certificate = std::move(cert);
    return result;
}

bool is_saturated_quick(const Graph& g, const Pattern& f) {
    if (!is_free(g, f)) return false;
    if (f.kind() == PatternKind::Clique) {
        int s = f.param_a();
        for (auto [u, v] : g.nonedges())
            if (!has_clique_in(g, g.neighbors(u) & g.neighbors(v), s - 2)) return false;
        return true;
    }
    if (f.kind() == PatternKind::Cycle) {
        for (auto [u, v] : g.nonedges())
            if (!path_exists(g, u, v, f.param_a() - 1)) return false;
        return true;
    }
    for (auto [u, v] : g.nonedges())
        if (!creates_through(g, u, v, f)) return false;
    return true;
}

bool verify_certificate(const Graph& g, const SaturationCertificate& cert) {
    if (cert.free_checked && !is_free(g, cert.target)) return false;

    auto expected = g.nonedges();
    std::vector<std::pair<int, int>> keys;
    keys.reserve(cert.witnesses.size());
    for (const auto& w : cert.witnesses) {
        int a = std::min(w.u, w.v), b = std::max(w.u, w.v);
        keys.emplace_back(a, b);
    }
    std::sort(keys.begin(), keys.end());
    if (keys != expected) return false;

    const Graph& pat = cert.target.graph();
    for (const auto& w : cert.witnesses) {
        if (static_cast<int>(w.copy.size()) != pat.order()) return false;
        Mask seen = 0;
        for (int x : w.copy) {
            if (x < 0 || x >= g.order()) return false;
            if ((seen >> x) & 1) return false;
            seen |= Mask(1) << x;
        }
        bool covers_uv = false;
        for (auto [i, j] : pat.edges()) {
            int a = w.copy[static_cast<std::size_t>(i)];
            int b = w.copy[static_cast<std::size_t>(j)];
            bool is_uv = (a == w.u && b == w.v) || (a == w.v && b == w.u);
            if (is_uv) {
                covers_uv = true;
            } else if (!g.has_edge(a, b)) {
                return false;
            }
        }
        if (!covers_uv) return false;
    }
    return true;
}

MooreClass moore_check(const Graph& g) {
    if (has_copy(g, Pattern::clique(3))) return MooreClass::NotApplicable;
    if (!is_saturated_quick(g, Pattern::cycle(4))) return MooreClass::NotApplicable;
    auto m = metrics(g);
    if (m.diameter == 2 && m.girth == 5) return MooreClass::Moore;
    if (m.diameter == 3) return MooreClass::Diameter3Saturated;
    return MooreClass::NotApplicable;
}

std::string to_string(MooreClass c) {
    switch (c) {
        case MooreClass::Moore: return "Moore";
        case MooreClass::Diameter3Saturated: return "Diameter3Saturated";
        case MooreClass::NotApplicable: return "NotApplicable";
    }
    return "NotApplicable";
}

std::string SaturationCertificate::to_json() const {
    nlohmann::json j;
    j["target"] = target.name();
    j["free_checked"] = free_checked;
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : witnesses)
        j["witnesses"].push_back({{"u", w.u}, {"v", w.v}, {"copy", w.copy}});
    return j.dump();
}

SaturationCertificate certificate_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    SaturationCertificate cert;
    cert.target = parse_pattern(j.at("target").get<std::string>());
    cert.free_checked = j.at("free_checked").get<bool>();
    for (const auto& w : j.at("witnesses")) {
        NonedgeWitness witness;
        witness.u = w.at("u").get<int>();
        witness.v = w.at("v").get<int>();
        witness.copy = w.at("copy").get<std::vector<int>>();
        cert.witnesses.push_back(std::move(witness));
    }
    return cert;
}

}  // namespace satlab
