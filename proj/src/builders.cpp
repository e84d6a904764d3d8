#include "satlab/builders.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "satlab/pattern.hpp"
#include "satlab/saturation.hpp"

namespace satlab {

namespace {

Graph identify_copies(const BuilderSpec& b1, int m1, const BuilderSpec* b2, int m2) {
    std::vector<std::pair<Graph, int>> parts;
    for (int i = 0; i < m1; ++i) parts.push_back({b1.graph, b1.distinguished});
    for (int i = 0; i < m2; ++i) parts.push_back({b2->graph, b2->distinguished});
    return identify_vertices(parts);
}

}  // namespace

std::optional<BuilderSpec> verify_builder(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("verify_builder: vertex out of range");
    if (k < 5) throw std::invalid_argument("verify_builder: k must be at least 5");
    Pattern ck = Pattern::cycle(k);
    if (!is_saturated_quick(g, ck)) return std::nullopt;
    BuilderSpec b{g, v, k};
    Graph doubled = identify_copies(b, 2, nullptr, 0);
    if (!is_saturated_quick(doubled, ck)) return std::nullopt;
    return b;
}

PathLengthProfile path_length_profile(const BuilderSpec& b) {
    const Graph& g = b.graph;
    int n = g.order();
    PathLengthProfile p;
    p.lengths.assign(n, 0);
    // Every simple path ending at the distinguished vertex, by DFS outward
    // from it; depth d at vertex u means a u-to-v path of length d.
    auto dfs = [&](auto&& self, int u, std::uint64_t used, int depth) -> void {
        p.lengths[u] |= std::uint64_t(1) << depth;
        std::uint64_t nb = g.neighbors(u) & ~used;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            self(self, w, used | (std::uint64_t(1) << w), depth + 1);
        }
    };
    dfs(dfs, b.distinguished, std::uint64_t(1) << b.distinguished, 0);
    return p;
}

bool are_compatible(const BuilderSpec& b1, const BuilderSpec& b2) {
    if (b1.k != b2.k) throw std::invalid_argument("are_compatible: mismatched k");
    int target = b1.k - 1;
    PathLengthProfile p1 = path_length_profile(b1);
    PathLengthProfile p2 = path_length_profile(b2);
    for (int u = 0; u < b1.graph.order(); ++u) {
        if (u == b1.distinguished) continue;
        for (int w = 0; w < b2.graph.order(); ++w) {
            if (w == b2.distinguished) continue;
            bool ok = false;
            for (int k1 = 1; k1 < target && !ok; ++k1)
                ok = (p1.lengths[u] >> k1 & 1) && (p2.lengths[w] >> (target - k1) & 1);
            if (!ok) return false;
        }
    }
    return true;
}

Graph glue(const BuilderSpec& b1, int m1, const BuilderSpec* b2, int m2) {
    if (m1 < 0 || m2 < 0 || m1 + m2 < 1) throw std::invalid_argument("glue: need at least one copy");
    if (m2 > 0 && b2 == nullptr) throw std::invalid_argument("glue: missing second builder");
    if (m2 > 0 && b2->k != b1.k) throw std::invalid_argument("glue: mismatched k");
    long long n = 1 + static_cast<long long>(m1) * (b1.graph.order() - 1);
    if (m2 > 0) n += static_cast<long long>(m2) * (b2->graph.order() - 1);
    if (n > Graph::kMaxVertices) throw std::overflow_error("glue: result exceeds 64 vertices");
    if (m1 >= 1 && m2 >= 1 && !are_compatible(b1, *b2))
        throw std::invalid_argument("glue: builders are not compatible");
    Graph g = m1 > 0 ? identify_copies(b1, m1, b2, m2) : identify_copies(*b2, m2, nullptr, 0);
    if (!is_saturated_quick(g, Pattern::cycle(b1.k)))
        throw std::runtime_error("glue: result failed the saturation re-check");
    return g;
}

SizeCoverage size_coverage(int a, int b, int limit) {
    SizeCoverage out;
    if (a < 1 || b < 1 || limit < 1) return out;
    std::vector<char> hit(static_cast<std::size_t>(limit) + 1, 0);
    for (long long m1 = 0; 1 + m1 * a <= limit; ++m1)
        for (long long m2 = 0; 1 + m1 * a + m2 * b <= limit; ++m2)
            hit[static_cast<std::size_t>(1 + m1 * a + m2 * b)] = 1;
    for (int n = 1; n <= limit; ++n)
        if (hit[n]) out.representable.push_back(n);
    // Frobenius: with gcd(a,b)=1 every n > ab-a-b is a nonnegative combination,
    // so the scan frontier is the true threshold once limit clears it.
    long long frobenius_plus_one = static_cast<long long>(a) * b - a - b + 2;
    if (std::gcd(a, b) == 1 && limit >= frobenius_plus_one) {
        int n0 = 1;
        for (int n = limit; n >= 1; --n) {
            if (!hit[n]) {
                n0 = n + 1;
                break;
            }
        }
        out.has_threshold = true;
        out.threshold = n0;
    }
    return out;
}

std::string builder_to_json(const BuilderSpec& b, bool verified) {
    nlohmann::json j;
    j["graph6"] = to_graph6(b.graph);
    j["distinguished"] = b.distinguished;
    j["k"] = b.k;
    j["verified"] = verified;
    return j.dump();
}

}  // namespace satlab
