#include "satlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace satlab {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order out of range: " + std::to_string(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= std::uint64_t(1) << v;
    adj_[v] |= std::uint64_t(1) << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t(1) << v);
    adj_[v] &= ~(std::uint64_t(1) << u);
}

std::vector<std::pair<int, int>> Graph::nonedges() const {
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) result.emplace_back(u, v);
    return result;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) result.emplace_back(u, v);
    return result;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) c.add_edge(u, v);
    return c;
}

// ---------------------------------------------------------------------------
// graph6

Graph from_graph6(const std::string& text) {
    std::string line = text;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw std::invalid_argument("empty graph6 string");

    std::size_t pos = 0;
    long n = 0;
    auto byte_at = [&](std::size_t i) -> int {
        if (i >= line.size()) throw std::invalid_argument("truncated graph6 string");
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6 character out of range");
        return c - 63;
    };

    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~') {
            // 8-byte order: always > 64 vertices.
            throw std::invalid_argument("graph6 order exceeds 64 vertices");
        }
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | byte_at(static_cast<std::size_t>(i));
        pos = 4;
    } else {
        n = byte_at(0);
        pos = 1;
    }
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("graph6 order exceeds 64 vertices");

    Graph g(static_cast<int>(n));
    long bits = n * (n - 1) / 2;
    long expected_bytes = (bits + 5) / 6;
    if (static_cast<long>(line.size()) - static_cast<long>(pos) != expected_bytes)
        throw std::invalid_argument("graph6 body has wrong length");

    long bit_index = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            int value = byte_at(pos + static_cast<std::size_t>(bit_index / 6));
            int bit = (value >> (5 - bit_index % 6)) & 1;
            if (bit) g.add_edge(u, v);
            ++bit_index;
        }
    }
    // Padding bits must be zero.
    while (bit_index < expected_bytes * 6) {
        int value = byte_at(pos + static_cast<std::size_t>(bit_index / 6));
        if ((value >> (5 - bit_index % 6)) & 1)
            throw std::invalid_argument("graph6 trailing bits nonzero");
        ++bit_index;
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_adjacency_text(const std::string& text) {
    std::vector<std::string> rows;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty()) rows.push_back(current);
            current.clear();
        } else if (c != '\r' && c != ' ' && c != '\t') {
            current.push_back(c);
        }
    }
    if (!current.empty()) rows.push_back(current);

    int n = static_cast<int>(rows.size());
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        if (static_cast<int>(rows[u].size()) != n)
            throw std::invalid_argument("adjacency matrix is not square");
        for (int v = 0; v < n; ++v) {
            char c = rows[u][v];
            if (c != '0' && c != '1')
                throw std::invalid_argument("adjacency matrix entries must be 0 or 1");
            if (c == '1') {
                if (u == v) throw std::invalid_argument("adjacency matrix has nonzero diagonal");
                if (rows[v][u] != '1') throw std::invalid_argument("adjacency matrix not symmetric");
                if (u < v) g.add_edge(u, v);
            }
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Transformations

Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.order(), n2 = g2.order();
    if (n1 + n2 > Graph::kMaxVertices)
        throw std::invalid_argument("join exceeds 64 vertices");
    Graph g(n1 + n2);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
    return g;
}

Graph clone_vertex(const Graph& g, int v) {
    int n = g.order();
    if (v < 0 || v >= n) throw std::out_of_range("clone_vertex: vertex out of range");
    if (n >= Graph::kMaxVertices)
        throw std::invalid_argument("clone_vertex exceeds 64 vertices");
    Graph out(n + 1);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (int w = 0; w < n; ++w)
        if (g.has_edge(v, w)) out.add_edge(n, w);
    return out;
}

Graph identify_vertices(const std::vector<std::pair<Graph, int>>& parts) {
    if (parts.empty()) throw std::invalid_argument("identify_vertices: empty input");
    long total = 1;
    for (const auto& [g, v] : parts) {
        if (v < 0 || v >= g.order())
            throw std::out_of_range("identify_vertices: distinguished vertex out of range");
        total += g.order() - 1;
    }
    if (total > Graph::kMaxVertices)
        throw std::invalid_argument("identify_vertices exceeds 64 vertices");

    Graph out(static_cast<int>(total));
    int offset = 1;
    for (const auto& [g, dist] : parts) {
        // Vertex `dist` maps to 0, the others keep their relative order.
        auto map = [&](int w) { return w == dist ? 0 : offset + w - (w > dist ? 1 : 0); };
        for (auto [a, b] : g.edges()) out.add_edge(map(a), map(b));
        offset += g.order() - 1;
    }
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a + b > Graph::kMaxVertices)
        throw std::invalid_argument("complete bipartite exceeds 64 vertices");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// ---------------------------------------------------------------------------
// Metrics

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> queue;
    dist[src] = 0;
    queue.push(src);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        std::uint64_t nb = g.neighbors(v);
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

namespace {

// Shortest cycle through src: BFS recording parents; a non-tree edge that
// closes at depths d1, d2 gives a cycle of length d1 + d2 + 1.
int shortest_cycle_through(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> queue;
    dist[src] = 0;
    queue.push(src);
    int best = -1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        std::uint64_t nb = g.neighbors(v);
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w == parent[v]) continue;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push(w);
            } else {
                int len = dist[v] + dist[w] + 1;
                if (best < 0 || len < best) best = len;
            }
        }
    }
    return best;
}

}  // namespace

VertexMetrics metrics(const Graph& g) {
    VertexMetrics m;
    int n = g.order();
    if (n == 0) return m;

    m.min_degree = g.degree(0);
    m.max_degree = g.degree(0);
    for (int v = 1; v < n; ++v) {
        int d = g.degree(v);
        m.min_degree = std::min(m.min_degree, d);
        m.max_degree = std::max(m.max_degree, d);
    }
    m.is_regular = (m.min_degree == m.max_degree);

    m.diameter = 0;
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        for (int w = 0; w < n; ++w) {
            if (dist[w] < 0) {
                m.diameter = VertexMetrics::kInfinity;
            } else if (m.diameter != VertexMetrics::kInfinity) {
                m.diameter = std::max(m.diameter, dist[w]);
            }
        }
        if (m.diameter == VertexMetrics::kInfinity) break;
    }

    m.girth = VertexMetrics::kInfinity;
    for (int v = 0; v < n; ++v) {
        int len = shortest_cycle_through(g, v);
        if (len > 0 && (m.girth == VertexMetrics::kInfinity || len < m.girth)) m.girth = len;
    }
    return m;
}

}  // namespace satlab
