#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace satlab {

// Undirected simple graph on at most 64 vertices.  Each neighbor set is a
// single machine word, so adjacency tests and set intersections are one
// instruction.  Vertices are dense indices 0..n-1.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    int degree(int v) const;
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // All nonedges {u, v} with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> nonedges() const;
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// graph6 I/O (standard format, one graph per line, no header).
Graph from_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Adjacency-matrix text: n lines of n characters from {0,1}, symmetric,
// zero diagonal.  Convenience input for transcribing figures.
Graph from_adjacency_text(const std::string& text);

// Join G1 + G2: disjoint union plus all edges between the parts.
Graph join(const Graph& g1, const Graph& g2);

// Add a new vertex u with the same neighborhood as v (u not adjacent to v).
Graph clone_vertex(const Graph& g, int v);

// Disjoint union of the given graphs with all distinguished vertices merged
// into a single vertex whose neighborhood is the union of theirs.  The merged
// vertex gets index 0; the remaining vertices of each part follow in input
// order.
Graph identify_vertices(const std::vector<std::pair<Graph, int>>& parts);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

struct VertexMetrics {
    static constexpr int kInfinity = -1;

    int diameter = 0;          // kInfinity when disconnected
    int girth = kInfinity;     // kInfinity when acyclic
    int min_degree = 0;
    int max_degree = 0;
    bool is_regular = true;

    bool diameter_infinite() const { return diameter == kInfinity; }
    bool girth_infinite() const { return girth == kInfinity; }
};

VertexMetrics metrics(const Graph& g);

// Distances from src via BFS; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

}  // namespace satlab
