#pragma once

#include <string>

#include "satlab/graph.hpp"

namespace satlab {

enum class PatternKind { Clique, Cycle, CompleteBipartite, Explicit };

// A target graph H or F: a named family or an explicit small graph.
class Pattern {
public:
    static Pattern clique(int r);
    static Pattern cycle(int l);
    static Pattern complete_bipartite(int a, int b);
    static Pattern explicit_graph(Graph g);
    static Pattern independent_set(int r);  // Kbar_r, as an explicit graph
    static Pattern clique_minus_edge(int r);  // K_r - e, as an explicit graph

    PatternKind kind() const { return kind_; }
    int param_a() const { return a_; }
    int param_b() const { return b_; }
    int vertex_count() const;

    // The pattern as an explicit graph with its natural labeling
    // (clique: any; cycle: 0-1-...-l-1-0; bipartite: part A first).
    const Graph& graph() const { return graph_; }

    std::string name() const;

    bool operator==(const Pattern& other) const;

private:
    Pattern() = default;

    PatternKind kind_ = PatternKind::Explicit;
    int a_ = 0;
    int b_ = 0;
    Graph graph_;
    std::string name_;
};

// Mini-language: K<r>, C<l>, Kbar<r>, K<r>-e, K<a>,<b>, g6:<code>.
Pattern parse_pattern(const std::string& text);

}  // namespace satlab
