#include "satlab/pattern.hpp"

#include <stdexcept>

namespace satlab {

Pattern Pattern::clique(int r) {
    if (r < 1) throw std::invalid_argument("clique size must be positive");
    Pattern p;
    p.kind_ = PatternKind::Clique;
    p.a_ = r;
    p.graph_ = complete_graph(r);
    p.name_ = "K" + std::to_string(r);
    return p;
}

Pattern Pattern::cycle(int l) {
    if (l < 3) throw std::invalid_argument("cycle length must be at least 3");
    Pattern p;
    p.kind_ = PatternKind::Cycle;
    p.a_ = l;
    p.graph_ = cycle_graph(l);
    p.name_ = "C" + std::to_string(l);
    return p;
}

Pattern Pattern::complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartite part sizes must be positive");
    Pattern p;
    p.kind_ = PatternKind::CompleteBipartite;
    p.a_ = a;
    p.b_ = b;
    p.graph_ = satlab::complete_bipartite(a, b);
    p.name_ = "K" + std::to_string(a) + "," + std::to_string(b);
    return p;
}

Pattern Pattern::explicit_graph(Graph g) {
    if (g.order() < 1) throw std::invalid_argument("explicit pattern must be nonempty");
    Pattern p;
    p.kind_ = PatternKind::Explicit;
    p.name_ = "g6:" + to_graph6(g);
    p.graph_ = std::move(g);
    return p;
}

Pattern Pattern::independent_set(int r) {
    if (r < 1) throw std::invalid_argument("independent set size must be positive");
    Pattern p = explicit_graph(empty_graph(r));
    p.name_ = "Kbar" + std::to_string(r);
    return p;
}

Pattern Pattern::clique_minus_edge(int r) {
    if (r < 2) throw std::invalid_argument("K_r - e needs r >= 2");
    Graph g = complete_graph(r);
    g.remove_edge(r - 2, r - 1);
    Pattern p = explicit_graph(std::move(g));
    p.name_ = "K" + std::to_string(r) + "-e";
    return p;
}

int Pattern::vertex_count() const { return graph_.order(); }

std::string Pattern::name() const { return name_; }

bool Pattern::operator==(const Pattern& other) const {
    return kind_ == other.kind_ && a_ == other.a_ && b_ == other.b_ && graph_ == other.graph_;
}

Pattern parse_pattern(const std::string& text) {
    if (text.rfind("g6:", 0) == 0) return Pattern::explicit_graph(from_graph6(text.substr(3)));
    if (text.rfind("Kbar", 0) == 0) return Pattern::independent_set(std::stoi(text.substr(4)));
    if (!text.empty() && text[0] == 'C') return Pattern::cycle(std::stoi(text.substr(1)));
    if (!text.empty() && text[0] == 'K') {
        std::string rest = text.substr(1);
        auto comma = rest.find(',');
        if (comma != std::string::npos)
            return Pattern::complete_bipartite(std::stoi(rest.substr(0, comma)),
                                               std::stoi(rest.substr(comma + 1)));
        auto dash = rest.find("-e");
        if (dash != std::string::npos) return Pattern::clique_minus_edge(std::stoi(rest.substr(0, dash)));
        return Pattern::clique(std::stoi(rest));
    }
    throw std::invalid_argument("cannot parse pattern: " + text);
}

}  // namespace satlab
