#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "satlab/builders.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

struct SearchBudget {
    long long max_nodes = std::numeric_limits<long long>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
    bool deterministic = true;
};

enum class SearchStatus { Complete, BudgetExhausted };

struct OracleResult {
    int n = 0;
    std::string pattern_h;
    std::string pattern_f;
    long long minimum = -1;                // -1 when no saturated graph exists
    std::vector<std::string> witnesses;    // graph6, pairwise non-isomorphic
    long long saturated_count = 0;
    double elapsed_seconds = 0.0;
    SearchStatus status = SearchStatus::Complete;
    std::string to_json() const;
};

// Visits one representative per isomorphism class of n-vertex graphs, in a
// deterministic order, via canonical augmentation.  Graphs containing any
// pattern in `avoid` are pruned together with all their supergraphs.  Returns
// the number of classes visited; the visitor may return false to stop early.
// Full enumeration (no avoid patterns) is limited to n <= 10; with avoid
// patterns n <= 16 is allowed.
long long enumerate_graphs(int n, const std::function<bool(const Graph&)>& visitor,
                           const std::vector<Pattern>& avoid = {},
                           const SearchBudget& budget = {},
                           SearchStatus* status = nullptr);

// Exact minimum number of copies of h over all f-saturated n-vertex graphs.
OracleResult sat_oracle(int n, const Pattern& h, const Pattern& f,
                        const SearchBudget& budget = {});

// An n-vertex f-saturated graph with zero copies of h, if one is found:
// known constructions first, exhaustive enumeration for n <= 10, and a
// clone-extension step for cycle targets beyond that.
std::optional<Graph> find_h_free_saturated(int n, const Pattern& h, const Pattern& f,
                                           const SearchBudget& budget = {});

// Verified h_forbidden-free C_k-builders with n_lo <= |V| <= n_hi.  Candidates
// are enumerated with both C_k and h_forbidden pruned during augmentation.
std::vector<BuilderSpec> search_builder(int k, const Pattern& h_forbidden, int n_lo, int n_hi,
                                        const SearchBudget& budget = {},
                                        SearchStatus* status = nullptr);

}  // namespace satlab
