#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

// Witness for one nonedge: copy[i] is the host vertex playing the role of
// vertex i of the pattern's natural labeling, and the pattern covers edge uv.
struct NonedgeWitness {
    int u = 0;
    int v = 0;
    std::vector<int> copy;
};

struct SaturationCertificate {
    Pattern target = Pattern::clique(3);
    bool free_checked = false;
    std::vector<NonedgeWitness> witnesses;  // one per nonedge, lexicographic

    std::string to_json() const;
};

SaturationCertificate certificate_from_json(const std::string& json_text);

// True iff g contains no copy of f (early-exit search).
bool is_free(const Graph& g, const Pattern& f);

// A copy of f through the nonedge uv in g+uv, as a pattern-order vertex
// list, or nullopt.  For cycles: a u-v path of length k-1.
std::optional<std::vector<int>> creates_through(const Graph& g, int u, int v, const Pattern& f);

struct SaturationCheck {
    bool saturated = false;
    std::optional<SaturationCertificate> certificate;
};

SaturationCheck is_saturated(const Graph& g, const Pattern& f);

// Fast yes/no without building a certificate.
bool is_saturated_quick(const Graph& g, const Pattern& f);

// Re-checks the certificate invariants independently of how it was produced.
bool verify_certificate(const Graph& g, const SaturationCertificate& cert);

enum class MooreClass { Moore, Diameter3Saturated, NotApplicable };

// Requires triangle-free and C4-saturated; Moore iff diameter 2 and girth 5.
MooreClass moore_check(const Graph& g);

std::string to_string(MooreClass c);

}  // namespace satlab
