#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

// A C_k-builder: a C_k-saturated graph with a distinguished vertex such that
// identifying the distinguished vertices of two copies is again C_k-saturated.
struct BuilderSpec {
    Graph graph;
    int distinguished = 0;
    int k = 0;
};

// Bit l of lengths[u] is set iff some simple path of length l joins u to the
// distinguished vertex.  lengths[distinguished] = {0}.
struct PathLengthProfile {
    std::vector<std::uint64_t> lengths;
};

std::optional<BuilderSpec> verify_builder(const Graph& g, int v, int k);

PathLengthProfile path_length_profile(const BuilderSpec& b);

// True iff every ordered pair (u, w) of non-distinguished vertices, u from b1
// and w from b2, admits path lengths k1 + k2 = k - 1 to the respective
// distinguished vertices.
bool are_compatible(const BuilderSpec& b1, const BuilderSpec& b2);

// Identify the distinguished vertices of m1 copies of b1 and m2 copies of b2
// into one vertex, then re-verify that the result is C_k-saturated.
Graph glue(const BuilderSpec& b1, int m1, const BuilderSpec* b2 = nullptr, int m2 = 0);

struct SizeCoverage {
    bool has_threshold = false;
    int threshold = 0;                 // least n0 with [n0, limit] all representable
    std::vector<int> representable;    // {1 + m1*a + m2*b} ∩ [1, limit], sorted
};

// Sizes reachable by gluing copies of two builders with a = |V1|-1, b = |V2|-1.
// The threshold is trusted only when gcd(a, b) = 1 and the scan limit clears
// the Frobenius number of {a, b}.
SizeCoverage size_coverage(int a, int b, int limit);

std::string builder_to_json(const BuilderSpec& b, bool verified);

}  // namespace satlab
