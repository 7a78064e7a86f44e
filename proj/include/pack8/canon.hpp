#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "pack8/graph.hpp"

namespace pack8 {

// Total-order key with: equal keys <=> isomorphic graphs.
struct CanonicalForm {
    std::uint8_t n = 0;
    std::array<std::uint64_t, 8> bits{};  // packed upper triangle of the canonical adjacency

    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const {
        std::size_t h = c.n;
        for (auto w : c.bits) h = h * 1099511628211ull + w;
        return h;
    }
};

struct CanonResult {
    CanonicalForm form;
    std::vector<int> labeling;                    // labeling[old] = canonical label
    std::vector<std::vector<int>> automorphisms;  // generators discovered during search
};

// Canonical labeling by individualization-refinement: iterated equitable
// partition refinement with backtracking over cell splits, pruned by
// automorphisms that fix the individualized prefix pointwise.
CanonResult canonicalize(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// Full automorphism group, enumerated as the closure of the generators found
// by canonicalize(). Throws if the group exceeds `cap` elements.
std::vector<std::vector<int>> automorphism_group(const Graph& g, std::size_t cap = 1000000);

}  // namespace pack8
