#pragma once

#include <cstdint>
#include <vector>

#include "pack8/canon.hpp"
#include "pack8/graph.hpp"

namespace pack8 {

// Antipodal double cover of a base graph: the cover lives on
// V x {0,1}, realized as vertices v and v+n, and the involution pairs
// v <-> v+n.
struct DoubleCover {
    Graph graph;                 // order 2n
    std::vector<int> involution; // involution[v] = antipodal partner
    Graph base;                  // the covered graph (order n)
};

// All 2^m sign assignments of the base's edges, as covers. Edge signs are
// taken in the order of base.edges(): bit e of `signs` set means the crossed
// lift {(v,0),(w,1)},{(v,1),(w,0)} for edge e.
DoubleCover lift(const Graph& base, std::uint32_t signs);
std::vector<DoubleCover> enumerate_double_covers(const Graph& base);

// Quotient of a cover by its involution; inverse of lift up to labeling.
Graph quotient(const DoubleCover& c);

// Every path between antipodal vertices must travel along at least 4 edges.
bool antipodal_girth_ok(const DoubleCover& c);
bool antipodal_girth_ok(const Graph& cover, const std::vector<int>& involution);

// Canonical form of the pair (graph, involution): the involution is encoded
// by subdividing each antipodal pair with a marker vertex, which keeps plain
// graph canonicalization applicable. Requires antipodal pairs non-adjacent.
CanonicalForm paired_canonical_form(const Graph& g, const std::vector<int>& involution);

// Deterministic canonical relabeling of the pair: equivalent pairs map to
// identical (graph, involution) values.
void paired_canonical_relabel(Graph& g, std::vector<int>& involution);

struct Gamma1Member {
    Graph graph;                  // canonical labels
    std::vector<int> involution;  // in canonical labels
    int base_order;
    bool multiple_involutions;    // admits inequivalent valid antipodal involutions
};

struct Gamma1Options {
    // Enumerate one representative per switching class (covers related by a
    // switching are isomorphic) instead of all 2^m assignments.
    bool switching_reduction = true;
    int workers = 1;
};

// Connected, planar, antipodal-girth-clean, wheel-free double covers of the
// given bases, one representative per isomorphism class of covers (pair
// isomorphism respecting the antipodal pairing), sorted by canonical form.
std::vector<Gamma1Member> build_gamma1(const std::vector<Graph>& gamma0,
                                       const Gamma1Options& opt = {});

}  // namespace pack8
