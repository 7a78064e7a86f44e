#pragma once

#include <vector>

#include "pack8/graph.hpp"

namespace pack8 {

// SPQR tree of a biconnected graph: skeletons are bonds (P), cycles (S) or
// triconnected simple graphs (R), glued pairwise along twin virtual edges.
struct SpqrTree {
    struct Edge {
        int u = -1, v = -1;
        int real_id = -1;     // index into graph.edges(), or -1 for virtual
        int virtual_id = -1;  // pairs the two copies of a virtual edge, or -1
    };
    struct Node {
        char type = '?';  // 'S', 'P' or 'R'
        std::vector<Edge> edges;
        std::vector<int> vertices;  // original labels, sorted
    };
    std::vector<Node> nodes;

    int node_count(char type) const {
        int c = 0;
        for (const auto& n : nodes)
            if (n.type == type) ++c;
        return c;
    }
};

// Recursive split-pair decomposition followed by merging of adjacent bonds
// and adjacent polygons. Requires a biconnected simple graph of order >= 3.
SpqrTree build_spqr(const Graph& g);

// Reconstruct the original graph by gluing skeletons along virtual edges
// (for verification).
Graph glue_spqr(const SpqrTree& t, int order);

// All planar rotation systems of a biconnected planar graph, one per
// combinatorial embedding (no quotient applied): one orientation choice per
// R skeleton, one cyclic edge order per P skeleton.
std::vector<std::vector<std::vector<int>>> all_planar_rotations(const Graph& g);

}  // namespace pack8
