#pragma once

#include <vector>

#include "pack8/graph.hpp"

namespace pack8 {

// True iff some vertex has an open neighborhood whose induced subgraph
// contains a cycle (equivalently, the graph contains a wheel subgraph or a
// cycle whose vertices share a common neighbor).
bool has_wheel_subgraph(const Graph& g);

bool is_biconnected(const Graph& g);

// True iff removing every vertex pair leaves the graph connected.
// Requires a connected graph of order >= 4.
bool is_triconnected(const Graph& g);

// All graphs (connected or not) of the given order with max degree <= max_deg,
// one canonical representative per isomorphism class. Generated order by
// order: every such graph arises by adding one vertex to a smaller one.
std::vector<Graph> all_graphs_max_degree(int order, int max_deg);

// One representative per isomorphism class of connected graphs with
// order in {6,7,8}, min degree >= 3 and max degree <= 5, sorted by
// canonical form.
std::vector<Graph> generate_gamma0();

}  // namespace pack8
