#pragma once

#include <optional>
#include <vector>

#include "pack8/graph.hpp"

namespace pack8 {

bool is_planar(const Graph& g);

// A planar rotation system (cyclic neighbor order per vertex) for g, or
// nullopt if g is not planar. For a triconnected g this is the unique
// embedding up to reflection.
std::optional<std::vector<std::vector<int>>> planar_embedding(const Graph& g);

}  // namespace pack8
