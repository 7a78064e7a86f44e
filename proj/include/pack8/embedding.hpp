#pragma once

#include <string>
#include <vector>

#include "pack8/graph.hpp"

namespace pack8 {

// Combinatorial embedding: counterclockwise cyclic neighbor order per vertex,
// plus the traced face list. Faces are recomputed from the rotation; the
// rotation is the normative data.
struct Embedding {
    Graph graph;
    std::vector<std::vector<int>> rotation;  // rotation[v] = ccw neighbor cycle
    std::vector<int> involution;             // antipodal pairing (may be empty)
    std::vector<std::vector<std::pair<int, int>>> faces;  // darts (u,v)
};

// Trace the faces of a rotation system. Convention: the face to the left of
// dart u->v is traced; the dart after (u,v) is (v,w) where w is the rotation
// successor of u at v.
std::vector<std::vector<std::pair<int, int>>> trace_faces(
    const Graph& g, const std::vector<std::vector<int>>& rotation);

// Genus from Euler's formula; 0 for a planar (sphere) embedding.
int embedding_genus(const Graph& g, const std::vector<std::vector<int>>& rotation);

// Reverse every vertex's cyclic order (mirror image).
std::vector<std::vector<int>> reflect_rotation(const std::vector<std::vector<int>>& rotation);

// Rotate each vertex cycle to start at its smallest neighbor, the canonical
// representative of the cyclic order.
std::vector<std::vector<int>> normalize_rotation(const std::vector<std::vector<int>>& rotation);

// Apply a graph automorphism to a rotation system: the image embedding has
// rot'[sigma(v)] = sigma(rot[v]).
std::vector<std::vector<int>> apply_automorphism(const std::vector<std::vector<int>>& rotation,
                                                 const std::vector<int>& sigma);

// A string encoding of a rotation system with each vertex cycle normalized to
// start at its smallest neighbor. Equal strings <=> equal embeddings of the
// labeled graph.
std::string rotation_code(const std::vector<std::vector<int>>& rotation);

enum class EmbeddingQuotient {
    kNone,                  // labeled rotation systems
    kReflection,            // modulo reflection
    kReflectionAutomorphism // modulo reflection and graph automorphism
};

// Minimum rotation_code over the chosen quotient group. `automorphisms`
// must contain the full group when automorphism quotient is requested
// (only involution-compatible members are used when `involution_aware`).
std::string embedding_class_key(const Graph& g, const std::vector<std::vector<int>>& rotation,
                                const std::vector<std::vector<int>>& automorphisms,
                                const std::vector<int>& involution, EmbeddingQuotient quotient,
                                bool involution_aware);

}  // namespace pack8
