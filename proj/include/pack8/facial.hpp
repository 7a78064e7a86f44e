#pragma once

#include <vector>

#include "pack8/embedding.hpp"
#include "pack8/graph.hpp"

namespace pack8 {

// Embedding-set convention. The published stage counts fix kPaper:
// triconnected graphs contribute their unique embedding modulo reflection,
// biconnected graphs contribute every SPQR composition (no reflection
// quotient applied; compare the four drawings of a biconnected example that
// accompany the SPQR construction).
enum class EmbeddingConvention {
    kPaper,
    kReflection,             // one per mirror pair for every graph
    kReflectionAutomorphism, // additionally quotient by graph automorphisms
    kRaw                     // every rotation system
};

struct EnumerateOptions {
    EmbeddingConvention convention = EmbeddingConvention::kPaper;
    bool involution_aware = true;  // restrict automorphisms to involution-commuting ones
};

std::vector<Embedding> enumerate_embeddings(const Graph& g, const std::vector<int>& involution,
                                            const EnumerateOptions& opt = {});

// Facial admissibility of a contact-graph candidate embedding:
//   (a) every face has length at most 6;
//   (b) no face is incident to both members of an antipodal pair;
//   (c) at least 16 - order hexagonal faces (one per isolated vertex of the
//       eventual 16-point packing).
bool facial_filter(const Embedding& e);

}  // namespace pack8
