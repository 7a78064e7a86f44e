#include "pack8/facial.hpp"

#include <map>
#include <set>

#include "pack8/canon.hpp"
#include "pack8/gamma0.hpp"
#include "pack8/spqr.hpp"

namespace pack8 {

std::vector<Embedding> enumerate_embeddings(const Graph& g, const std::vector<int>& involution,
                                            const EnumerateOptions& opt) {
    auto rotations = all_planar_rotations(g);

    EmbeddingConvention conv = opt.convention;
    if (conv == EmbeddingConvention::kPaper) {
        bool tric = g.order() >= 4 && is_triconnected(g);
        conv = tric ? EmbeddingConvention::kReflection : EmbeddingConvention::kRaw;
    }

    std::vector<std::vector<int>> group;
    if (conv == EmbeddingConvention::kReflectionAutomorphism) group = automorphism_group(g);

    std::map<std::string, std::vector<std::vector<int>>> classes;
    for (auto& rot : rotations) {
        std::string key;
        switch (conv) {
            case EmbeddingConvention::kRaw:
                key = rotation_code(rot);
                break;
            case EmbeddingConvention::kReflection:
                key = embedding_class_key(g, rot, {}, involution, EmbeddingQuotient::kReflection,
                                          false);
                break;
            default:
                key = embedding_class_key(g, rot, group, involution,
                                          EmbeddingQuotient::kReflectionAutomorphism,
                                          opt.involution_aware);
        }
        auto [it, fresh] = classes.emplace(key, rot);
        if (!fresh && rotation_code(rot) < rotation_code(it->second)) it->second = rot;
    }

    std::vector<Embedding> out;
    for (auto& [key, rot] : classes) {
        Embedding e;
        e.graph = g;
        e.rotation = rot;
        e.involution = involution;
        e.faces = trace_faces(g, rot);
        out.push_back(std::move(e));
    }
    return out;
}

bool facial_filter(const Embedding& e) {
    int hexagons = 0;
    for (const auto& face : e.faces) {
        if (face.size() > 6) return false;
        if (face.size() == 6) ++hexagons;
        std::set<int> verts;
        for (auto [u, v] : face) verts.insert(u);
        for (int v : verts)
            if (verts.count(e.involution[v])) return false;
    }
    return hexagons >= 16 - e.graph.order();
}

}  // namespace pack8
