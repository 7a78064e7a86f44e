#include "pack8/embedding.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pack8 {

std::vector<std::vector<std::pair<int, int>>> trace_faces(
    const Graph& g, const std::vector<std::vector<int>>& rotation) {
    int n = g.order();
    // Position of u within rotation[v], for O(1) successor lookup.
    std::vector<std::map<int, int>> pos(n);
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rotation[v].size(); ++i) pos[v][rotation[v][i]] = static_cast<int>(i);

    std::vector<std::vector<std::pair<int, int>>> faces;
    std::map<std::pair<int, int>, bool> used;
    for (int u = 0; u < n; ++u) {
        for (int v : rotation[u]) {
            if (used[{u, v}]) continue;
            std::vector<std::pair<int, int>> face;
            int a = u, b = v;
            do {
                face.emplace_back(a, b);
                used[{a, b}] = true;
                const auto& rv = rotation[b];
                int i = pos[b].at(a);
                int w = rv[(i + 1) % rv.size()];
                a = b;
                b = w;
            } while (!(a == u && b == v));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

int embedding_genus(const Graph& g, const std::vector<std::vector<int>>& rotation) {
    int f = static_cast<int>(trace_faces(g, rotation).size());
    int euler = g.order() - g.edge_count() + f;
    if ((2 - euler) % 2 != 0) throw std::logic_error("odd Euler defect");
    return (2 - euler) / 2;
}

std::vector<std::vector<int>> reflect_rotation(const std::vector<std::vector<int>>& rotation) {
    auto out = rotation;
    for (auto& cyc : out) std::reverse(cyc.begin(), cyc.end());
    return out;
}

std::vector<std::vector<int>> normalize_rotation(const std::vector<std::vector<int>>& rotation) {
    auto out = rotation;
    for (auto& cyc : out) {
        if (cyc.empty()) continue;
        std::size_t start = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
        std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());
    }
    return out;
}

std::vector<std::vector<int>> apply_automorphism(const std::vector<std::vector<int>>& rotation,
                                                 const std::vector<int>& sigma) {
    std::vector<std::vector<int>> out(rotation.size());
    for (std::size_t v = 0; v < rotation.size(); ++v) {
        auto& cyc = out[sigma[v]];
        cyc.reserve(rotation[v].size());
        for (int w : rotation[v]) cyc.push_back(sigma[w]);
    }
    return out;
}

std::string rotation_code(const std::vector<std::vector<int>>& rotation) {
    std::ostringstream os;
    for (const auto& cyc : rotation) {
        if (cyc.empty()) {
            os << ";";
            continue;
        }
        std::size_t start = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            os << cyc[(start + i) % cyc.size()] << ",";
        }
        os << ";";
    }
    return os.str();
}

std::string embedding_class_key(const Graph& g, const std::vector<std::vector<int>>& rotation,
                                const std::vector<std::vector<int>>& automorphisms,
                                const std::vector<int>& involution, EmbeddingQuotient quotient,
                                bool involution_aware) {
    if (quotient == EmbeddingQuotient::kNone) return rotation_code(rotation);

    std::vector<std::vector<int>> group;
    if (quotient == EmbeddingQuotient::kReflectionAutomorphism) {
        for (const auto& sigma : automorphisms) {
            if (involution_aware && !involution.empty()) {
                bool commutes = true;
                for (int v = 0; v < g.order(); ++v)
                    if (sigma[involution[v]] != involution[sigma[v]]) {
                        commutes = false;
                        break;
                    }
                if (!commutes) continue;
            }
            group.push_back(sigma);
        }
    } else {
        std::vector<int> identity(g.order());
        for (int v = 0; v < g.order(); ++v) identity[v] = v;
        group.push_back(identity);
    }

    std::string best;
    for (const auto& sigma : group) {
        auto r = apply_automorphism(rotation, sigma);
        for (int refl = 0; refl < 2; ++refl) {
            std::string code = rotation_code(refl ? reflect_rotation(r) : r);
            if (best.empty() || code < best) best = code;
        }
    }
    return best;
}

}  // namespace pack8
