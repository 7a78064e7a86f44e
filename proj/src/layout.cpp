#include "pack8/layout.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pack8 {

CornerLayout::CornerLayout(const Embedding& e) : e_(&e) {
    const Graph& g = e.graph;
    int n = g.order();
    first_corner_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        first_corner_[v + 1] = first_corner_[v] + static_cast<int>(e.rotation[v].size());
    corner_vertex_.resize(first_corner_[n]);
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < e.rotation[v].size(); ++i)
            corner_vertex_[first_corner_[v] + i] = v;

    rot_pos_.assign(n, std::vector<int>(n, -1));
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < e.rotation[v].size(); ++i)
            rot_pos_[v][e.rotation[v][i]] = static_cast<int>(i);

    // Assign corners to faces: consecutive darts (a->v), (v->b) in a face
    // trace have b = rotation-successor of a at v, so the face owns the
    // corner (v, pos_v(a)).
    face_corners_.resize(e.faces.size());
    for (std::size_t f = 0; f < e.faces.size(); ++f) {
        const auto& darts = e.faces[f];
        for (std::size_t k = 0; k < darts.size(); ++k) {
            auto [a, v] = darts[k];
            face_corners_[f].push_back(corner_id(v, rot_pos_[v][a]));
        }
        // Rotate so entry k is the corner at the k-th dart tail.
        std::rotate(face_corners_[f].begin(), face_corners_[f].begin() + 1,
                    face_corners_[f].end());
    }

    // Antipodal 4-paths.
    if (!e.involution.empty()) {
        std::set<std::vector<int>> seen;
        for (int v = 0; v < n; ++v) {
            int target = e.involution[v];
            for (int p1 : g.neighbor_list(v)) {
                for (int p2 : g.neighbor_list(p1)) {
                    if (p2 == v) continue;
                    for (int p3 : g.neighbor_list(p2)) {
                        if (p3 == p1 || p3 == v) continue;
                        if (!g.has_edge(p3, target) || target == p2 || target == p1) continue;
                        std::vector<int> key{v, p1, p2, p3, target};
                        std::vector<int> rev{target, p3, p2, p1, v};
                        if (seen.count(key) || seen.count(rev)) continue;
                        seen.insert(key);
                        PathWedges pw;
                        pw.vertices = {v, p1, p2, p3, target};
                        int through[3][3] = {{p1, v, p2}, {p2, p1, p3}, {p3, p2, target}};
                        for (int t = 0; t < 3; ++t) {
                            pw.ccw[t] = wedge(through[t][0], through[t][1], through[t][2]);
                            pw.cw[t] = wedge(through[t][0], through[t][2], through[t][1]);
                        }
                        paths_.push_back(std::move(pw));
                    }
                }
            }
        }
    }
}

std::vector<int> CornerLayout::corners_at(int vertex) const {
    std::vector<int> out;
    for (int c = first_corner_[vertex]; c < first_corner_[vertex + 1]; ++c) out.push_back(c);
    return out;
}

std::vector<int> CornerLayout::wedge(int vertex, int from, int to) const {
    const auto& rot = e_->rotation[vertex];
    int d = static_cast<int>(rot.size());
    int i = rot_pos_[vertex][from];
    int j = rot_pos_[vertex][to];
    if (i < 0 || j < 0 || i == j) throw std::invalid_argument("wedge endpoints not distinct neighbors");
    std::vector<int> out;
    for (int k = i; k % d != j; ++k) out.push_back(corner_id(vertex, k % d));
    return out;
}

std::vector<int> CornerLayout::faces_of_length(std::size_t len) const {
    std::vector<int> out;
    for (std::size_t f = 0; f < face_corners_.size(); ++f)
        if (face_corners_[f].size() == len) out.push_back(static_cast<int>(f));
    return out;
}

}  // namespace pack8
