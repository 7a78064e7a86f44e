#pragma once

#include <array>
#include <vector>

#include "pack8/embedding.hpp"
#include "pack8/graph.hpp"

namespace pack8 {

// Corner bookkeeping for one embedding. A corner is the ccw wedge at a
// vertex between two rotation-consecutive edges; corners are in bijection
// with darts, and the corner (v, i) spans from rotation[v][i] to
// rotation[v][i+1]. Face interior angles, dart direction angles and path
// wedges are all sums of corners.
class CornerLayout {
public:
    explicit CornerLayout(const Embedding& e);

    const Embedding& embedding() const { return *e_; }
    int corner_count() const { return static_cast<int>(corner_vertex_.size()); }
    int vertex_of(int corner) const { return corner_vertex_[corner]; }
    int corner_id(int vertex, int rot_index) const { return first_corner_[vertex] + rot_index; }

    // Corners at a vertex, in rotation order.
    std::vector<int> corners_at(int vertex) const;

    // Corners of face f, in trace order (face_corners()[f][k] is the interior
    // angle at the k-th traced vertex).
    const std::vector<std::vector<int>>& face_corners() const { return face_corners_; }

    // The ccw wedge at `vertex` from neighbor `from` to neighbor `to`:
    // list of corner ids whose angles sum to it.
    std::vector<int> wedge(int vertex, int from, int to) const;

    // Antipodal 4-paths: for each, the narrow-side wedge corner sets for the
    // three interior turning angles (alpha at p1, beta at p2, gamma at p3),
    // plus the complementary sides.
    struct PathWedges {
        std::array<int, 5> vertices;
        std::array<std::vector<int>, 3> ccw;  // ccw wedges at p1,p2,p3
        std::array<std::vector<int>, 3> cw;   // complementary wedges
    };
    const std::vector<PathWedges>& antipodal_paths() const { return paths_; }

    // Faces by length.
    std::vector<int> faces_of_length(std::size_t len) const;

private:
    const Embedding* e_;
    std::vector<int> corner_vertex_;
    std::vector<int> first_corner_;
    std::vector<std::vector<int>> rot_pos_;  // vertex -> neighbor -> rotation index (dense map)
    std::vector<std::vector<int>> face_corners_;
    std::vector<PathWedges> paths_;
};

}  // namespace pack8
