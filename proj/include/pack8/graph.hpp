#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pack8 {

// Undirected simple graph on vertices 0..n-1, n <= 32, stored as one
// adjacency bitmask row per vertex.
class Graph {
public:
    static constexpr int kMaxVertices = 32;

    Graph() : n_(0) { rows_.fill(0); }
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1u; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint32_t neighbors(int v) const { return rows_[v]; }
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    std::vector<int> neighbor_list(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    // Connectivity of the subgraph induced on `mask` (ignores vertices
    // outside the mask). An empty mask counts as connected.
    bool is_connected_on(std::uint32_t mask) const;

    // BFS distance between u and v, or -1 if unreachable.
    int bfs_distance(int u, int v) const;

    Graph relabeled(const std::vector<int>& perm) const;  // perm[old] = new
    Graph induced(std::uint32_t mask) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    int n_;
    std::array<std::uint32_t, kMaxVertices> rows_;
};

// graph6 text encoding (one line per graph, order <= 62 in general; this
// implementation handles order <= 32).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph cube_graph();         // 3-cube Q3
Graph icosahedron_graph();
Graph complete_bipartite(int a, int b);

}  // namespace pack8
