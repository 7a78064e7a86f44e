#include "pack8/graph.hpp"

#include <bit>
#include <stdexcept>

namespace pack8 {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
    rows_.fill(0);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    rows_[u] |= 1u << v;
    rows_[v] |= 1u << u;
}

void Graph::remove_edge(int u, int v) {
    rows_[u] &= ~(1u << v);
    rows_[v] &= ~(1u << u);
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

int Graph::min_degree() const {
    int d = kMaxVertices;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> Graph::neighbor_list(int v) const {
    std::vector<int> out;
    for (std::uint32_t m = rows_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (std::uint32_t m = rows_[u] & ~((1u << (u + 1)) - 1); m; m &= m - 1)
            out.emplace_back(u, std::countr_zero(m));
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    return is_connected_on((n_ == 32) ? ~0u : ((1u << n_) - 1));
}

bool Graph::is_connected_on(std::uint32_t mask) const {
    if (mask == 0) return true;
    std::uint32_t seen = mask & (~mask + 1);  // lowest set bit
    for (;;) {
        std::uint32_t frontier = 0;
        for (std::uint32_t m = seen; m; m &= m - 1) frontier |= rows_[std::countr_zero(m)];
        frontier &= mask;
        std::uint32_t next = seen | frontier;
        if (next == seen) break;
        seen = next;
    }
    return seen == mask;
}

int Graph::bfs_distance(int u, int v) const {
    if (u == v) return 0;
    std::uint32_t seen = 1u << u;
    std::uint32_t frontier = seen;
    int dist = 0;
    while (frontier) {
        ++dist;
        std::uint32_t next = 0;
        for (std::uint32_t m = frontier; m; m &= m - 1) next |= rows_[std::countr_zero(m)];
        next &= ~seen;
        if ((next >> v) & 1u) return dist;
        seen |= next;
        frontier = next;
    }
    return -1;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    Graph out(n_);
    for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Graph Graph::induced(std::uint32_t mask) const {
    std::vector<int> map(n_, -1);
    int k = 0;
    for (int v = 0; v < n_; ++v)
        if ((mask >> v) & 1u) map[v] = k++;
    Graph out(k);
    for (auto [u, v] : edges())
        if (map[u] >= 0 && map[v] >= 0) out.add_edge(map[u], map[v]);
    return out;
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string s;
    s.push_back(static_cast<char>(63 + n));
    int bitpos = 0;
    int cur = 0;
    // Column-major upper triangle: pairs (0,1),(0,2),(1,2),(0,3),...
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bitpos == 6) {
                s.push_back(static_cast<char>(63 + cur));
                bitpos = 0;
                cur = 0;
            }
        }
    }
    if (bitpos > 0) s.push_back(static_cast<char>(63 + (cur << (6 - bitpos))));
    return s;
}

Graph from_graph6(const std::string& line) {
    if (line.empty()) throw std::invalid_argument("empty graph6 line");
    int n = line[0] - 63;
    if (n < 0 || n > Graph::kMaxVertices) throw std::invalid_argument("graph6 order out of range");
    Graph g(n);
    std::size_t idx = 1;
    int bitpos = 6;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bitpos == 6) {
                if (idx >= line.size()) throw std::invalid_argument("truncated graph6 line");
                cur = line[idx++] - 63;
                bitpos = 0;
            }
            if ((cur >> (5 - bitpos)) & 1) g.add_edge(i, j);
            ++bitpos;
        }
    }
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(v, v + 5);
        g.add_edge(v + 5, (v + 2) % 5 + 5);
    }
    return g;
}

Graph cube_graph() {
    Graph g(8);
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
    return g;
}

Graph icosahedron_graph() {
    // Antipodal labeling: vertex v is paired with v+6.
    Graph g(12);
    auto ring = [&](int a, int b) { g.add_edge(a, b); };
    // One of the standard constructions: two pentagonal rings around poles.
    // Poles 0 and 6; upper ring 1..5, lower ring 7..11 with 1+6=7 etc.
    for (int i = 0; i < 5; ++i) {
        ring(0, 1 + i);
        ring(6, 7 + i);
        ring(1 + i, 1 + (i + 1) % 5);
        ring(7 + i, 7 + (i + 1) % 5);
    }
    // Inter-ring edges: upper i adjacent to lower vertices not equal/adjacent
    // to its antipode 7+i: those are 7+(i+2)%5 and 7+(i+3)%5.
    for (int i = 0; i < 5; ++i) {
        ring(1 + i, 7 + (i + 2) % 5);
        ring(1 + i, 7 + (i + 3) % 5);
    }
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

}  // namespace pack8
