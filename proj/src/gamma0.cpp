#include "pack8/gamma0.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "pack8/canon.hpp"

namespace pack8 {

bool has_wheel_subgraph(const Graph& g) {
    int n = g.order();
    for (int v = 0; v < n; ++v) {
        std::uint32_t nb = g.neighbors(v);
        int verts = std::popcount(nb);
        if (verts < 3) continue;
        // The induced subgraph on nb contains a cycle iff
        // edges > verts - components.
        int edges = 0;
        for (std::uint32_t m = nb; m; m &= m - 1) {
            int u = std::countr_zero(m);
            edges += std::popcount(g.neighbors(u) & nb);
        }
        edges /= 2;
        int components = 0;
        std::uint32_t left = nb;
        while (left) {
            ++components;
            std::uint32_t seen = left & (~left + 1);
            for (;;) {
                std::uint32_t grow = seen;
                for (std::uint32_t m = seen; m; m &= m - 1)
                    grow |= g.neighbors(std::countr_zero(m)) & left;
                if (grow == seen) break;
                seen = grow;
            }
            left &= ~seen;
        }
        if (edges > verts - components) return true;
    }
    return false;
}

bool is_biconnected(const Graph& g) {
    int n = g.order();
    if (n < 3 || !g.is_connected()) return false;
    std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    for (int v = 0; v < n; ++v)
        if (!g.is_connected_on(all & ~(1u << v))) return false;
    return true;
}

bool is_triconnected(const Graph& g) {
    int n = g.order();
    if (n < 4) throw std::invalid_argument("is_triconnected requires order >= 4");
    if (!g.is_connected()) return false;
    std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.is_connected_on(all & ~(1u << u) & ~(1u << v))) return false;
    return true;
}

std::vector<Graph> all_graphs_max_degree(int order, int max_deg) {
    std::vector<Graph> current{Graph(1)};
    for (int k = 2; k <= order; ++k) {
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        std::vector<Graph> next;
        for (const Graph& g : current) {
            int n = g.order();
            // Candidate neighborhoods of the new vertex: subsets of vertices
            // of degree < max_deg, of size <= max_deg.
            std::uint32_t eligible = 0;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) < max_deg) eligible |= 1u << v;
            // Enumerate subsets of eligible (including the empty set).
            std::uint32_t s = 0;
            for (;;) {
                if (std::popcount(s) <= max_deg) {
                    Graph h(n + 1);
                    for (auto [a, b] : g.edges()) h.add_edge(a, b);
                    for (std::uint32_t m = s; m; m &= m - 1) h.add_edge(n, std::countr_zero(m));
                    auto res = canonicalize(h);
                    if (seen.insert(res.form).second) {
                        std::vector<int> perm = res.labeling;
                        next.push_back(h.relabeled(perm));
                    }
                }
                if (s == eligible) break;
                s = (s - eligible) & eligible;  // next subset of eligible
            }
        }
        current = std::move(next);
    }
    return current;
}

std::vector<Graph> generate_gamma0() {
    std::vector<Graph> out;
    for (int order = 6; order <= 8; ++order) {
        for (const Graph& g : all_graphs_max_degree(order, 5)) {
            if (g.min_degree() >= 3 && g.is_connected()) out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return canonical_form(a) < canonical_form(b);
    });
    return out;
}

}  // namespace pack8
