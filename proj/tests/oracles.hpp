// Test-only brute-force oracles, independent of the implementation paths they
// check.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "pack8/embedding.hpp"
#include "pack8/graph.hpp"

namespace pack8::oracle {

// Isomorphism by trying all |V|! vertex bijections. Only for small orders.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// All labeled graphs on n vertices (2^(n(n-1)/2) of them) via the bitmask of
// the upper triangle.
inline Graph labeled_graph(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1ull) g.add_edge(u, v);
    return g;
}

// Every rotation system of g (product over vertices of (deg-1)! cyclic
// orders), passed to `fn`. The first neighbor of each vertex is pinned, which
// enumerates each cyclic order exactly once.
template <class Fn>
void for_each_rotation_system(const Graph& g, Fn&& fn) {
    int n = g.order();
    std::vector<std::vector<int>> base(n);
    for (int v = 0; v < n; ++v) base[v] = g.neighbor_list(v);
    std::vector<std::vector<int>> rot = base;
    // Odometer over permutations of base[v][1..].
    std::vector<std::vector<int>> tails(n);
    for (int v = 0; v < n; ++v)
        tails[v] = std::vector<int>(base[v].begin() + (base[v].empty() ? 0 : 1), base[v].end());
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            fn(rot);
            return;
        }
        if (tails[v].size() <= 1) {
            rec(v + 1);
            return;
        }
        std::vector<int> t = tails[v];
        std::sort(t.begin(), t.end());
        do {
            rot[v].assign(1, base[v][0]);
            rot[v].insert(rot[v].end(), t.begin(), t.end());
            rec(v + 1);
        } while (std::next_permutation(t.begin(), t.end()));
        rot[v] = base[v];
    };
    rec(0);
}

// Planar rotation systems of g found by exhaustive search (genus filter).
inline std::vector<std::vector<std::vector<int>>> brute_planar_rotations(const Graph& g) {
    std::vector<std::vector<std::vector<int>>> out;
    for_each_rotation_system(g, [&](const std::vector<std::vector<int>>& rot) {
        if (embedding_genus(g, rot) == 0) out.push_back(rot);
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// The Figure-2 example graph (7 vertices a..g -> 0..6).
inline Graph figure2_graph() {
    // a=0 b=1 c=2 d=3 e=4 f=5 g=6
    Graph g(7);
    g.add_edge(4, 3);  // e-d
    g.add_edge(3, 1);  // d-b
    g.add_edge(1, 4);  // b-e
    g.add_edge(4, 5);  // e-f
    g.add_edge(5, 6);  // f-g
    g.add_edge(6, 2);  // g-c
    g.add_edge(6, 0);  // g-a
    g.add_edge(0, 2);  // a-c
    g.add_edge(1, 0);  // b-a
    g.add_edge(5, 2);  // f-c
    return g;
}

}  // namespace pack8::oracle
