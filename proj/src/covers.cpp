#include "pack8/covers.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "pack8/gamma0.hpp"
#include "pack8/planarity.hpp"

namespace pack8 {

DoubleCover lift(const Graph& base, std::uint32_t signs) {
    int n = base.order();
    Graph cover(2 * n);
    auto es = base.edges();
    for (std::size_t e = 0; e < es.size(); ++e) {
        auto [v, w] = es[e];
        if ((signs >> e) & 1u) {
            cover.add_edge(v, w + n);
            cover.add_edge(v + n, w);
        } else {
            cover.add_edge(v, w);
            cover.add_edge(v + n, w + n);
        }
    }
    DoubleCover c;
    c.graph = cover;
    c.involution.resize(2 * n);
    for (int v = 0; v < n; ++v) {
        c.involution[v] = v + n;
        c.involution[v + n] = v;
    }
    c.base = base;
    return c;
}

std::vector<DoubleCover> enumerate_double_covers(const Graph& base) {
    int m = base.edge_count();
    if (m > 25) throw std::invalid_argument("too many edges for exhaustive cover enumeration");
    std::vector<DoubleCover> out;
    out.reserve(1u << m);
    for (std::uint32_t s = 0; s < (1u << m); ++s) out.push_back(lift(base, s));
    return out;
}

Graph quotient(const DoubleCover& c) {
    int n2 = c.graph.order();
    // Representative of each pair = smaller label; relabel compactly.
    std::vector<int> rep(n2, -1);
    int k = 0;
    for (int v = 0; v < n2; ++v)
        if (v < c.involution[v]) rep[v] = k++;
    Graph q(k);
    for (auto [u, v] : c.graph.edges()) {
        int a = rep[std::min(u, c.involution[u])];
        int b = rep[std::min(v, c.involution[v])];
        if (a != b && !q.has_edge(a, b)) q.add_edge(a, b);
    }
    return q;
}

bool antipodal_girth_ok(const Graph& cover, const std::vector<int>& involution) {
    for (int v = 0; v < cover.order(); ++v) {
        int d = cover.bfs_distance(v, involution[v]);
        if (d >= 0 && d < 4) return false;
    }
    return true;
}

bool antipodal_girth_ok(const DoubleCover& c) { return antipodal_girth_ok(c.graph, c.involution); }

namespace {

Graph involution_marked(const Graph& g, const std::vector<int>& involution) {
    int n = g.order();
    Graph aug(n + n / 2);
    for (auto [u, v] : g.edges()) aug.add_edge(u, v);
    int marker = n;
    for (int v = 0; v < n; ++v) {
        int w = involution[v];
        if (w <= v) continue;
        if (g.has_edge(v, w))
            throw std::invalid_argument("antipodal pair is adjacent; pairing cannot be marked");
        aug.add_edge(marker, v);
        aug.add_edge(marker, w);
        ++marker;
    }
    return aug;
}

}  // namespace

CanonicalForm paired_canonical_form(const Graph& g, const std::vector<int>& involution) {
    return canonical_form(involution_marked(g, involution));
}

void paired_canonical_relabel(Graph& g, std::vector<int>& involution) {
    int n = g.order();
    auto res = canonicalize(involution_marked(g, involution));
    // Restrict the canonical order of the marked graph to the original
    // vertices; marker vertices only fix the pairing.
    std::vector<std::pair<int, int>> ranked;  // (canonical pos, vertex)
    for (int v = 0; v < n; ++v) ranked.emplace_back(res.labeling[v], v);
    std::sort(ranked.begin(), ranked.end());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[ranked[i].second] = i;
    Graph out = g.relabeled(perm);
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = perm[involution[v]];
    g = out;
    involution = inv;
}

namespace {

// A valid antipodal structure never pairs adjacent vertices and never maps an
// edge onto a parallel copy in the quotient.
bool involution_gives_simple_quotient(const Graph& g, const std::vector<int>& phi) {
    for (int v = 0; v < g.order(); ++v)
        if (g.has_edge(v, phi[v])) return false;
    for (auto [a, b] : g.edges())
        if (g.has_edge(a, phi[b])) return false;
    return true;
}

bool admits_multiple_involutions(const Graph& g, const std::vector<int>& stored) {
    std::vector<std::vector<int>> group;
    try {
        group = automorphism_group(g, 200000);
    } catch (const std::runtime_error&) {
        return true;  // group too large to scan; flag for manual review
    }
    CanonicalForm stored_key = paired_canonical_form(g, stored);
    for (const auto& phi : group) {
        bool fpf_involution = true;
        for (int v = 0; v < g.order(); ++v) {
            if (phi[v] == v || phi[phi[v]] != v) {
                fpf_involution = false;
                break;
            }
        }
        if (!fpf_involution || !involution_gives_simple_quotient(g, phi)) continue;
        if (paired_canonical_form(g, phi) != stored_key) return true;
    }
    return false;
}

struct BaseResult {
    // canonical form -> (canonical graph, involution in canonical labels)
    std::map<CanonicalForm, Gamma1Member> members;
};

void process_base(const Graph& base, bool switching_reduction, BaseResult& out) {
    int n = base.order();
    int m = base.edge_count();
    auto es = base.edges();

    std::vector<std::uint32_t> assignments;
    if (switching_reduction) {
        // Signs related by a switching (flipping all edges across a vertex
        // cut) give isomorphic covers, so fix a BFS spanning tree's edges to
        // the parallel lift and enumerate only the cotree edges.
        std::vector<int> parent(n, -2);
        std::vector<int> order;
        parent[0] = -1;
        order.push_back(0);
        for (std::size_t h = 0; h < order.size(); ++h) {
            int v = order[h];
            for (int w : base.neighbor_list(v))
                if (parent[w] == -2) {
                    parent[w] = v;
                    order.push_back(w);
                }
        }
        std::vector<int> cotree;
        for (std::size_t e = 0; e < es.size(); ++e) {
            auto [u, v] = es[e];
            if (parent[u] != v && parent[v] != u) cotree.push_back(static_cast<int>(e));
        }
        for (std::uint32_t c = 0; c < (1u << cotree.size()); ++c) {
            std::uint32_t signs = 0;
            for (std::size_t i = 0; i < cotree.size(); ++i)
                if ((c >> i) & 1u) signs |= 1u << cotree[i];
            assignments.push_back(signs);
        }
    } else {
        for (std::uint32_t s = 0; s < (1u << m); ++s) assignments.push_back(s);
    }

    for (std::uint32_t signs : assignments) {
        DoubleCover c = lift(base, signs);
        if (!c.graph.is_connected()) continue;
        if (!antipodal_girth_ok(c)) continue;
        if (has_wheel_subgraph(c.graph)) continue;
        if (!is_planar(c.graph)) continue;
        // One copy per double cover: covers are the same when some graph
        // isomorphism carries one antipodal pairing to the other.
        CanonicalForm key = paired_canonical_form(c.graph, c.involution);
        if (out.members.count(key)) continue;
        Gamma1Member mem;
        mem.graph = c.graph;
        mem.involution = c.involution;
        paired_canonical_relabel(mem.graph, mem.involution);
        mem.base_order = n;
        mem.multiple_involutions = false;
        out.members.emplace(key, std::move(mem));
    }
}

}  // namespace

std::vector<Gamma1Member> build_gamma1(const std::vector<Graph>& gamma0, const Gamma1Options& opt) {
    std::vector<BaseResult> results(gamma0.size());
    int workers = std::max(1, opt.workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < gamma0.size(); ++i)
            process_base(gamma0[i], opt.switching_reduction, results[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= gamma0.size()) return;
                    process_base(gamma0[i], opt.switching_reduction, results[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    // Deterministic merge: base order, then canonical key.
    std::map<CanonicalForm, Gamma1Member> merged;
    for (const auto& r : results)
        for (const auto& [key, mem] : r.members) merged.emplace(key, mem);

    std::vector<Gamma1Member> out;
    out.reserve(merged.size());
    for (auto& [key, mem] : merged) {
        mem.multiple_involutions = admits_multiple_involutions(mem.graph, mem.involution);
        out.push_back(std::move(mem));
    }
    return out;
}

}  // namespace pack8
