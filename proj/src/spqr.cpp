#include "pack8/spqr.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pack8/embedding.hpp"
#include "pack8/gamma0.hpp"
#include "pack8/planarity.hpp"

namespace pack8 {

namespace {

using SEdge = SpqrTree::Edge;

struct Comp {
    std::vector<SEdge> edges;

    std::vector<int> vertex_list() const {
        std::set<int> vs;
        for (const auto& e : edges) {
            vs.insert(e.u);
            vs.insert(e.v);
        }
        return {vs.begin(), vs.end()};
    }
};

int degree_in(const Comp& c, int v) {
    int d = 0;
    for (const auto& e : c.edges) d += (e.u == v) + (e.v == v);
    return d;
}

bool is_bond(const Comp& c) { return c.vertex_list().size() == 2; }

bool is_cycle(const Comp& c) {
    auto vs = c.vertex_list();
    if (vs.size() < 3 || c.edges.size() != vs.size()) return false;
    for (int v : vs)
        if (degree_in(c, v) != 2) return false;
    return true;  // connected because it came from splitting a biconnected graph
}

// Separation classes of the pair (u,v): edges equivalent when joined by a
// path avoiding u and v internally. Direct u-v edges are singletons.
std::vector<std::vector<int>> separation_classes(const Comp& c, int u, int v) {
    int m = static_cast<int>(c.edges.size());
    std::vector<int> uf(m);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    std::map<int, int> first_at;  // interior vertex -> first incident edge
    for (int e = 0; e < m; ++e) {
        for (int w : {c.edges[e].u, c.edges[e].v}) {
            if (w == u || w == v) continue;
            auto [it, fresh] = first_at.emplace(w, e);
            if (!fresh) uf[find(e)] = find(it->second);
        }
    }
    std::map<int, std::vector<int>> by_root;
    for (int e = 0; e < m; ++e) by_root[find(e)].push_back(e);
    std::vector<std::vector<int>> out;
    for (auto& [root, es] : by_root) out.push_back(std::move(es));
    return out;
}

class Decomposer {
public:
    explicit Decomposer(const Graph& g) : g_(g) {
        Comp whole;
        auto es = g.edges();
        for (std::size_t i = 0; i < es.size(); ++i)
            whole.edges.push_back({es[i].first, es[i].second, static_cast<int>(i), -1});
        split(std::move(whole));
        merge();
    }

    std::vector<Comp> take() { return std::move(final_); }

private:
    void split(Comp c) {
        auto vs = c.vertex_list();
        if (vs.size() == 2 || is_cycle(c)) {
            final_.push_back(std::move(c));
            return;
        }
        // Parallel bundle: split it off as a bond.
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
            for (std::size_t j = i + 1; j < c.edges.size(); ++j) {
                int a = c.edges[i].u, b = c.edges[i].v;
                if ((c.edges[j].u == a && c.edges[j].v == b) ||
                    (c.edges[j].u == b && c.edges[j].v == a)) {
                    Comp bond, rest;
                    for (const auto& e : c.edges) {
                        if ((e.u == a && e.v == b) || (e.u == b && e.v == a))
                            bond.edges.push_back(e);
                        else
                            rest.edges.push_back(e);
                    }
                    int vid = next_virtual_++;
                    bond.edges.push_back({a, b, -1, vid});
                    rest.edges.push_back({a, b, -1, vid});
                    final_.push_back(std::move(bond));
                    split(std::move(rest));
                    return;
                }
            }
        }
        // Simple component: look for a separation pair.
        for (std::size_t x = 0; x < vs.size(); ++x) {
            for (std::size_t y = x + 1; y < vs.size(); ++y) {
                int u = vs[x], v = vs[y];
                auto classes = separation_classes(c, u, v);
                if (classes.size() < 2) continue;
                if (classes.size() == 2 &&
                    (classes[0].size() < 2 || classes[1].size() < 2))
                    continue;
                std::size_t pick = 0;
                while (classes[pick].size() < 2) ++pick;
                std::vector<bool> in_pick(c.edges.size(), false);
                for (int e : classes[pick]) in_pick[e] = true;
                Comp c1, c2;
                for (std::size_t e = 0; e < c.edges.size(); ++e)
                    (in_pick[e] ? c1 : c2).edges.push_back(c.edges[e]);
                int vid = next_virtual_++;
                c1.edges.push_back({u, v, -1, vid});
                c2.edges.push_back({u, v, -1, vid});
                split(std::move(c1));
                split(std::move(c2));
                return;
            }
        }
        final_.push_back(std::move(c));  // triconnected
    }

    void merge() {
        // Merge components joined by a twin pair when both are bonds or both
        // are cycles; the result stays a bond or a cycle.
        bool changed = true;
        while (changed) {
            changed = false;
            std::map<int, std::vector<std::size_t>> where;
            for (std::size_t i = 0; i < final_.size(); ++i)
                for (const auto& e : final_[i].edges)
                    if (e.virtual_id >= 0) where[e.virtual_id].push_back(i);
            for (const auto& [vid, locs] : where) {
                if (locs.size() != 2) throw std::logic_error("virtual edge without twin");
                std::size_t a = locs[0], b = locs[1];
                if (a == b) throw std::logic_error("virtual twins in one component");
                bool bonds = is_bond(final_[a]) && is_bond(final_[b]);
                bool cycles = is_cycle(final_[a]) && is_cycle(final_[b]);
                if (!bonds && !cycles) continue;
                Comp merged;
                for (const auto& e : final_[a].edges)
                    if (e.virtual_id != vid) merged.edges.push_back(e);
                for (const auto& e : final_[b].edges)
                    if (e.virtual_id != vid) merged.edges.push_back(e);
                final_[a] = std::move(merged);
                final_.erase(final_.begin() + b);
                changed = true;
                break;
            }
        }
    }

    const Graph& g_;
    int next_virtual_ = 0;
    std::vector<Comp> final_;
};

Graph comp_as_graph(const Comp& c, std::vector<int>& local_of) {
    auto vs = c.vertex_list();
    std::map<int, int> local;
    for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(vs.size()));
    for (const auto& e : c.edges) g.add_edge(local[e.u], local[e.v]);
    local_of.assign(vs.begin(), vs.end());
    return g;
}

}  // namespace

SpqrTree build_spqr(const Graph& g) {
    if (g.order() < 3) throw std::invalid_argument("build_spqr needs order >= 3");
    if (!is_biconnected(g)) throw std::invalid_argument("build_spqr needs a biconnected graph");
    Decomposer dec(g);
    SpqrTree t;
    for (Comp& c : dec.take()) {
        SpqrTree::Node node;
        node.vertices = c.vertex_list();
        node.edges = std::move(c.edges);
        if (node.vertices.size() == 2) {
            if (node.edges.size() < 3) throw std::logic_error("bond skeleton with < 3 edges");
            node.type = 'P';
        } else {
            bool cyc = true;
            Comp tmp{node.edges};
            cyc = is_cycle(tmp);
            if (cyc) {
                node.type = 'S';
            } else {
                node.type = 'R';
                std::vector<int> verts;
                Graph skel = comp_as_graph(tmp, verts);
                if (skel.edge_count() != static_cast<int>(node.edges.size()))
                    throw std::logic_error("R skeleton is not simple");
                if (!is_triconnected(skel)) throw std::logic_error("R skeleton not triconnected");
            }
        }
        t.nodes.push_back(std::move(node));
    }
    return t;
}

Graph glue_spqr(const SpqrTree& t, int order) {
    Graph g(order);
    std::set<int> virtuals;
    for (const auto& node : t.nodes)
        for (const auto& e : node.edges) {
            if (e.virtual_id >= 0)
                virtuals.insert(e.virtual_id);
            else
                g.add_edge(e.u, e.v);
        }
    if (virtuals.size() + 1 != t.nodes.size())
        throw std::logic_error("SPQR node/virtual count mismatch");
    return g;
}

namespace {

// Per-node embedding choices, as rotation systems over global skeleton-edge
// ids: S has one, P has (k-1)!, R has its two orientations.
struct NodeChoices {
    std::vector<std::map<int, std::vector<int>>> rotations;  // vertex -> gid cycle
};

}  // namespace

std::vector<std::vector<std::vector<int>>> all_planar_rotations(const Graph& g) {
    if (!is_planar(g)) throw std::invalid_argument("all_planar_rotations needs a planar graph");
    SpqrTree t = build_spqr(g);
    int nn = static_cast<int>(t.nodes.size());

    // Global ids for skeleton edges: (node << 8) | index.
    auto gid = [](int node, int idx) { return (node << 8) | idx; };
    struct ERec {
        int node, idx;
    };
    std::map<int, ERec> rec;
    std::map<int, std::pair<int, int>> twin_sides;  // virtual_id -> two gids
    for (int i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < t.nodes[i].edges.size(); ++j) {
            int id = gid(i, static_cast<int>(j));
            rec[id] = {i, static_cast<int>(j)};
            int vid = t.nodes[i].edges[j].virtual_id;
            if (vid >= 0) {
                auto [it, fresh] = twin_sides.emplace(vid, std::make_pair(id, -1));
                if (!fresh) it->second.second = id;
            }
        }

    std::vector<NodeChoices> choices(nn);
    for (int i = 0; i < nn; ++i) {
        const auto& node = t.nodes[i];
        if (node.type == 'S') {
            std::map<int, std::vector<int>> rot;
            for (std::size_t j = 0; j < node.edges.size(); ++j) {
                rot[node.edges[j].u].push_back(gid(i, static_cast<int>(j)));
                rot[node.edges[j].v].push_back(gid(i, static_cast<int>(j)));
            }
            choices[i].rotations.push_back(std::move(rot));
        } else if (node.type == 'P') {
            int u = node.vertices[0], v = node.vertices[1];
            int k = static_cast<int>(node.edges.size());
            std::vector<int> others;
            for (int j = 1; j < k; ++j) others.push_back(gid(i, j));
            std::sort(others.begin(), others.end());
            do {
                std::map<int, std::vector<int>> rot;
                rot[u].push_back(gid(i, 0));
                for (int id : others) rot[u].push_back(id);
                rot[v] = rot[u];
                std::reverse(rot[v].begin() + 1, rot[v].end());
                choices[i].rotations.push_back(std::move(rot));
            } while (std::next_permutation(others.begin(), others.end()));
        } else {  // R
            Comp tmp{t.nodes[i].edges};
            std::vector<int> verts;
            Graph skel = comp_as_graph(tmp, verts);
            auto emb = planar_embedding(skel);
            if (!emb) throw std::logic_error("R skeleton not planar");
            std::map<int, int> local;
            for (std::size_t j = 0; j < verts.size(); ++j) local[verts[j]] = static_cast<int>(j);
            // neighbor pair -> gid (skeleton is simple)
            std::map<std::pair<int, int>, int> edge_of;
            for (std::size_t j = 0; j < t.nodes[i].edges.size(); ++j) {
                const auto& e = t.nodes[i].edges[j];
                edge_of[{e.u, e.v}] = gid(i, static_cast<int>(j));
                edge_of[{e.v, e.u}] = gid(i, static_cast<int>(j));
            }
            for (int refl = 0; refl < 2; ++refl) {
                std::map<int, std::vector<int>> rot;
                for (std::size_t lv = 0; lv < verts.size(); ++lv) {
                    int v = verts[lv];
                    auto cyc = (*emb)[lv];
                    if (refl) std::reverse(cyc.begin(), cyc.end());
                    for (int lw : cyc) rot[v].push_back(edge_of.at({v, verts[lw]}));
                }
                choices[i].rotations.push_back(std::move(rot));
            }
        }
    }

    // Odometer over per-node choices; compose each combination by splicing
    // child skeletons into the growing rotation at twin virtual edges.
    std::vector<std::size_t> pick(nn, 0);
    std::vector<std::vector<std::vector<int>>> out;
    auto edge_list = g.edges();
    for (;;) {
        std::map<int, std::vector<int>> cur = choices[0].rotations[pick[0]];
        std::vector<bool> merged(nn, false);
        merged[0] = true;
        bool progress = true;
        while (progress) {
            progress = false;
            int found_vid = -1, host_gid = -1;
            for (const auto& [v, cyc] : cur) {
                for (int id : cyc) {
                    int vid = t.nodes[rec[id].node].edges[rec[id].idx].virtual_id;
                    if (vid >= 0) {
                        int other = twin_sides[vid].first == id ? twin_sides[vid].second
                                                                : twin_sides[vid].first;
                        if (!merged[rec[other].node]) {
                            found_vid = vid;
                            host_gid = id;
                            break;
                        }
                    }
                }
                if (found_vid >= 0) break;
            }
            if (found_vid < 0) break;
            int other_gid = twin_sides[found_vid].first == host_gid ? twin_sides[found_vid].second
                                                                    : twin_sides[found_vid].first;
            int bnode = rec[other_gid].node;
            const auto& brot = choices[bnode].rotations[pick[bnode]];
            const auto& be = t.nodes[bnode].edges[rec[other_gid].idx];
            for (int endpoint : {be.u, be.v}) {
                const auto& bcyc = brot.at(endpoint);
                std::size_t at = std::find(bcyc.begin(), bcyc.end(), other_gid) - bcyc.begin();
                std::vector<int> insert;
                for (std::size_t s = 1; s < bcyc.size(); ++s)
                    insert.push_back(bcyc[(at + s) % bcyc.size()]);
                auto& hcyc = cur[endpoint];
                std::size_t hat = std::find(hcyc.begin(), hcyc.end(), host_gid) - hcyc.begin();
                hcyc.erase(hcyc.begin() + hat);
                hcyc.insert(hcyc.begin() + hat, insert.begin(), insert.end());
            }
            for (const auto& [v, cyc] : brot)
                if (v != be.u && v != be.v) cur[v] = cyc;
            merged[bnode] = true;
            progress = true;
        }

        // Convert gid cycles to neighbor cycles; remaining ids must be real.
        std::vector<std::vector<int>> rot(g.order());
        for (const auto& [v, cyc] : cur) {
            for (int id : cyc) {
                const auto& e = t.nodes[rec[id].node].edges[rec[id].idx];
                if (e.real_id < 0) throw std::logic_error("unresolved virtual edge");
                auto [a, b] = edge_list[e.real_id];
                rot[v].push_back(a == v ? b : a);
            }
        }
        if (embedding_genus(g, rot) != 0) throw std::logic_error("composed embedding not planar");
        out.push_back(normalize_rotation(rot));

        // Advance odometer.
        int pos = nn - 1;
        while (pos >= 0) {
            if (++pick[pos] < choices[pos].rotations.size()) break;
            pick[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    // Paranoia: the composition theory says distinct choices give distinct
    // rotation systems; dedup anyway so downstream counts cannot double.
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace pack8
