#include "pack8/canon.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace pack8 {

namespace {

using Perm = std::vector<int>;

CanonicalForm pack_key(const Graph& g, const Perm& labeling) {
    // labeling[old] = new; key bit order: pair (i,j), i<j in new labels,
    // row-major.
    int n = g.order();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[labeling[v]] = v;
    CanonicalForm key;
    key.n = static_cast<std::uint8_t>(n);
    int pos = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++pos) {
            if (g.has_edge(inv[i], inv[j])) key.bits[pos >> 6] |= 1ull << (pos & 63);
        }
    }
    return key;
}

// Ordered partition of 0..n-1 into cells; refinement keeps it equitable.
struct Partition {
    std::vector<std::vector<int>> cells;

    bool discrete() const {
        for (const auto& c : cells)
            if (c.size() > 1) return false;
        return true;
    }
};

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

    CanonResult run() {
        Partition p;
        std::vector<int> all(n_);
        for (int v = 0; v < n_; ++v) all[v] = v;
        p.cells.push_back(all);
        recurse(p, {});
        CanonResult out;
        out.form = best_key_;
        out.labeling = best_perm_;
        out.automorphisms = autos_;
        return out;
    }

private:
    void refine(Partition& p) const {
        // Equitable refinement: split cells by neighbor counts into the
        // splitter cell until stable. Cell replacement order is determined
        // by counts only, so the process is relabeling-invariant.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t w = 0; w < p.cells.size(); ++w) {
                std::uint32_t wmask = 0;
                for (int v : p.cells[w]) wmask |= 1u << v;
                for (std::size_t i = 0; i < p.cells.size(); ++i) {
                    auto& cell = p.cells[i];
                    if (cell.size() <= 1) continue;
                    int c0 = std::popcount(g_.neighbors(cell[0]) & wmask);
                    bool uniform = true;
                    for (int v : cell)
                        if (std::popcount(g_.neighbors(v) & wmask) != c0) {
                            uniform = false;
                            break;
                        }
                    if (uniform) continue;
                    // Split by count, ascending.
                    std::vector<std::pair<int, int>> keyed;
                    keyed.reserve(cell.size());
                    for (int v : cell) keyed.emplace_back(std::popcount(g_.neighbors(v) & wmask), v);
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
                    std::vector<std::vector<int>> parts;
                    for (std::size_t k = 0; k < keyed.size(); ++k) {
                        if (k == 0 || keyed[k].first != keyed[k - 1].first) parts.emplace_back();
                        parts.back().push_back(keyed[k].second);
                    }
                    p.cells[i] = std::move(parts[0]);
                    p.cells.insert(p.cells.begin() + i + 1, parts.begin() + 1, parts.end());
                    changed = true;
                    w = static_cast<std::size_t>(-1);  // restart splitter scan
                    break;
                }
                if (changed) break;
            }
        }
    }

    void leaf(const Partition& p) {
        Perm perm(n_);
        int pos = 0;
        for (const auto& c : p.cells) perm[c[0]] = pos++;
        CanonicalForm key = pack_key(g_, perm);
        if (!have_first_) {
            have_first_ = true;
            first_perm_ = perm;
            first_key_ = key;
        } else if (key == first_key_) {
            record_automorphism(first_perm_, perm);
        }
        if (!have_best_ || key < best_key_) {
            have_best_ = true;
            best_key_ = key;
            best_perm_ = perm;
        } else if (key == best_key_ && perm != best_perm_) {
            record_automorphism(best_perm_, perm);
        }
    }

    void record_automorphism(const Perm& a, const Perm& b) {
        // a and b are labelings with identical keys; sigma = a^-1 . b  is an
        // automorphism (maps old vertex x to the vertex a places where b
        // placed x).
        Perm ainv(n_);
        for (int v = 0; v < n_; ++v) ainv[a[v]] = v;
        Perm sigma(n_);
        for (int v = 0; v < n_; ++v) sigma[v] = ainv[b[v]];
        bool identity = true;
        for (int v = 0; v < n_; ++v)
            if (sigma[v] != v) {
                identity = false;
                break;
            }
        if (!identity) autos_.push_back(sigma);
    }

    void recurse(Partition p, std::vector<int> prefix) {
        refine(p);
        if (p.discrete()) {
            leaf(p);
            return;
        }
        // Target: first smallest non-singleton cell.
        std::size_t target = 0;
        std::size_t best_size = static_cast<std::size_t>(-1);
        for (std::size_t i = 0; i < p.cells.size(); ++i) {
            if (p.cells[i].size() > 1 && p.cells[i].size() < best_size) {
                best_size = p.cells[i].size();
                target = i;
            }
        }
        std::vector<int> tried;
        for (int v : p.cells[target]) {
            if (in_known_orbit(v, tried, prefix)) continue;
            Partition child = p;
            std::vector<int> rest;
            for (int u : p.cells[target])
                if (u != v) rest.push_back(u);
            child.cells[target] = {v};
            child.cells.insert(child.cells.begin() + target + 1, rest);
            auto child_prefix = prefix;
            child_prefix.push_back(v);
            recurse(std::move(child), std::move(child_prefix));
            tried.push_back(v);
        }
    }

    // True if some known automorphism fixing `prefix` pointwise maps v into
    // the orbit of an already-tried candidate.
    bool in_known_orbit(int v, const std::vector<int>& tried, const std::vector<int>& prefix) {
        if (tried.empty() || autos_.empty()) return false;
        std::vector<int> uf(n_);
        for (int i = 0; i < n_; ++i) uf[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const auto& sigma : autos_) {
            bool fixes = true;
            for (int q : prefix)
                if (sigma[q] != q) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) {
                int a = find(x), b = find(sigma[x]);
                if (a != b) uf[a] = b;
            }
        }
        for (int w : tried)
            if (find(w) == find(v)) return true;
        return false;
    }

    const Graph& g_;
    int n_;
    bool have_first_ = false;
    bool have_best_ = false;
    Perm first_perm_, best_perm_;
    CanonicalForm first_key_, best_key_;
    std::vector<Perm> autos_;
};

}  // namespace

CanonResult canonicalize(const Graph& g) {
    if (g.order() == 0) return {CanonicalForm{}, {}, {}};
    return Search(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<int>> automorphism_group(const Graph& g, std::size_t cap) {
    int n = g.order();
    std::vector<int> identity(n);
    for (int v = 0; v < n; ++v) identity[v] = v;
    std::set<std::vector<int>> group{identity};
    auto gens = canonicalize(g).automorphisms;
    std::vector<std::vector<int>> frontier{identity};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier) {
            for (const auto& s : gens) {
                std::vector<int> q(n);
                for (int v = 0; v < n; ++v) q[v] = s[p[v]];
                if (group.insert(q).second) {
                    if (group.size() > cap) throw std::runtime_error("automorphism group exceeds cap");
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

}  // namespace pack8
