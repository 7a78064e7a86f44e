#include "pack8/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

namespace pack8 {

namespace {

typedef boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>,
                              boost::property<boost::edge_index_t, int>>
    BoostGraph;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.order());
    int eid = 0;
    for (auto [u, v] : g.edges()) {
        auto e = boost::add_edge(u, v, bg).first;
        boost::put(boost::edge_index, bg, e, eid++);
    }
    return bg;
}

}  // namespace

bool is_planar(const Graph& g) {
    if (g.order() <= 4) return true;
    if (g.edge_count() > 3 * g.order() - 6) return false;
    BoostGraph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<std::vector<std::vector<int>>> planar_embedding(const Graph& g) {
    BoostGraph bg = to_boost(g);
    typedef boost::graph_traits<BoostGraph>::edge_descriptor Edge;
    std::vector<std::vector<Edge>> storage(boost::num_vertices(bg));
    auto emb = boost::make_iterator_property_map(storage.begin(),
                                                 boost::get(boost::vertex_index, bg));
    if (!boost::boyer_myrvold_planarity_test(
            boost::boyer_myrvold_params::graph = bg,
            boost::boyer_myrvold_params::embedding = emb)) {
        return std::nullopt;
    }
    std::vector<std::vector<int>> rot(g.order());
    for (int v = 0; v < g.order(); ++v) {
        for (const Edge& e : storage[v]) {
            int a = static_cast<int>(boost::source(e, bg));
            int b = static_cast<int>(boost::target(e, bg));
            rot[v].push_back(a == v ? b : a);
        }
    }
    return rot;
}

}  // namespace pack8
