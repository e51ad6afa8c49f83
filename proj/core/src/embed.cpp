#include "dld/error.hpp"
#include "dld/plane_graph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <string>

namespace dld {

namespace {

using bgraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::no_property,
                                     boost::property<boost::edge_index_t, int>>;

std::vector<std::vector<vertex_t>> boyer_myrvold_rotation(const graph& g) {
    bgraph bg(g.num_vertices());
    for (const edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);

    auto e_index = boost::get(boost::edge_index, bg);
    int ec = 0;
    for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) boost::put(e_index, *ei, ec++);

    using embedding_storage_t = std::vector<std::vector<boost::graph_traits<bgraph>::edge_descriptor>>;
    embedding_storage_t storage(boost::num_vertices(bg));
    auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));

    bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                      boost::boyer_myrvold_params::embedding = embedding);
    if (!planar) fail(errc::not_planar, "graph admits no planar embedding");

    std::vector<std::vector<vertex_t>> rot(g.num_vertices());
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
        rot[v].reserve(storage[v].size());
        for (auto e : storage[v]) {
            vertex_t s = static_cast<vertex_t>(boost::source(e, bg));
            vertex_t t = static_cast<vertex_t>(boost::target(e, bg));
            rot[v].push_back(s == v ? t : s);
        }
    }
    return rot;
}

/* face containing the lexicographically first directed edge */
std::vector<vertex_t> first_face(const graph& g, const std::vector<std::vector<vertex_t>>& rot) {
    plane_graph tmp(g, rot, {});
    auto faces = tmp.faces();
    if (faces.empty()) fail(errc::internal, "embedding has no faces");
    return faces.front();
}

/* face traversal is only well-defined once every rotation list is a
   permutation of the vertex's neighbors, so this must run before first_face */
void check_rotation_shape(const graph& g, const std::vector<std::vector<vertex_t>>& rot) {
    if (static_cast<int>(rot.size()) != g.num_vertices())
        fail(errc::invalid_rotation, "rotation size mismatch");
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
        auto a = g.neighbors(v);
        auto r = rot[v];
        std::sort(a.begin(), a.end());
        std::sort(r.begin(), r.end());
        if (a != r)
            fail(errc::invalid_rotation,
                 "rotation of vertex " + std::to_string(v) + " is not a permutation of its neighbors");
    }
}

} // namespace

plane_graph embed_with_rotation(const graph& g, const std::vector<std::vector<vertex_t>>& rot) {
    if (g.num_vertices() < 3) fail(errc::too_small, "need at least 3 vertices");
    if (!g.connected()) fail(errc::disconnected, "graph must be connected");
    check_rotation_shape(g, rot);
    plane_graph pg(g, rot, first_face(g, rot));
    pg.validate(); // rejects rotation systems of positive genus
    return pg;
}

plane_graph embed(const graph& g) {
    if (g.num_vertices() < 3) fail(errc::too_small, "need at least 3 vertices");
    if (!g.connected()) fail(errc::disconnected, "graph must be connected");
    auto rot = boyer_myrvold_rotation(g);
    plane_graph pg(g, rot, first_face(g, rot));
    pg.validate();
    return pg;
}

} // namespace dld
