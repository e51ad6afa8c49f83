#include "dld/graph.hpp"

#include "dld/error.hpp"

#include <algorithm>
#include <queue>

namespace dld {

graph graph::from_edges(int n, const std::vector<edge>& edges) {
    graph g(n);
    for (const edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void graph::add_edge(vertex_t u, vertex_t v) {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        fail(errc::unknown_vertex, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) fail(errc::self_loop, "vertex " + std::to_string(u));
    if (has_edge(u, v))
        fail(errc::duplicate_edge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(u, v);
    sorted_ = false;
}

bool graph::has_edge(vertex_t u, vertex_t v) const {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    vertex_t w = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), w) != a.end();
}

const std::vector<edge>& graph::edges_sorted() const {
    if (!sorted_) {
        auto& e = const_cast<std::vector<edge>&>(edges_);
        std::sort(e.begin(), e.end());
        const_cast<bool&>(sorted_) = true;
    }
    return edges_;
}

bool graph::connected() const {
    int n = num_vertices();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<vertex_t> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        vertex_t u = q.front();
        q.pop();
        for (vertex_t w : adj_[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    return cnt == n;
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::too_small: return "TooSmall";
        case errc::disconnected: return "Disconnected";
        case errc::not_planar: return "NotPlanar";
        case errc::not_maximal: return "NotMaximal";
        case errc::outer_face_not_triangle: return "OuterFaceNotTriangle";
        case errc::invalid_rotation: return "InvalidRotation";
        case errc::cyclic_forest: return "CyclicForest";
        case errc::vertex_on_edge: return "VertexOnEdge";
        case errc::factors_too_small: return "FactorsTooSmall";
        case errc::not_prime: return "NotPrime";
        case errc::invalid_ordering: return "InvalidOrdering";
        case errc::too_large: return "TooLarge";
        case errc::certification_failed: return "CertificationFailed";
        case errc::degenerate_rounding: return "DegenerateRounding";
        case errc::not_found: return "NotFound";
        case errc::degenerate_segment: return "DegenerateSegment";
        case errc::missing_vertex_position: return "MissingVertexPosition";
        case errc::parse_error: return "ParseError";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::self_loop: return "SelfLoop";
        case errc::non_integer_coordinate: return "NonIntegerCoordinate";
        case errc::unknown_vertex: return "UnknownVertex";
        case errc::usage: return "Usage";
        case errc::io_error: return "IoError";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

} // namespace dld
