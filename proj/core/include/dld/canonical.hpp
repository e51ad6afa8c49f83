#pragma once

#include "dld/plane_graph.hpp"

#include <string>
#include <vector>

namespace dld {

enum class edge_color : unsigned char { uncolored, blue, green, red };

/* canonical vertex order v1..vn of a maximal plane graph together with the
   constructive edge coloring: at each insertion of v_k the edge to the
   leftmost contour neighbor is blue, to the rightmost green, all middle
   (covered) edges red; (v1,v2) stays uncolored */
struct canon_order {
    std::vector<vertex_t> order;    // order[k-1] = v_k
    std::vector<int> rank;          // rank[v] = position of v in order (0-based)
    std::vector<edge_color> colors; // parallel to pg.g().edges()

    vertex_t v1() const { return order.front(); }
    vertex_t v2() const { return order[1]; }
    vertex_t vn() const { return order.back(); }

    edge_color color_of(const plane_graph& pg, vertex_t u, vertex_t v) const;
};

/* reverse peeling with chord counters, ties by smallest vertex id.
   base edge (v1,v2) = lexicographically smallest edge of the outer triangle,
   vn = its third vertex.
   throws not_maximal / outer_face_not_triangle */
canon_order canonical_order(const plane_graph& pg);

struct canon_check {
    bool ok = true;
    std::string reason; // empty when ok
    explicit operator bool() const { return ok; }
};

/* checks by direct simulation: prefix attachment (=> biconnectivity), the
   neighbors of each v_k form a consecutive contour arc, every v_k (k < n) has
   a later neighbor, and the color classes form the expected trees */
canon_check validate_canonical_order(const plane_graph& pg, const canon_order& co);

} // namespace dld
