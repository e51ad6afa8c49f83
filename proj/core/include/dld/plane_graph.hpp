#pragma once

#include "dld/graph.hpp"

#include <vector>

namespace dld {

/* combinatorial embedding: per-vertex ccw rotation plus a designated outer face.
   face walks use the rule next(u->v) = (v, w) with w the ccw-predecessor of u
   at v, so every interior face is traversed ccw and euler's formula pins
   planarity: faces == 2 - n + m. */
class plane_graph {
  public:
    plane_graph() = default;
    plane_graph(graph g, std::vector<std::vector<vertex_t>> rotation,
                std::vector<vertex_t> outer_face);

    const graph& g() const { return g_; }
    int num_vertices() const { return g_.num_vertices(); }
    int num_edges() const { return g_.num_edges(); }

    const std::vector<vertex_t>& rotation(vertex_t v) const { return rot_[v]; }
    const std::vector<std::vector<vertex_t>>& rotations() const { return rot_; }
    const std::vector<vertex_t>& outer_face() const { return outer_; }

    /* every face as its closed walk; deterministic discovery order
       (scans directed edges (u, rot_u[i]) by increasing u, i) */
    std::vector<std::vector<vertex_t>> faces() const;
    int num_faces() const { return static_cast<int>(faces().size()); }

    /* rotation lists are permutations of adjacency, outer face is a real
       face walk, euler count holds; throws invalid_rotation otherwise */
    void validate() const;

  private:
    friend class triangulator;

    graph g_;
    std::vector<std::vector<vertex_t>> rot_;
    std::vector<vertex_t> outer_;
};

/* planarity-test + embedding; any face may end up outer (deterministic pick).
   throws too_small (n < 3), disconnected, not_planar */
plane_graph embed(const graph& g);

/* embedding with caller-supplied rotation system; outer face picked
   deterministically (first face walk) */
plane_graph embed_with_rotation(const graph& g, const std::vector<std::vector<vertex_t>>& rot);

/* augment to a maximal planar graph (m = 3n - 6) by face-by-face fan/ear
   insertion; keeps the graph simple, never moves existing edges, and the new
   outer face is a triangle inside the original outer region */
plane_graph triangulate(const plane_graph& pg);

} // namespace dld
