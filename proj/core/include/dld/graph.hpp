#pragma once

#include "dld/types.hpp"

#include <vector>

namespace dld {

/* simple undirected graph: vertices 0..n-1, no self loops, no parallel edges */
class graph {
  public:
    graph() = default;
    explicit graph(int n) : adj_(n) {}

    static graph from_edges(int n, const std::vector<edge>& edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    /* throws self_loop / duplicate_edge / unknown_vertex */
    void add_edge(vertex_t u, vertex_t v);
    bool has_edge(vertex_t u, vertex_t v) const;

    const std::vector<vertex_t>& neighbors(vertex_t v) const { return adj_[v]; }
    int degree(vertex_t v) const { return static_cast<int>(adj_[v].size()); }

    /* sorted by (u, v) */
    const std::vector<edge>& edges() const { return edges_sorted(); }

    bool connected() const;

  private:
    const std::vector<edge>& edges_sorted() const;

    std::vector<std::vector<vertex_t>> adj_;
    std::vector<edge> edges_;
    mutable bool sorted_ = true;
};

} // namespace dld
