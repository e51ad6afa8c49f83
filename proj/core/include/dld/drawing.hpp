#pragma once

#include "dld/types.hpp"

#include <vector>

namespace dld {

/* straight-line grid drawing: pos[v] is the integer center of vertex v's
   unit-diameter disk. grid size counts lattice points: a drawing whose
   bounding box has side lengths W-1, H-1 occupies a W x H grid. */
struct grid_drawing {
    std::vector<point> pos;

    int size() const { return static_cast<int>(pos.size()); }
    point& operator[](vertex_t v) { return pos[v]; }
    const point& operator[](vertex_t v) const { return pos[v]; }

    point min_corner() const;
    point max_corner() const;
    i64 width() const { return size() ? max_corner().x - min_corner().x + 1 : 0; }
    i64 height() const { return size() ? max_corner().y - min_corner().y + 1 : 0; }

    /* translate so min x = min y = 0 */
    void normalize();
    void translate(point t);
    void scale(i64 sx, i64 sy);

    friend bool operator==(const grid_drawing&, const grid_drawing&) = default;
};

} // namespace dld
