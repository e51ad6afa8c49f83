#pragma once

#include <cstdint>
#include <compare>
#include <utility>

namespace dld {

using i64 = std::int64_t;
using i128 = __int128;
using vertex_t = int;

struct point {
    i64 x = 0;
    i64 y = 0;

    friend bool operator==(const point&, const point&) = default;
    friend auto operator<=>(const point&, const point&) = default;

    point operator+(point o) const { return {x + o.x, y + o.y}; }
    point operator-(point o) const { return {x - o.x, y - o.y}; }
};

/* undirected edge, stored with u < v */
struct edge {
    vertex_t u = 0;
    vertex_t v = 0;

    edge() = default;
    edge(vertex_t a, vertex_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const edge&, const edge&) = default;
    friend auto operator<=>(const edge&, const edge&) = default;
};

} // namespace dld
