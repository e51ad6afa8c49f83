#include "dld/verify.hpp"

#include "dld/error.hpp"

#include <algorithm>

namespace dld {

point grid_drawing::min_corner() const {
    point m = pos.at(0);
    for (point p : pos) m = {std::min(m.x, p.x), std::min(m.y, p.y)};
    return m;
}

point grid_drawing::max_corner() const {
    point m = pos.at(0);
    for (point p : pos) m = {std::max(m.x, p.x), std::max(m.y, p.y)};
    return m;
}

void grid_drawing::normalize() {
    if (pos.empty()) return;
    point lo = min_corner();
    translate({-lo.x, -lo.y});
}

void grid_drawing::translate(point t) {
    for (point& p : pos) p = {p.x + t.x, p.y + t.y};
}

void grid_drawing::scale(i64 sx, i64 sy) {
    for (point& p : pos) p = {p.x * sx, p.y * sy};
}

namespace {

constexpr i64 orient_fast_limit = i64(1) << 62;

int sign_i128(i128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

} // namespace

int orient(point a, point b, point c) {
    i128 dx1 = i128(b.x) - a.x, dy1 = i128(b.y) - a.y;
    i128 dx2 = i128(c.x) - a.x, dy2 = i128(c.y) - a.y;
    auto small = [](i128 v) { return v > -orient_fast_limit && v < orient_fast_limit; };
    if (small(dx1) && small(dy1) && small(dx2) && small(dy2))
        return sign_i128(dx1 * dy2 - dy1 * dx2);
    bigint cross = bigint(b.x - a.x) * bigint(c.y - a.y) - bigint(b.y - a.y) * bigint(c.x - a.x);
    return cross.sign();
}

rational point_segment_dist_sq(point p, point a, point b) {
    if (a == b) fail(errc::degenerate_segment, "segment endpoints coincide");
    bigint abx = bigint(b.x) - a.x, aby = bigint(b.y) - a.y;
    bigint apx = bigint(p.x) - a.x, apy = bigint(p.y) - a.y;
    bigint len_sq = abx * abx + aby * aby;
    bigint dot = apx * abx + apy * aby;
    if (dot <= 0) return rational(apx * apx + apy * apy);
    if (dot >= len_sq) {
        bigint bpx = bigint(p.x) - b.x, bpy = bigint(p.y) - b.y;
        return rational(bpx * bpx + bpy * bpy);
    }
    bigint cross = abx * apy - aby * apx;
    return rational(cross * cross, len_sq);
}

} // namespace dld
