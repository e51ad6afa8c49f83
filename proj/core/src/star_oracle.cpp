#include "dld/verify.hpp"

#include "dld/error.hpp"

#include <algorithm>

namespace dld {

namespace {

/* exact: squared distance from p to closed segment [a,b] >= 1/4, for the tiny
   coordinates the search box allows */
bool clear_quarter(point p, point a, point b) {
    i64 abx = b.x - a.x, aby = b.y - a.y;
    i64 apx = p.x - a.x, apy = p.y - a.y;
    i64 len_sq = abx * abx + aby * aby;
    i64 dot = apx * abx + apy * aby;
    if (dot <= 0) return 4 * (apx * apx + apy * apy) >= 1;
    if (dot >= len_sq) {
        i64 bpx = p.x - b.x, bpy = p.y - b.y;
        return 4 * (bpx * bpx + bpy * bpy) >= 1;
    }
    i64 cr = abx * apy - aby * apx;
    return 4 * cr * cr >= len_sq;
}

struct star_search {
    int leaves;
    i64 sx, sy;
    point center;
    std::vector<point> pts;    // candidate leaf positions, lexicographic
    std::vector<point> chosen; // leaves placed so far
    const star_search_options* opts;
    unsigned long long decisions = 0;

    bool feasible(point p) const {
        for (point q : chosen)
            if (!clear_quarter(q, center, p) || !clear_quarter(p, center, q)) return false;
        return true;
    }

    void report(point p, bool ok) {
        ++decisions;
        if (!opts->on_decision) return;
        grid_drawing partial;
        partial.pos.reserve(chosen.size() + 2);
        partial.pos.push_back(center);
        for (point q : chosen) partial.pos.push_back(q);
        partial.pos.push_back(p);
        opts->on_decision(partial, ok);
    }

    bool spans_box() const {
        i64 x0 = center.x, x1 = center.x, y0 = center.y, y1 = center.y;
        for (point q : chosen) {
            x0 = std::min(x0, q.x);
            x1 = std::max(x1, q.x);
            y0 = std::min(y0, q.y);
            y1 = std::max(y1, q.y);
        }
        return x0 == 0 && x1 == sx && y0 == 0 && y1 == sy;
    }

    /* depth-first over lexicographic leaf placements; keeps the first accepted
       completion. in exhaust mode the whole tree is visited, otherwise the
       walk stops as soon as a completion is found. */
    bool search(grid_drawing& out) {
        found = false;
        walk(0, out);
        return found;
    }

    void walk(size_t from, grid_drawing& out) {
        if (static_cast<int>(chosen.size()) == leaves) {
            if (!spans_box()) return;
            if (!found) {
                found = true;
                out.pos.clear();
                out.pos.push_back(center);
                for (point q : chosen) out.pos.push_back(q);
            }
            return;
        }
        int missing = leaves - static_cast<int>(chosen.size());
        for (size_t i = from; i + missing <= pts.size(); ++i) {
            bool ok = feasible(pts[i]);
            report(pts[i], ok);
            if (!ok) continue;
            chosen.push_back(pts[i]);
            walk(i + 1, out);
            chosen.pop_back();
            if (found && !exhaust) return;
        }
    }

    bool exhaust = false;
    bool found = false;
};

} // namespace

star_search_result min_area_star_search(int n, int max_extent, const star_search_options& opts) {
    if (n < 2) fail(errc::too_small, "star needs at least 2 vertices");
    if (n > 8) fail(errc::too_large, "search supports n <= 8");
    if (max_extent < 1 || max_extent > 12) fail(errc::too_large, "search supports extents 1..12");

    std::vector<std::pair<int, int>> boxes;
    for (int w = 1; w <= max_extent; ++w)
        for (int h = w; h <= max_extent; ++h)
            if (w * h >= n) boxes.push_back({w, h});
    std::sort(boxes.begin(), boxes.end(), [](auto a, auto b) {
        return std::pair(a.first * a.second, a.first) < std::pair(b.first * b.second, b.first);
    });

    star_search_result res;
    bool found = false;
    unsigned long long decisions = 0;
    for (auto [w, h] : boxes) {
        if (found && opts.stop_at_first_area) break;
        // translation is canonicalized by the exact-span requirement; the
        // center is restricted to a fundamental domain of the box symmetries
        for (i64 cx = 0; 2 * cx <= w - 1; ++cx) {
            for (i64 cy = 0; 2 * cy <= h - 1; ++cy) {
                if (w == h && cx > cy) continue;
                star_search s;
                s.leaves = n - 1;
                s.sx = w - 1;
                s.sy = h - 1;
                s.opts = &opts;
                s.center = {cx, cy};
                s.exhaust = !opts.stop_at_first_area;
                for (i64 x = 0; x <= s.sx; ++x)
                    for (i64 y = 0; y <= s.sy; ++y)
                        if (point{x, y} != s.center) s.pts.push_back({x, y});
                grid_drawing witness;
                bool ok = s.search(witness);
                decisions += s.decisions;
                if (ok && !found) {
                    found = true;
                    res.area = static_cast<i64>(w) * h;
                    res.witness = std::move(witness);
                }
                if (found && opts.stop_at_first_area) goto finish;
            }
        }
    }
finish:
    if (!found) fail(errc::not_found, "no disk-link star drawing within the extent");
    res.decisions = decisions;
    return res;
}

} // namespace dld
