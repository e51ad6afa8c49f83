#include "dld/verify.hpp"

#include "dld/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace dld {

namespace {

constexpr i64 fast_coord_limit = 16000;       // exact int64/int128 clearance arithmetic
constexpr i64 bucket_coord_limit = i64(1) << 31; // exact int128 bucket footprints

/* squared distance as num/den, den >= 1; exact while |coords| <= fast_coord_limit */
struct fastq {
    i64 num = 0;
    i64 den = 1;
};

fastq fast_dist_sq(point p, point a, point b) {
    i64 abx = b.x - a.x, aby = b.y - a.y;
    i64 apx = p.x - a.x, apy = p.y - a.y;
    i64 len_sq = abx * abx + aby * aby;
    i64 dot = apx * abx + apy * aby;
    if (dot <= 0) return {apx * apx + apy * apy, 1};
    if (dot >= len_sq) {
        i64 bpx = p.x - b.x, bpy = p.y - b.y;
        return {bpx * bpx + bpy * bpy, 1};
    }
    i64 cr = abx * apy - aby * apx;
    return {cr * cr, len_sq};
}

struct fast_engine {
    using q = fastq;
    static q dist(point p, point a, point b) { return fast_dist_sq(p, a, b); }
    static bool less(const q& x, const q& y) { return i128(x.num) * y.den < i128(y.num) * x.den; }
    static bool eq(const q& x, const q& y) { return i128(x.num) * y.den == i128(y.num) * x.den; }
    static bool bound_exceeds(i128 bound_sq, const q& x) { return bound_sq * x.den > x.num; }
    static rational to_rational(const q& x) { return rational(bigint(x.num), bigint(x.den)); }
};

struct exact_engine {
    using q = rational;
    static q dist(point p, point a, point b) { return point_segment_dist_sq(p, a, b); }
    static bool less(const q& x, const q& y) { return x < y; }
    static bool eq(const q& x, const q& y) { return x == y; }
    static bool bound_exceeds(i128 bound_sq, const q& x) { return rational(bigint(bound_sq)) > x; }
    static rational to_rational(const q& x) { return x; }
};

template <class E>
struct best_tracker {
    bool has = false;
    typename E::q val{};
    resolution_witness w{-1, edge(0, 1)};

    void offer(const typename E::q& q, vertex_t v, edge e) {
        if (!has || E::less(q, val)) {
            has = true;
            val = q;
            w = {v, e};
        } else if (E::eq(q, val) && std::pair(v, e) < std::pair(w.v, w.e)) {
            w = {v, e}; // lexicographically smallest minimizer
        }
    }
};

template <class E>
void brute_scan(const graph& g, const grid_drawing& d, best_tracker<E>& best) {
    int n = g.num_vertices();
    for (vertex_t v = 0; v < n; ++v) {
        point p = d[v];
        for (const edge& e : g.edges()) {
            if (v == e.u || v == e.v) continue;
            point a = d[e.u], b = d[e.v];
            if (a == b) continue; // degenerate edge: duplicates are reported separately
            best.offer(E::dist(p, a, b), v, e);
        }
    }
}

i64 floordiv(i128 a, i128 b) { // b > 0
    i128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return static_cast<i64>(q);
}

std::uint64_t cell_key(i64 cx, i64 cy) {
    return (static_cast<std::uint64_t>(cx) << 32) | static_cast<std::uint32_t>(cy);
}

template <class E>
void bucket_scan(const graph& g, const grid_drawing& d, best_tracker<E>& best) {
    int n = g.num_vertices();
    point lo = d.min_corner(), hi = d.max_corner();
    i64 span = std::max(hi.x - lo.x, hi.y - lo.y);
    i64 c = std::max<i64>(1, static_cast<i64>(std::ceil(
                                 static_cast<double>(span) / std::sqrt(static_cast<double>(std::max(n, 1))))));
    i64 maxcx = (hi.x - lo.x) / c, maxcy = (hi.y - lo.y) / c;

    std::unordered_map<std::uint64_t, std::vector<vertex_t>> buckets;
    buckets.reserve(static_cast<size_t>(n) * 2);
    auto cell_of = [&](point p) { return std::pair<i64, i64>{(p.x - lo.x) / c, (p.y - lo.y) / c}; };
    for (vertex_t v = 0; v < n; ++v) {
        auto [cx, cy] = cell_of(d[v]);
        buckets[cell_key(cx, cy)].push_back(v);
    }

    std::vector<std::pair<i64, i64>> footprint, ring;
    std::unordered_set<std::uint64_t> visited;
    for (const edge& e : g.edges()) {
        point a = d[e.u], b = d[e.v];
        if (a == b) continue;
        footprint.clear();
        visited.clear();
        auto push_cell = [&](i64 cx, i64 cy, std::vector<std::pair<i64, i64>>& out) {
            if (cx < 0 || cx > maxcx || cy < 0 || cy > maxcy) return;
            if (visited.insert(cell_key(cx, cy)).second) out.push_back({cx, cy});
        };
        // cells touched by the segment, over-approximated per column (an
        // oversized footprint only weakens the ring lower bound, never breaks it)
        if (a.x == b.x) {
            i64 cx = (a.x - lo.x) / c;
            i64 cy0 = (std::min(a.y, b.y) - lo.y) / c, cy1 = (std::max(a.y, b.y) - lo.y) / c;
            for (i64 cy = cy0; cy <= cy1; ++cy) push_cell(cx, cy, footprint);
        } else {
            if (a.x > b.x) std::swap(a, b);
            i128 den = i128(b.x) - a.x, dy = i128(b.y) - a.y;
            i64 cx0 = (a.x - lo.x) / c, cx1 = (b.x - lo.x) / c;
            for (i64 cx = cx0; cx <= cx1; ++cx) {
                i64 xl = std::max(a.x, lo.x + cx * c);
                i64 xr = std::min(b.x, lo.x + (cx + 1) * c);
                i128 n0 = i128(a.y - lo.y) * den + i128(xl - a.x) * dy;
                i128 n1 = i128(a.y - lo.y) * den + i128(xr - a.x) * dy;
                if (n0 > n1) std::swap(n0, n1);
                i64 cy0 = floordiv(n0, den * c), cy1 = floordiv(n1, den * c);
                for (i64 cy = std::max<i64>(cy0, 0); cy <= std::min(cy1, maxcy); ++cy)
                    push_cell(cx, cy, footprint);
            }
        }
        /* every cell of the grid is within this many rings of the footprint;
           the footprint bbox is NOT a valid cap: sloped segments leave holes
           inside it that only the rings reach */
        i64 dmax = std::max(maxcx, maxcy);
        auto total_cells = static_cast<std::uint64_t>(maxcx + 1) * static_cast<std::uint64_t>(maxcy + 1);

        auto scan_cells = [&](const std::vector<std::pair<i64, i64>>& cells) {
            for (auto [cx, cy] : cells) {
                auto it = buckets.find(cell_key(cx, cy));
                if (it == buckets.end()) continue;
                for (vertex_t v : it->second) {
                    if (v == e.u || v == e.v) continue;
                    best.offer(E::dist(d[v], a, b), v, e);
                }
            }
        };
        scan_cells(footprint);
        for (i64 lev = 1; lev <= dmax; ++lev) {
            if (visited.size() >= total_cells) break; // nothing left to reach
            // any vertex in a ring-lev cell is at distance >= (lev-1)*c from
            // the segment; stop once that strictly exceeds the best so far
            // (ties at the bound itself are still examined)
            if (best.has) {
                i128 lb = i128(lev - 1) * c;
                if (E::bound_exceeds(lb * lb, best.val)) break;
            }
            ring.clear();
            for (auto [cx, cy] : footprint) {
                for (i64 t = -lev; t <= lev; ++t) {
                    push_cell(cx + t, cy - lev, ring);
                    push_cell(cx + t, cy + lev, ring);
                }
                for (i64 t = -lev + 1; t <= lev - 1; ++t) {
                    push_cell(cx - lev, cy + t, ring);
                    push_cell(cx + lev, cy + t, ring);
                }
            }
            scan_cells(ring);
        }
    }
}

} // namespace

verify_report check_disk_link(const graph& g, const grid_drawing& d, check_mode mode) {
    int n = g.num_vertices();
    if (static_cast<int>(d.size()) != n)
        fail(errc::missing_vertex_position,
             "drawing has " + std::to_string(d.size()) + " positions for " + std::to_string(n) + " vertices");
    verify_report rep;
    if (n == 0) {
        rep.is_disk_link = true;
        return rep;
    }

    std::vector<vertex_t> by_pos(n);
    for (vertex_t v = 0; v < n; ++v) by_pos[v] = v;
    std::sort(by_pos.begin(), by_pos.end(), [&](vertex_t x, vertex_t y) {
        return std::pair(d[x], x) < std::pair(d[y], y);
    });
    for (int i = 1; i < n; ++i)
        if (d[by_pos[i - 1]] == d[by_pos[i]])
            rep.duplicate_positions.push_back({by_pos[i - 1], by_pos[i]});
    rep.distinct_positions = rep.duplicate_positions.empty();

    point lo = d.min_corner(), hi = d.max_corner();
    if (i128(hi.x) - lo.x >= std::numeric_limits<i64>::max() ||
        i128(hi.y) - lo.y >= std::numeric_limits<i64>::max())
        fail(errc::too_large, "coordinate span exceeds the supported range");
    rep.grid_w = hi.x - lo.x + 1;
    rep.grid_h = hi.y - lo.y + 1;

    bool fast = lo.x >= -fast_coord_limit && lo.y >= -fast_coord_limit && hi.x <= fast_coord_limit &&
                hi.y <= fast_coord_limit;
    bool bucketable = mode == check_mode::bucketed && lo.x >= -bucket_coord_limit &&
                      lo.y >= -bucket_coord_limit && hi.x <= bucket_coord_limit && hi.y <= bucket_coord_limit;

    auto run = [&](auto engine_tag) {
        using E = decltype(engine_tag);
        best_tracker<E> best;
        if (bucketable)
            bucket_scan<E>(g, d, best);
        else
            brute_scan<E>(g, d, best);
        if (best.has) {
            rep.min_res_sq = E::to_rational(best.val);
            rep.witness = best.w;
        }
    };
    if (fast)
        run(fast_engine{});
    else
        run(exact_engine{});

    rep.is_disk_link =
        rep.distinct_positions && (!rep.min_res_sq || *rep.min_res_sq >= rational(1, 4));
    return rep;
}

void check_planar_drawing(const graph& g, const grid_drawing& d, verify_report& rep) {
    int n = g.num_vertices();
    if (static_cast<int>(d.size()) != n)
        fail(errc::missing_vertex_position, "drawing does not cover all vertices");
    const auto& es = g.edges();

    for (vertex_t v = 0; v < n; ++v) {
        point p = d[v];
        for (const edge& e : es) {
            if (v == e.u || v == e.v) continue;
            point a = d[e.u], b = d[e.v];
            if (a == b) continue;
            if (orient(a, b, p) != 0) continue;
            if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y))
                rep.vertex_on_edge.push_back({v, e});
        }
    }

    auto interval_overlap = [](i64 a0, i64 a1, i64 b0, i64 b1) { // beyond a single point
        if (a0 > a1) std::swap(a0, a1);
        if (b0 > b1) std::swap(b0, b1);
        return std::max(a0, b0) < std::min(a1, b1);
    };
    auto collinear_overlap = [&](point a, point b, point c, point e2) {
        if (a.x != b.x) return interval_overlap(a.x, b.x, c.x, e2.x);
        return interval_overlap(a.y, b.y, c.y, e2.y);
    };

    for (size_t i = 0; i < es.size(); ++i) {
        point a = d[es[i].u], b = d[es[i].v];
        if (a == b) continue;
        for (size_t j = i + 1; j < es.size(); ++j) {
            point c = d[es[j].u], f = d[es[j].v];
            if (c == f) continue;
            bool adjacent = es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u ||
                            es[i].v == es[j].v;
            int o1 = orient(a, b, c), o2 = orient(a, b, f);
            if (o1 == 0 && o2 == 0) {
                if (collinear_overlap(a, b, c, f)) rep.edge_overlaps.push_back({es[i], es[j]});
                continue;
            }
            if (adjacent) continue;
            int o3 = orient(c, f, a), o4 = orient(c, f, b);
            if (o1 * o2 < 0 && o3 * o4 < 0) rep.crossings.push_back({es[i], es[j]});
            // an endpoint lying on the other segment surfaces as vertex_on_edge
        }
    }
}

bool check_convex_position(const std::vector<point>& pts) {
    int n = static_cast<int>(pts.size());
    if (n < 3) return false;
    std::vector<point> s = pts;
    std::sort(s.begin(), s.end(), [](point a, point b) { return std::pair(a.x, a.y) < std::pair(b.x, b.y); });
    for (int i = 1; i < n; ++i)
        if (s[i - 1] == s[i]) return false;
    // strict monotone chain: collinear points are popped, so the hull keeps
    // extreme points only
    auto build = [&](auto begin, auto end) {
        std::vector<point> h;
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= 2 && orient(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
            h.push_back(*it);
        }
        return h;
    };
    auto lower = build(s.begin(), s.end());
    auto upper = build(s.rbegin(), s.rend());
    return static_cast<int>(lower.size() + upper.size()) - 2 == n;
}

double star_lower_bound(int n) {
    if (n < 3) fail(errc::too_small, "star bound needs n >= 3");
    double k = static_cast<double>(n - 1);
    return k * k / (16.0 * std::numbers::pi);
}

} // namespace dld
