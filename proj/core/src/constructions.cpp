#include "dld/constructions.hpp"

#include "dld/error.hpp"
#include "dld/generators.hpp"
#include "dld/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace dld {

spans edge_spans(const graph& g, const grid_drawing& d) {
    if (static_cast<int>(d.size()) != g.num_vertices())
        fail(errc::missing_vertex_position, "drawing does not cover all vertices");
    spans m;
    for (const edge& e : g.edges()) {
        m.sx = std::max(m.sx, std::abs(d[e.u].x - d[e.v].x));
        m.sy = std::max(m.sy, std::abs(d[e.u].y - d[e.v].y));
    }
    return m;
}

stretch_factors min_stretch_factors(const graph& g, const grid_drawing& d) {
    spans m = edge_spans(g, d);
    return {std::max<i64>(1, 2 * m.sy), std::max<i64>(1, 2 * m.sx)};
}

grid_drawing stretch(const graph& g, const grid_drawing& d, stretch_factors f) {
    stretch_factors need = min_stretch_factors(g, d);
    if (f.phi_x < need.phi_x || f.phi_y < need.phi_y)
        fail(errc::factors_too_small, "need at least (" + std::to_string(need.phi_x) + ", " +
                                          std::to_string(need.phi_y) + ")");
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
        point p = d[v];
        for (const edge& e : g.edges()) {
            if (v == e.u || v == e.v) continue;
            point a = d[e.u], b = d[e.v];
            if (a == b || orient(a, b, p) != 0) continue;
            if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y))
                fail(errc::vertex_on_edge, "vertex " + std::to_string(v) + " lies on edge (" +
                                               std::to_string(e.u) + ", " + std::to_string(e.v) +
                                               "); stretching cannot separate them");
        }
    }
    grid_drawing out = d;
    out.scale(f.phi_x, f.phi_y);
    return out;
}

i64 smallest_prime_gt(i64 b) {
    if (b < 1) fail(errc::too_small, "need b >= 1");
    auto is_prime = [](i64 v) {
        if (v < 2) return false;
        for (i64 q = 2; q * q <= v; ++q)
            if (v % q == 0) return false;
        return true;
    };
    i64 p = b + 1;
    while (!is_prime(p)) ++p;
    return p;
}

std::vector<point> erdos_points(i64 p, int n) {
    if (p < 2) fail(errc::not_prime, std::to_string(p) + " is not prime");
    for (i64 q = 2; q * q <= p; ++q)
        if (p % q == 0) fail(errc::not_prime, std::to_string(p) + " is not prime");
    std::vector<point> pts;
    pts.reserve(std::max(n, 0));
    for (i64 i = 0; i < n; ++i) pts.push_back({i, i * i % p});
    return pts;
}

namespace {

std::vector<int> ordering_positions(const graph& g, const std::vector<vertex_t>& ord) {
    int n = g.num_vertices();
    if (static_cast<int>(ord.size()) != n) fail(errc::invalid_ordering, "not a permutation");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        vertex_t v = ord[i];
        if (v < 0 || v >= n || pos[v] >= 0) fail(errc::invalid_ordering, "not a permutation");
        pos[v] = i;
    }
    return pos;
}

} // namespace

i64 bandwidth_of_ordering(const graph& g, const std::vector<vertex_t>& ord) {
    std::vector<int> pos = ordering_positions(g, ord);
    i64 b = 0;
    for (const edge& e : g.edges()) b = std::max<i64>(b, std::abs(pos[e.u] - pos[e.v]));
    return b;
}

grid_drawing draw_bandwidth(const graph& g, const std::vector<vertex_t>& ord, i64 b) {
    if (b < 1) fail(errc::too_small, "need b >= 1");
    i64 actual = bandwidth_of_ordering(g, ord);
    if (actual > b)
        fail(errc::invalid_ordering,
             "ordering has bandwidth " + std::to_string(actual) + " > " + std::to_string(b));
    i64 p = smallest_prime_gt(b);
    std::vector<point> pts = erdos_points(p, g.num_vertices());
    grid_drawing base;
    base.pos.resize(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) base.pos[ord[i]] = pts[i];
    return stretch(g, base, min_stretch_factors(g, base));
}

std::vector<vertex_t> rcm_ordering(const graph& g) {
    int n = g.num_vertices();
    if (n == 0) return {};
    if (!g.connected()) fail(errc::disconnected, "ordering heuristic needs a connected graph");
    auto by_degree = [&](vertex_t a, vertex_t b) {
        return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
    };
    vertex_t start = 0;
    for (vertex_t v = 1; v < n; ++v)
        if (by_degree(v, start)) start = v;
    std::vector<vertex_t> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    std::queue<vertex_t> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
        vertex_t v = q.front();
        q.pop();
        order.push_back(v);
        std::vector<vertex_t> nb;
        for (vertex_t u : g.neighbors(v))
            if (!seen[u]) nb.push_back(u);
        std::sort(nb.begin(), nb.end(), by_degree);
        for (vertex_t u : nb) {
            seen[u] = 1;
            q.push(u);
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

namespace {

struct bandwidth_bb {
    const graph* g;
    int n;
    i64 best;
    std::vector<vertex_t> best_ord, cur;
    std::vector<int> pos; // -1 while unplaced

    void dfs(int k, i64 cur_max) {
        if (cur_max >= best) return;
        if (k == n) {
            best = cur_max;
            best_ord = cur;
            return;
        }
        // any placed vertex with an unplaced neighbor forces a gap >= k - pos
        for (int j = 0; j < k; ++j) {
            vertex_t v = cur[j];
            bool open = false;
            for (vertex_t u : g->neighbors(v)) open |= pos[u] < 0;
            if (open && k - j >= best) return;
        }
        for (vertex_t v = 0; v < n; ++v) {
            if (pos[v] >= 0) continue;
            i64 m = cur_max;
            for (vertex_t u : g->neighbors(v))
                if (pos[u] >= 0) m = std::max<i64>(m, k - pos[u]);
            if (m >= best) continue;
            pos[v] = k;
            cur.push_back(v);
            dfs(k + 1, m);
            cur.pop_back();
            pos[v] = -1;
        }
    }
};

} // namespace

std::vector<vertex_t> exact_bandwidth_small(const graph& g) {
    int n = g.num_vertices();
    if (n > 12) fail(errc::too_large, "exact search supports n <= 12");
    if (n == 0) return {};
    std::vector<vertex_t> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    bandwidth_bb bb;
    bb.g = &g;
    bb.n = n;
    bb.best = bandwidth_of_ordering(g, identity) + 1;
    bb.best_ord = identity;
    bb.pos.assign(n, -1);
    bb.cur.reserve(n);
    bb.dfs(0, 0);
    return bb.best_ord;
}

grid_drawing draw_complete_convex(int n) {
    if (n < 3) fail(errc::too_small, "need n >= 3");
    double r = 2.0 * n * n;
    grid_drawing d;
    d.pos.reserve(n);
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * std::numbers::pi * i / n;
        d.pos.push_back({static_cast<i64>(std::round(r * std::cos(th))),
                         static_cast<i64>(std::round(r * std::sin(th)))});
    }
    d.normalize();
    {
        std::vector<point> s = d.pos;
        std::sort(s.begin(), s.end(),
                  [](point a, point b) { return std::pair(a.x, a.y) < std::pair(b.x, b.y); });
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(errc::degenerate_rounding, "two vertices round to the same grid point");
    }
    graph g = gen_complete(n);
    verify_report rep = check_disk_link(g, d);
    i64 limit = 4 * static_cast<i64>(n) * n + 1;
    if (!rep.is_disk_link || !check_convex_position(d.pos) || rep.grid_w > limit || rep.grid_h > limit)
        fail(errc::certification_failed, "rounded polygon failed certification");
    return d;
}

} // namespace dld
