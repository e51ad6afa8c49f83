#include "dld/shift.hpp"

#include "dld/error.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace dld {

std::vector<i64> resolve_offsets(const offset_forest& f,
                                 const std::vector<std::pair<vertex_t, i64>>& root_x) {
    int n = static_cast<int>(f.parent.size());
    // children lists in flat counting-sort layout: no per-vertex allocations
    std::vector<int> off(n + 1, 0);
    for (vertex_t v = 0; v < n; ++v) {
        vertex_t p = f.parent[v];
        if (p >= 0) {
            if (p >= n) fail(errc::cyclic_forest, "parent out of range");
            ++off[p + 1];
        }
    }
    for (int i = 0; i < n; ++i) off[i + 1] += off[i];
    std::vector<vertex_t> kids(off[n]);
    {
        std::vector<int> cur(off.begin(), off.end() - 1);
        for (vertex_t v = 0; v < n; ++v)
            if (f.parent[v] >= 0) kids[cur[f.parent[v]]++] = v;
    }
    std::vector<i64> x(n, 0);
    std::vector<char> set(n, 0);
    std::vector<vertex_t> stack;
    stack.reserve(root_x.size());
    for (auto [v, xv] : root_x) {
        if (v < 0 || v >= n) fail(errc::cyclic_forest, "root out of range");
        x[v] = xv;
        set[v] = 1;
        stack.push_back(v);
    }
    int resolved = static_cast<int>(stack.size());
    while (!stack.empty()) {
        vertex_t v = stack.back();
        stack.pop_back();
        for (int i = off[v]; i < off[v + 1]; ++i) {
            vertex_t c = kids[i];
            if (set[c]) fail(errc::cyclic_forest, "vertex reached twice");
            x[c] = x[v] + f.delta[c];
            set[c] = 1;
            stack.push_back(c);
            ++resolved;
        }
    }
    if (resolved != n) fail(errc::cyclic_forest, "cycle or unreachable vertex in offset forest");
    return x;
}

shift_state::shift_state(const plane_graph& pg, const canon_order& co)
    : pg_(&pg), co_(&co), n_(pg.num_vertices()), forest_(pg.num_vertices()) {
    if (auto chk = validate_canonical_order(pg, co); !chk)
        fail(errc::invalid_ordering, chk.reason);
    c_.next.assign(n_, -1);
    c_.prev.assign(n_, -1);
    c_.dx.assign(n_, 0);
    c_.y.assign(n_, 0);
    placed_.assign(n_, 0);
    on_contour_.assign(n_, 0);
    mark_.assign(n_, 0);

    // base triangle: v1 (0,0), v2 (2,0), v3 (1,1); contour runs v1, v3, v2
    vertex_t v1 = co.v1(), v2 = co.v2(), v3 = co.order[2];
    c_.head = v1;
    c_.tail = v2;
    c_.next[v1] = v3;
    c_.prev[v3] = v1;
    c_.next[v3] = v2;
    c_.prev[v2] = v3;
    c_.dx[v1] = 0;
    c_.dx[v3] = 1;
    c_.dx[v2] = 1;
    c_.y[v1] = 0;
    c_.y[v3] = 1;
    c_.y[v2] = 0;
    placed_[v1] = placed_[v2] = placed_[v3] = 1;
    on_contour_[v1] = on_contour_[v2] = on_contour_[v3] = 1;
    next_k_ = 4;

    adj_off_.reserve(n_ - 2);
    adj_off_.push_back(0);
    for (int k = 4; k <= n_; ++k) {
        const auto& nb = pg.g().neighbors(co.order[k - 1]);
        adj_flat_.insert(adj_flat_.end(), nb.begin(), nb.end());
        adj_off_.push_back(static_cast<int>(adj_flat_.size()));
    }
}

insertion_event shift_state::insert_vertex() {
    insertion_event ev;
    step(&ev);
    return ev;
}

void shift_state::insert_all() {
    while (!done()) step(nullptr);
}

void shift_state::step(insertion_event* out) {
    if (done()) fail(errc::internal, "all vertices already inserted");
    vertex_t vk = co_->order[next_k_ - 1];

    std::vector<vertex_t>& s = nbrs_;
    s.clear();
    for (int i = adj_off_[next_k_ - 4]; i < adj_off_[next_k_ - 3]; ++i) {
        vertex_t u = adj_flat_[i];
        if (placed_[u]) s.push_back(u);
    }
    for (vertex_t u : s) {
        if (!on_contour_[u]) fail(errc::invalid_ordering, "placed neighbor left the contour");
        mark_[u] = 1;
    }
    vertex_t wl = -1;
    for (vertex_t u : s)
        if (c_.prev[u] < 0 || !mark_[c_.prev[u]]) {
            if (wl >= 0) fail(errc::invalid_ordering, "contour neighbors not consecutive");
            wl = u;
        }
    if (wl < 0 || s.size() < 2) fail(errc::invalid_ordering, "bad neighbor set");
    vertex_t wr = wl;
    for (size_t i = 1; i < s.size(); ++i) {
        wr = c_.next[wr];
        if (wr < 0 || !mark_[wr]) fail(errc::invalid_ordering, "contour neighbors not consecutive");
    }
    for (vertex_t u : s) mark_[u] = 0;

    // phase 1: the covered vertices w_{l+1}..w_{r-1} move right by 1,2,...,
    // which in relative offsets is a +1 bump each
    i64 d0 = 0;    // x(wr) - x(wl) before any shift
    i64 acc = 0;   // x(w_i) - x(wl) before shifts
    i64 steps = 0; // r - l
    covered_.clear();
    covered_x_.clear(); // x(w_i) - x(wl) after phase 1
    for (vertex_t u = c_.next[wl];; u = c_.next[u]) {
        acc += c_.dx[u];
        ++steps;
        if (u == wr) {
            d0 = acc;
            break;
        }
        covered_.push_back(u);
        covered_x_.push_back(acc + steps);
    }

    // phase 2: wr (and, implicitly, everything after it) moves right by the
    // smaller of r-l, r-l+1 that keeps the new vertex on the grid
    i64 dy = c_.y[wr] - c_.y[wl];
    i64 dr = steps;
    if ((d0 + dr + dy) % 2 != 0) ++dr;
    i64 edx = d0 + dr;
    if ((edx + dy) % 2 != 0) fail(errc::internal, "parity violation at insertion");
    i64 xk = (edx + dy) / 2; // x(vk) - x(wl)
    if (xk < 1 || edx - xk < 1) fail(errc::internal, "degenerate apex placement");

    for (size_t i = 0; i < covered_.size(); ++i) {
        vertex_t u = covered_[i];
        on_contour_[u] = 0;
        forest_.parent[u] = vk;
        forest_.delta[u] = covered_x_[i] - xk;
    }
    c_.next[wl] = vk;
    c_.prev[vk] = wl;
    c_.next[vk] = wr;
    c_.prev[wr] = vk;
    c_.dx[vk] = xk;
    c_.dx[wr] = edx - xk;
    c_.y[vk] = c_.y[wl] + xk;
    placed_[vk] = 1;
    on_contour_[vk] = 1;
    ++next_k_;
    if (paranoid_) check_contour();
    if (out) {
        out->v = vk;
        out->wl = wl;
        out->wr = wr;
        out->covered.assign(covered_.begin(), covered_.end());
        out->dr = dr;
    }
}

void shift_state::check_contour() const {
    // every contour edge must have slope exactly +1 or -1
    i64 x = 0;
    vertex_t u = c_.head;
    if (u != co_->v1() || c_.tail != co_->v2()) fail(errc::internal, "contour endpoints corrupted");
    int count = 1;
    while (u != c_.tail) {
        vertex_t v = c_.next[u];
        if (v < 0 || c_.prev[v] != u || !on_contour_[v])
            fail(errc::internal, "contour links corrupted");
        if (c_.dx[v] < 1) fail(errc::internal, "contour x not increasing");
        if (std::llabs(c_.y[v] - c_.y[u]) != c_.dx[v])
            fail(errc::internal, "contour edge slope not +-1");
        x += c_.dx[v];
        u = v;
        ++count;
    }
    if (c_.y[c_.head] != 0 || c_.y[c_.tail] != 0) fail(errc::internal, "baseline corrupted");
    (void)x;
    (void)count;
}

grid_drawing shift_state::resolve() const {
    std::vector<std::pair<vertex_t, i64>> roots;
    i64 x = 0;
    for (vertex_t u = c_.head; u >= 0; u = c_.next[u]) {
        x += c_.dx[u];
        roots.push_back({u, x});
        if (u == c_.tail) break;
    }
    // vertices covered at some step hang off the forest; anything not yet
    // placed stays at the origin
    offset_forest f = forest_;
    std::vector<char> pending(n_, 0);
    for (vertex_t v = 0; v < n_; ++v)
        if (!placed_[v]) {
            pending[v] = 1;
            f.parent[v] = -1;
            roots.push_back({v, 0});
        }
    std::vector<i64> xs = resolve_offsets(f, roots);
    grid_drawing d;
    d.pos.resize(n_);
    for (vertex_t v = 0; v < n_; ++v) d.pos[v] = {xs[v], pending[v] ? 0 : c_.y[v]};
    return d;
}

planar_drawing_result draw_planar(const plane_graph& pg) {
    plane_graph tri = triangulate(pg);
    canon_order co = canonical_order(tri);
    shift_state st(tri, co);
    st.insert_all();
    return {st.resolve(), std::move(co), std::move(tri)};
}

planar_drawing_result draw_planar(const graph& g) { return draw_planar(embed(g)); }

} // namespace dld
