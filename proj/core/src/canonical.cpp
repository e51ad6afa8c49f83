#include "dld/canonical.hpp"

#include "dld/error.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>

namespace dld {

namespace {

int edge_index(const plane_graph& pg, vertex_t u, vertex_t v) {
    const auto& es = pg.g().edges();
    auto it = std::lower_bound(es.begin(), es.end(), edge(u, v));
    if (it == es.end() || !(*it == edge(u, v))) fail(errc::internal, "edge not found");
    return static_cast<int>(it - es.begin());
}

struct peel_event {
    vertex_t vk, cp, cn;
    std::vector<vertex_t> covered;
};

} // namespace

edge_color canon_order::color_of(const plane_graph& pg, vertex_t u, vertex_t v) const {
    return colors[edge_index(pg, u, v)];
}

canon_order canonical_order(const plane_graph& pg) {
    int n = pg.num_vertices();
    if (n < 3) fail(errc::too_small, "need at least 3 vertices");
    if (pg.num_edges() != 3 * n - 6)
        fail(errc::not_maximal, "m = " + std::to_string(pg.num_edges()) + ", expected 3n-6");
    if (pg.outer_face().size() != 3)
        fail(errc::outer_face_not_triangle, "outer face has length " + std::to_string(pg.outer_face().size()));

    const auto& tri = pg.outer_face();
    edge base = std::min({edge(tri[0], tri[1]), edge(tri[1], tri[2]), edge(tri[2], tri[0])});
    vertex_t v1 = base.u, v2 = base.v;
    vertex_t vn = tri[0] + tri[1] + tri[2] - v1 - v2;

    const graph& g = pg.g();
    std::vector<char> removed(n, 0), on_contour(n, 0);
    std::vector<vertex_t> cprev(n, -1), cnext(n, -1);
    std::vector<int> chords(n, 0);
    std::priority_queue<vertex_t, std::vector<vertex_t>, std::greater<>> cand;

    on_contour[v1] = on_contour[v2] = on_contour[vn] = 1;
    cnext[v1] = vn;
    cprev[vn] = v1;
    cnext[vn] = v2;
    cprev[v2] = vn;
    cand.push(vn);

    auto eligible = [&](vertex_t v) {
        return on_contour[v] && !removed[v] && chords[v] == 0 && v != v1 && v != v2;
    };

    std::vector<vertex_t> order(n, -1);
    order[0] = v1;
    order[1] = v2;
    std::vector<peel_event> events;
    events.reserve(n - 3);

    for (int k = n; k >= 4; --k) {
        vertex_t vk = -1;
        while (!cand.empty()) {
            vertex_t top = cand.top();
            cand.pop();
            if (eligible(top)) {
                vk = top;
                break;
            }
        }
        if (vk < 0) fail(errc::internal, "no chord-free contour vertex available");

        removed[vk] = 1;
        on_contour[vk] = 0;
        order[k - 1] = vk;
        vertex_t cp = cprev[vk], cn = cnext[vk];

        // remaining neighbors in rotation order; the interior ones form one
        // consecutive arc between cp and cn
        std::vector<vertex_t> rem;
        rem.reserve(g.degree(vk));
        for (vertex_t x : pg.rotation(vk))
            if (!removed[x]) rem.push_back(x);
        int rs = static_cast<int>(rem.size());
        int t = rs - 2;
        int ip = -1, in = -1;
        for (int i = 0; i < rs; ++i) {
            if (rem[i] == cp) ip = i;
            if (rem[i] == cn) in = i;
        }
        assert(ip >= 0 && in >= 0);

        std::vector<vertex_t> covered;
        covered.reserve(t);
        for (int i = (ip + 1) % rs; i != in; i = (i + 1) % rs) covered.push_back(rem[i]);
        if (static_cast<int>(covered.size()) != t) {
            covered.clear();
            for (int i = (in + 1) % rs; i != ip; i = (i + 1) % rs) covered.push_back(rem[i]);
            std::reverse(covered.begin(), covered.end());
            assert(static_cast<int>(covered.size()) == t);
        }

        if (t == 0) {
            // cp and cn become contour-adjacent; their connecting edge stops
            // being a chord
            cnext[cp] = cn;
            cprev[cn] = cp;
            assert(g.has_edge(cp, cn));
            if (--chords[cp] == 0 && eligible(cp)) cand.push(cp);
            if (--chords[cn] == 0 && eligible(cn)) cand.push(cn);
        } else {
            vertex_t prev = cp;
            for (vertex_t u : covered) {
                cnext[prev] = u;
                cprev[u] = prev;
                prev = u;
            }
            cnext[prev] = cn;
            cprev[cn] = prev;
            for (vertex_t u : covered) {
                on_contour[u] = 1;
                for (vertex_t x : g.neighbors(u)) {
                    if (!on_contour[x] || removed[x]) continue;
                    if (x == cprev[u] || x == cnext[u] || x == u) continue;
                    ++chords[u];
                    ++chords[x];
                }
            }
            for (vertex_t u : covered)
                if (eligible(u)) cand.push(u);
        }
        events.push_back({vk, cp, cn, std::move(covered)});
    }

    vertex_t v3 = cnext[v1];
    assert(v3 >= 0 && cnext[v3] == v2);
    assert(g.has_edge(v1, v3) && g.has_edge(v2, v3) && g.has_edge(v1, v2));
    order[2] = v3;

    canon_order co;
    co.order = std::move(order);
    co.rank.assign(n, -1);
    for (int i = 0; i < n; ++i) co.rank[co.order[i]] = i;
    co.colors.assign(pg.num_edges(), edge_color::uncolored);
    co.colors[edge_index(pg, v1, v3)] = edge_color::blue;
    co.colors[edge_index(pg, v2, v3)] = edge_color::green;
    for (const auto& ev : events) {
        co.colors[edge_index(pg, ev.cp, ev.vk)] = edge_color::blue;
        co.colors[edge_index(pg, ev.vk, ev.cn)] = edge_color::green;
        for (vertex_t u : ev.covered) co.colors[edge_index(pg, u, ev.vk)] = edge_color::red;
    }
    return co;
}

namespace {

bool check_tree(const std::vector<std::pair<vertex_t, vertex_t>>& edges,
                const std::vector<vertex_t>& expected_vertices, int n) {
    std::vector<char> in_set(n, 0);
    for (vertex_t v : expected_vertices) in_set[v] = 1;
    if (edges.size() + 1 != expected_vertices.size()) return false;
    std::vector<vertex_t> dsu(n);
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](vertex_t x) {
        while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        if (!in_set[a] || !in_set[b]) return false;
        vertex_t ra = find(a), rb = find(b);
        if (ra == rb) return false; // cycle
        dsu[ra] = rb;
    }
    return true; // |V|-1 edges and acyclic => connected tree
}

} // namespace

canon_check validate_canonical_order(const plane_graph& pg, const canon_order& co) {
    int n = pg.num_vertices();
    auto bad = [](std::string reason) { return canon_check{false, std::move(reason)}; };

    if (n < 3 || pg.num_edges() != 3 * n - 6) return bad("not-maximal");
    if (pg.outer_face().size() != 3) return bad("outer-face-not-triangle");
    if (static_cast<int>(co.order.size()) != n) return bad("not-permutation");
    {
        std::vector<char> seen(n, 0);
        for (vertex_t v : co.order) {
            if (v < 0 || v >= n || seen[v]) return bad("not-permutation");
            seen[v] = 1;
        }
    }
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[co.order[i]] = i;

    vertex_t v1 = co.order[0], v2 = co.order[1], vn = co.order[n - 1];
    {
        std::vector<vertex_t> a{v1, v2, vn}, b = pg.outer_face();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return bad("outer-face-mismatch");
    }
    const graph& g = pg.g();
    if (!g.has_edge(v1, v2)) return bad("base-edge-missing");

    // forward contour simulation: P.1 (>= 2 placed neighbors) and P.2
    // (neighbors consecutive on the contour)
    std::vector<char> placed(n, 0), on_contour(n, 0), mark(n, 0);
    std::vector<vertex_t> cprev(n, -1), cnext(n, -1);
    placed[v1] = placed[v2] = on_contour[v1] = on_contour[v2] = 1;
    cnext[v1] = v2;
    cprev[v2] = v1;
    for (int k = 3; k <= n; ++k) {
        vertex_t v = co.order[k - 1];
        std::vector<vertex_t> s;
        for (vertex_t u : g.neighbors(v))
            if (placed[u]) s.push_back(u);
        if (static_cast<int>(s.size()) < 2) return bad("P1");
        for (vertex_t u : s) {
            if (!on_contour[u]) return bad("P2");
            mark[u] = 1;
        }
        vertex_t wl = -1;
        int left_ends = 0;
        for (vertex_t u : s)
            if (cprev[u] < 0 || !mark[cprev[u]]) {
                wl = u;
                ++left_ends;
            }
        bool consecutive = left_ends == 1;
        if (consecutive) {
            vertex_t w = wl;
            for (size_t i = 1; i < s.size(); ++i) {
                w = cnext[w];
                if (w < 0 || !mark[w]) {
                    consecutive = false;
                    break;
                }
            }
            if (consecutive) {
                vertex_t wr = w;
                for (vertex_t u = cnext[wl]; u != wr; u = cnext[u]) on_contour[u] = 0;
                cnext[wl] = v;
                cprev[v] = wl;
                cnext[v] = wr;
                cprev[wr] = v;
                placed[v] = on_contour[v] = 1;
            }
        }
        for (vertex_t u : s) mark[u] = 0;
        if (!consecutive) return bad("P2");
    }
    // P.3: every v_k (2 < k < n) keeps a neighbor later in the order
    for (int k = 3; k < n; ++k) {
        vertex_t v = co.order[k - 1];
        bool later = false;
        for (vertex_t u : g.neighbors(v)) later |= rank[u] > k - 1;
        if (!later) return bad("P3");
    }

    // color classes
    if (co.colors.size() != pg.g().edges().size()) return bad("colors-size");
    const auto& es = g.edges();
    std::vector<std::pair<vertex_t, vertex_t>> blue, green, red;
    int uncolored = 0;
    bool base_uncolored = false;
    for (size_t i = 0; i < es.size(); ++i) {
        edge e = es[i];
        switch (co.colors[i]) {
            case edge_color::uncolored:
                ++uncolored;
                base_uncolored |= e == edge(v1, v2);
                break;
            case edge_color::blue:
                if (!(e == edge(v1, vn))) blue.push_back({e.u, e.v});
                break;
            case edge_color::green:
                if (!(e == edge(v2, vn))) green.push_back({e.u, e.v});
                break;
            case edge_color::red:
                red.push_back({e.u, e.v});
                break;
        }
    }
    if (uncolored != 1 || !base_uncolored) return bad("colors-uncolored");

    std::vector<vertex_t> inner(co.order.begin() + 2, co.order.end() - 1);
    auto with = [&](vertex_t extra) {
        std::vector<vertex_t> s = inner;
        s.push_back(extra);
        return s;
    };
    if (!check_tree(blue, with(v1), n)) return bad("colors-blue-tree");
    if (!check_tree(green, with(v2), n)) return bad("colors-green-tree");
    if (!check_tree(red, with(vn), n)) return bad("colors-red-tree");
    return {};
}

} // namespace dld
