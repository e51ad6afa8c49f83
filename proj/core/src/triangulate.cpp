#include "dld/error.hpp"
#include "dld/plane_graph.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace dld {

namespace {

bool cyclic_equal(const std::vector<vertex_t>& a, const std::vector<vertex_t>& b) {
    if (a.size() != b.size()) return false;
    size_t len = a.size();
    for (size_t s = 0; s < len; ++s) {
        bool eq = true;
        for (size_t i = 0; i < len && eq; ++i) eq = a[i] == b[(s + i) % len];
        if (eq) return true;
    }
    return false;
}

} // namespace

/* chord insertion keeps the rotation system face-consistent: a chord (u,w)
   cut inside a face enters rot(u) right after u's walk successor and rot(w)
   right after w's walk successor, so both sub-walks stay faces */
plane_graph triangulate(const plane_graph& pg) {
    int n = pg.num_vertices();
    if (n < 3) fail(errc::too_small, "need at least 3 vertices");

    if (pg.num_edges() == 3 * n - 6) {
        if (pg.outer_face().size() != 3)
            fail(errc::outer_face_not_triangle, "maximal planar graph with non-triangle outer face");
        return pg;
    }

    graph g = pg.g();
    auto rot = pg.rotations();
    auto faces = pg.faces();

    int outer_index = -1;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (cyclic_equal(faces[i], pg.outer_face())) {
            outer_index = i;
            break;
        }
    if (outer_index < 0) fail(errc::internal, "outer face is not a face walk");

    auto insert_after = [&](vertex_t at, vertex_t after, vertex_t nv) {
        auto& r = rot[at];
        auto it = std::find(r.begin(), r.end(), after);
        assert(it != r.end());
        r.insert(it + 1, nv);
    };
    auto add_chord = [&](std::vector<vertex_t>& p, int i, int j) {
        int s = static_cast<int>(p.size());
        insert_after(p[i], p[(i + 1) % s], p[j]);
        insert_after(p[j], p[(j + 1) % s], p[i]);
        g.add_edge(p[i], p[j]);
    };

    std::vector<vertex_t> outer_triangle;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        bool from_outer = fi == outer_index;
        std::vector<std::vector<vertex_t>> polys{faces[fi]};
        while (!polys.empty()) {
            std::vector<vertex_t> p = std::move(polys.back());
            polys.pop_back();
            while (p.size() > 3) {
                int s = static_cast<int>(p.size());
                int cut = -1;
                for (int i = 0; i < s; ++i) {
                    vertex_t u = p[i], w = p[(i + 2) % s];
                    if (u != w && !g.has_edge(u, w)) {
                        cut = i;
                        break;
                    }
                }
                if (cut >= 0) {
                    // ear at `cut`: repeated cuts at the same index fan from one apex,
                    // a blocked apex rotates to the next corner
                    add_chord(p, cut, (cut + 2) % s);
                    p.erase(p.begin() + (cut + 1) % s);
                    continue;
                }
                // no ear: split on any admissible chord and recurse
                int ci = -1, cj = -1;
                for (int i = 0; i < s && ci < 0; ++i)
                    for (int d = 2; d <= s - 2; ++d) {
                        int j = (i + d) % s;
                        if (p[i] != p[j] && !g.has_edge(p[i], p[j])) {
                            ci = i;
                            cj = j;
                            break;
                        }
                    }
                if (ci < 0) fail(errc::internal, "face admits no chord");
                add_chord(p, ci, cj);
                std::vector<vertex_t> p1, p2;
                for (int k = ci; k != cj; k = (k + 1) % s) p1.push_back(p[k]);
                p1.push_back(p[cj]);
                for (int k = cj; k != ci; k = (k + 1) % s) p2.push_back(p[k]);
                p2.push_back(p[ci]);
                polys.push_back(std::move(p1));
                p = std::move(p2);
            }
            if (from_outer) outer_triangle = p; // last residual triangle of the outer region
        }
    }

    if (g.num_edges() != 3 * n - 6) fail(errc::internal, "triangulation left m != 3n-6");
    plane_graph out(std::move(g), std::move(rot), std::move(outer_triangle));
    out.validate();
    return out;
}

} // namespace dld
