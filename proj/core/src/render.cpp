#include "dld/io.hpp"

#include "dld/error.hpp"

#include <algorithm>
#include <ostream>

namespace dld {

void render_svg(std::ostream& out, const graph& g, const grid_drawing& d, int scale) {
    if (static_cast<int>(d.size()) != g.num_vertices())
        fail(errc::missing_vertex_position, "drawing does not cover all vertices");
    if (scale < 1) fail(errc::too_small, "scale must be >= 1");
    point lo = d.size() ? d.min_corner() : point{0, 0};
    point hi = d.size() ? d.max_corner() : point{0, 0};
    i64 w = (hi.x - lo.x + 2) * scale, h = (hi.y - lo.y + 2) * scale;
    auto px = [&](point p) { return (p.x - lo.x + 1) * scale; };
    auto py = [&](point p) { return (hi.y - p.y + 1) * scale; }; // flip y for screen space
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h
        << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
    double stroke = std::max(1.0, scale / 10.0);
    for (const edge& e : g.edges())
        out << "  <line x1=\"" << px(d[e.u]) << "\" y1=\"" << py(d[e.u]) << "\" x2=\""
            << px(d[e.v]) << "\" y2=\"" << py(d[e.v]) << "\" stroke=\"#444\" stroke-width=\""
            << stroke << "\"/>\n";
    for (vertex_t v = 0; v < d.size(); ++v)
        out << "  <circle cx=\"" << px(d[v]) << "\" cy=\"" << py(d[v]) << "\" r=\""
            << 0.5 * scale << "\" fill=\"#4a90d9\" fill-opacity=\"0.75\" stroke=\"#134\"/>\n";
    out << "</svg>\n";
}

} // namespace dld
