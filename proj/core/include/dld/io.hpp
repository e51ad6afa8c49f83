#pragma once

#include "dld/drawing.hpp"
#include "dld/graph.hpp"
#include "dld/verify.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dld {

/* graph file: "n <count>" then "e <u> <v>" lines, '#' comments.
   errors carry 1-based line numbers. */
graph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const graph& g);

/* drawing file: "n <count>" then "v <id> <x> <y>" lines */
struct parsed_drawing {
    int n = 0;
    std::vector<std::optional<point>> pos;

    /* throws missing_vertex_position unless every vertex has a position */
    grid_drawing to_drawing() const;
};
parsed_drawing parse_drawing(std::istream& in);
void write_drawing(std::ostream& out, const grid_drawing& d);

/* embedding file: "rot <v> <n1> <n2> ..." giving the ccw neighbor order */
std::vector<std::vector<vertex_t>> parse_rotation(std::istream& in, int n);
void write_rotation(std::ostream& out, const std::vector<std::vector<vertex_t>>& rot);

/* one circle per vertex (radius scale/2), one line per edge, y axis flipped,
   1 grid unit of margin around the bounding box */
void render_svg(std::ostream& out, const graph& g, const grid_drawing& d, int scale = 20);

void write_report_text(std::ostream& out, const verify_report& r);
void write_report_json(std::ostream& out, const verify_report& r);

/* `dld` command line; returns the process exit code:
   0 success, 1 verification failure, 2 usage/parse/domain errors */
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dld
