#include "dld/io.hpp"

#include "dld/constructions.hpp"
#include "dld/error.hpp"
#include "dld/generators.hpp"
#include "dld/plane_graph.hpp"
#include "dld/shift.hpp"
#include "dld/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <string>

namespace dld {

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(errc::io_error, "cannot read '" + path + "'");
    return f;
}

graph load_graph(const std::string& path) {
    auto f = open_in(path);
    return parse_graph(f);
}

grid_drawing load_drawing(const std::string& path) {
    auto f = open_in(path);
    return parse_drawing(f).to_drawing();
}

void save(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream f(path);
    if (!f) fail(errc::io_error, "cannot write '" + path + "'");
    writer(f);
    if (!f) fail(errc::io_error, "write to '" + path + "' failed");
}

std::vector<vertex_t> load_ordering(const std::string& path, int n) {
    auto f = open_in(path);
    std::vector<vertex_t> ord;
    std::string line;
    int line_no = 0;
    while (std::getline(f, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            try {
                size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                if (v < 0 || v >= n) fail(errc::unknown_vertex, "ordering mentions vertex " + tok);
                ord.push_back(static_cast<vertex_t>(v));
            } catch (const std::invalid_argument&) {
                fail(errc::parse_error, "line " + std::to_string(line_no) +
                                            ": expected a vertex id, got '" + tok + "'");
            } catch (const std::out_of_range&) {
                fail(errc::parse_error, "line " + std::to_string(line_no) + ": id out of range");
            }
        }
    }
    return ord;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"grid drawings with unit-diameter vertex disks and clearance-certified edges"};
    app.name("dld");
    app.require_subcommand(1);

    std::string graph_path, drawing_path, out_path, rot_path, order_path;
    int n = 0, scale = 20;
    std::uint64_t seed = 1;
    i64 phi_x = 0, phi_y = 0;
    bool rcm = false, exact = false, planar = false, json = false, brute = false;

    CLI::App* draw = app.add_subcommand("draw", "construct a drawing");
    draw->require_subcommand(1);
    CLI::App* draw_planar_cmd = draw->add_subcommand("planar", "planar drawing via canonical-order insertion");
    draw_planar_cmd->add_option("-i,--input", graph_path, "graph file")->required();
    draw_planar_cmd->add_option("-e,--embedding", rot_path, "rotation-system file");
    draw_planar_cmd->add_option("-o,--output", out_path, "drawing file")->required();
    CLI::App* draw_complete = draw->add_subcommand("complete", "convex drawing of K_n");
    draw_complete->add_option("-n", n, "vertex count")->required();
    draw_complete->add_option("-o,--output", out_path, "drawing file")->required();
    CLI::App* draw_bw = draw->add_subcommand("bandwidth", "drawing from a bandwidth ordering");
    draw_bw->add_option("-i,--input", graph_path, "graph file")->required();
    draw_bw->add_option("-o,--output", out_path, "drawing file")->required();
    auto* opt_order = draw_bw->add_option("--order", order_path, "ordering file (vertex ids)");
    auto* opt_rcm = draw_bw->add_flag("--rcm", rcm, "reverse breadth-first heuristic ordering");
    auto* opt_exact = draw_bw->add_flag("--exact", exact, "exact minimum-bandwidth ordering (n <= 12)");
    opt_order->excludes(opt_rcm, opt_exact);
    opt_rcm->excludes(opt_exact);

    CLI::App* stretch_cmd = app.add_subcommand("stretch", "scale a drawing into a disk-link drawing");
    stretch_cmd->add_option("-i,--input", graph_path, "graph file")->required();
    stretch_cmd->add_option("-d,--drawing", drawing_path, "drawing file")->required();
    stretch_cmd->add_option("-x", phi_x, "horizontal factor (default: minimal)");
    stretch_cmd->add_option("-y", phi_y, "vertical factor (default: minimal)");
    stretch_cmd->add_option("-o,--output", out_path, "drawing file")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "certify a drawing");
    verify_cmd->add_option("-i,--input", graph_path, "graph file")->required();
    verify_cmd->add_option("-d,--drawing", drawing_path, "drawing file")->required();
    verify_cmd->add_flag("--planar", planar, "also require a crossing-free drawing");
    verify_cmd->add_flag("--json", json, "JSON report");
    verify_cmd->add_flag("--brute", brute, "brute-force scan instead of bucketing");

    CLI::App* render_cmd = app.add_subcommand("render", "render a drawing to SVG");
    render_cmd->add_option("-i,--input", graph_path, "graph file")->required();
    render_cmd->add_option("-d,--drawing", drawing_path, "drawing file")->required();
    render_cmd->add_option("-o,--output", out_path, "SVG file")->required();
    render_cmd->add_option("--scale", scale, "pixels per grid unit");

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a graph");
    std::string kind;
    gen_cmd->add_option("type", kind, "star | cycle | complete | maximal-planar")
        ->required()
        ->check(CLI::IsMember({"star", "cycle", "complete", "maximal-planar"}));
    gen_cmd->add_option("-n", n, "vertex count")->required();
    gen_cmd->add_option("--seed", seed, "random seed (maximal-planar)");
    gen_cmd->add_option("-o,--output", out_path, "graph file")->required();

    std::vector<const char*> argv;
    argv.push_back("dld");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (draw_planar_cmd->parsed()) {
            graph g = load_graph(graph_path);
            plane_graph pg = [&] {
                if (rot_path.empty()) return embed(g);
                auto f = open_in(rot_path);
                return embed_with_rotation(g, parse_rotation(f, g.num_vertices()));
            }();
            grid_drawing d = draw_planar(pg).drawing;
            d.normalize();
            save(out_path, [&](std::ostream& o) { write_drawing(o, d); });
        } else if (draw_complete->parsed()) {
            grid_drawing d = draw_complete_convex(n);
            save(out_path, [&](std::ostream& o) { write_drawing(o, d); });
        } else if (draw_bw->parsed()) {
            graph g = load_graph(graph_path);
            std::vector<vertex_t> ord;
            if (!order_path.empty())
                ord = load_ordering(order_path, g.num_vertices());
            else if (rcm)
                ord = rcm_ordering(g);
            else if (exact)
                ord = exact_bandwidth_small(g);
            else
                fail(errc::usage, "pick one of --order, --rcm, --exact");
            i64 b = std::max<i64>(1, bandwidth_of_ordering(g, ord));
            grid_drawing d = draw_bandwidth(g, ord, b);
            save(out_path, [&](std::ostream& o) { write_drawing(o, d); });
        } else if (stretch_cmd->parsed()) {
            graph g = load_graph(graph_path);
            grid_drawing d = load_drawing(drawing_path);
            stretch_factors f = min_stretch_factors(g, d);
            if (phi_x > 0) f.phi_x = phi_x;
            if (phi_y > 0) f.phi_y = phi_y;
            grid_drawing s = stretch(g, d, f);
            save(out_path, [&](std::ostream& o) { write_drawing(o, s); });
        } else if (verify_cmd->parsed()) {
            graph g = load_graph(graph_path);
            grid_drawing d = load_drawing(drawing_path);
            verify_report rep =
                check_disk_link(g, d, brute ? check_mode::brute_force : check_mode::bucketed);
            if (planar) check_planar_drawing(g, d, rep);
            if (json)
                write_report_json(out, rep);
            else
                write_report_text(out, rep);
            bool ok = rep.is_disk_link && (!planar || rep.planar_ok());
            return ok ? 0 : 1;
        } else if (render_cmd->parsed()) {
            graph g = load_graph(graph_path);
            grid_drawing d = load_drawing(drawing_path);
            save(out_path, [&](std::ostream& o) { render_svg(o, g, d, scale); });
        } else if (gen_cmd->parsed()) {
            graph g = kind == "star"       ? gen_star(n)
                      : kind == "cycle"    ? gen_cycle(n)
                      : kind == "complete" ? gen_complete(n)
                                           : gen_maximal_planar(n, seed);
            save(out_path, [&](std::ostream& o) { write_graph(o, g); });
        }
        return 0;
    } catch (const error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "Internal: " << e.what() << "\n";
        return 2;
    }
}

} // namespace dld
