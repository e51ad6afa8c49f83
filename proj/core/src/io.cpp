#include "dld/io.hpp"

#include "dld/error.hpp"

#include "json.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace dld {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

struct line_reader {
    std::istream& in;
    int line_no = 0;

    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            tokens.clear();
            std::istringstream ss(line);
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }
};

bool is_integer_token(const std::string& s) {
    size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool is_numeric_token(const std::string& s) {
    size_t digits = 0;
    for (char ch : s)
        if (std::isdigit(static_cast<unsigned char>(ch)))
            ++digits;
        else if (ch != '-' && ch != '+' && ch != '.' && ch != 'e' && ch != 'E')
            return false;
    return digits > 0;
}

i64 parse_int(const std::string& s, int line) {
    if (!is_integer_token(s)) parse_fail(line, "expected an integer, got '" + s + "'");
    try {
        return std::stoll(s);
    } catch (const std::out_of_range&) {
        parse_fail(line, "integer out of range: '" + s + "'");
    }
}

i64 parse_coordinate(const std::string& s, int line) {
    if (!is_integer_token(s)) {
        if (is_numeric_token(s))
            fail(errc::non_integer_coordinate, "line " + std::to_string(line) +
                                                   ": coordinate '" + s + "' is not an integer");
        parse_fail(line, "expected a coordinate, got '" + s + "'");
    }
    try {
        return std::stoll(s);
    } catch (const std::out_of_range&) {
        parse_fail(line, "coordinate out of range: '" + s + "'");
    }
}

int parse_header(line_reader& lr, std::vector<std::string>& tokens) {
    if (!lr.next(tokens)) parse_fail(lr.line_no + 1, "missing 'n <count>' header");
    if (tokens[0] != "n" || tokens.size() != 2)
        parse_fail(lr.line_no, "expected 'n <count>' header");
    i64 n = parse_int(tokens[1], lr.line_no);
    if (n < 0 || n > (i64(1) << 31)) parse_fail(lr.line_no, "vertex count out of range");
    return static_cast<int>(n);
}

vertex_t parse_vertex(const std::string& s, int n, int line) {
    i64 v = parse_int(s, line);
    if (v < 0 || v >= n)
        fail(errc::unknown_vertex,
             "line " + std::to_string(line) + ": vertex " + s + " out of range [0, " +
                 std::to_string(n) + ")");
    return static_cast<vertex_t>(v);
}

} // namespace

graph parse_graph(std::istream& in) {
    line_reader lr{in};
    std::vector<std::string> t;
    graph g(parse_header(lr, t));
    while (lr.next(t)) {
        if (t[0] != "e" || t.size() != 3) parse_fail(lr.line_no, "expected 'e <u> <v>'");
        g.add_edge(parse_vertex(t[1], g.num_vertices(), lr.line_no),
                   parse_vertex(t[2], g.num_vertices(), lr.line_no));
    }
    return g;
}

void write_graph(std::ostream& out, const graph& g) {
    out << "n " << g.num_vertices() << "\n";
    for (const edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
}

grid_drawing parsed_drawing::to_drawing() const {
    grid_drawing d;
    d.pos.reserve(n);
    for (vertex_t v = 0; v < n; ++v) {
        if (!pos[v])
            fail(errc::missing_vertex_position, "vertex " + std::to_string(v) + " has no position");
        d.pos.push_back(*pos[v]);
    }
    return d;
}

parsed_drawing parse_drawing(std::istream& in) {
    line_reader lr{in};
    std::vector<std::string> t;
    parsed_drawing pd;
    pd.n = parse_header(lr, t);
    pd.pos.assign(pd.n, std::nullopt);
    while (lr.next(t)) {
        if (t[0] != "v" || t.size() != 4) parse_fail(lr.line_no, "expected 'v <id> <x> <y>'");
        vertex_t v = parse_vertex(t[1], pd.n, lr.line_no);
        if (pd.pos[v]) parse_fail(lr.line_no, "duplicate position for vertex " + t[1]);
        pd.pos[v] = point{parse_coordinate(t[2], lr.line_no), parse_coordinate(t[3], lr.line_no)};
    }
    return pd;
}

void write_drawing(std::ostream& out, const grid_drawing& d) {
    out << "n " << d.size() << "\n";
    for (vertex_t v = 0; v < d.size(); ++v)
        out << "v " << v << " " << d[v].x << " " << d[v].y << "\n";
}

std::vector<std::vector<vertex_t>> parse_rotation(std::istream& in, int n) {
    line_reader lr{in};
    std::vector<std::string> t;
    std::vector<std::vector<vertex_t>> rot(n);
    std::vector<char> seen(n, 0);
    while (lr.next(t)) {
        if (t[0] != "rot" || t.size() < 2) parse_fail(lr.line_no, "expected 'rot <v> <neighbors...>'");
        vertex_t v = parse_vertex(t[1], n, lr.line_no);
        if (seen[v]) parse_fail(lr.line_no, "duplicate rotation for vertex " + t[1]);
        seen[v] = 1;
        for (size_t i = 2; i < t.size(); ++i)
            rot[v].push_back(parse_vertex(t[i], n, lr.line_no));
    }
    for (vertex_t v = 0; v < n; ++v)
        if (!seen[v]) parse_fail(lr.line_no + 1, "missing rotation for vertex " + std::to_string(v));
    return rot;
}

void write_rotation(std::ostream& out, const std::vector<std::vector<vertex_t>>& rot) {
    for (size_t v = 0; v < rot.size(); ++v) {
        out << "rot " << v;
        for (vertex_t u : rot[v]) out << " " << u;
        out << "\n";
    }
}

void write_report_text(std::ostream& out, const verify_report& r) {
    out << "is_disk_link: " << (r.is_disk_link ? "true" : "false") << "\n";
    out << "distinct_positions: " << (r.distinct_positions ? "true" : "false") << "\n";
    out << "min_res_sq: " << (r.min_res_sq ? rat_str(*r.min_res_sq) : "none") << "\n";
    if (r.witness)
        out << "witness: vertex " << r.witness->v << ", edge (" << r.witness->e.u << ", "
            << r.witness->e.v << ")\n";
    out << "grid: " << r.grid_w << " x " << r.grid_h << "\n";
    out << "crossings: " << r.crossings.size() << "\n";
    for (auto& [e1, e2] : r.crossings)
        out << "  (" << e1.u << ", " << e1.v << ") x (" << e2.u << ", " << e2.v << ")\n";
    out << "edge_overlaps: " << r.edge_overlaps.size() << "\n";
    for (auto& [e1, e2] : r.edge_overlaps)
        out << "  (" << e1.u << ", " << e1.v << ") / (" << e2.u << ", " << e2.v << ")\n";
    out << "vertex_on_edge: " << r.vertex_on_edge.size() << "\n";
    for (auto& [v, e] : r.vertex_on_edge)
        out << "  vertex " << v << " on (" << e.u << ", " << e.v << ")\n";
    out << "duplicate_positions: " << r.duplicate_positions.size() << "\n";
    for (auto& [a, b] : r.duplicate_positions) out << "  vertices " << a << ", " << b << "\n";
}

void write_report_json(std::ostream& out, const verify_report& r) {
    nlohmann::json j;
    j["is_disk_link"] = r.is_disk_link;
    j["distinct_positions"] = r.distinct_positions;
    j["min_res_sq"] = r.min_res_sq ? nlohmann::json(rat_str(*r.min_res_sq)) : nlohmann::json();
    if (r.witness)
        j["witness"] = {{"vertex", r.witness->v}, {"edge", {r.witness->e.u, r.witness->e.v}}};
    else
        j["witness"] = nullptr;
    j["grid"] = {{"w", r.grid_w}, {"h", r.grid_h}};
    auto edge_pairs = [](const std::vector<std::pair<edge, edge>>& ps) {
        nlohmann::json a = nlohmann::json::array();
        for (auto& [e1, e2] : ps) a.push_back({{e1.u, e1.v}, {e2.u, e2.v}});
        return a;
    };
    j["crossings"] = edge_pairs(r.crossings);
    j["edge_overlaps"] = edge_pairs(r.edge_overlaps);
    {
        nlohmann::json a = nlohmann::json::array();
        for (auto& [v, e] : r.vertex_on_edge) a.push_back({{"vertex", v}, {"edge", {e.u, e.v}}});
        j["vertex_on_edge"] = a;
    }
    {
        nlohmann::json a = nlohmann::json::array();
        for (auto& [x, y] : r.duplicate_positions) a.push_back({x, y});
        j["duplicate_positions"] = a;
    }
    out << j.dump(2) << "\n";
}

} // namespace dld
