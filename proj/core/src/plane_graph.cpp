#include "dld/plane_graph.hpp"

#include "dld/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace dld {

plane_graph::plane_graph(graph g, std::vector<std::vector<vertex_t>> rotation,
                         std::vector<vertex_t> outer_face)
    : g_(std::move(g)), rot_(std::move(rotation)), outer_(std::move(outer_face)) {}

namespace {

/* position of each neighbor inside each rotation list */
std::vector<std::unordered_map<vertex_t, int>> neighbor_index(const std::vector<std::vector<vertex_t>>& rot) {
    std::vector<std::unordered_map<vertex_t, int>> idx(rot.size());
    for (size_t v = 0; v < rot.size(); ++v) {
        idx[v].reserve(rot[v].size() * 2);
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) idx[v][rot[v][i]] = i;
    }
    return idx;
}

} // namespace

std::vector<std::vector<vertex_t>> plane_graph::faces() const {
    int n = num_vertices();
    auto idx = neighbor_index(rot_);
    std::vector<std::vector<char>> used(n);
    for (vertex_t v = 0; v < n; ++v) used[v].assign(rot_[v].size(), 0);

    std::vector<std::vector<vertex_t>> out;
    for (vertex_t u = 0; u < n; ++u) {
        for (int i = 0; i < static_cast<int>(rot_[u].size()); ++i) {
            if (used[u][i]) continue;
            std::vector<vertex_t> walk;
            vertex_t a = u;
            int ai = i;
            do {
                used[a][ai] = 1;
                walk.push_back(a);
                vertex_t b = rot_[a][ai];
                int bi = idx[b].at(a);
                int deg = static_cast<int>(rot_[b].size());
                ai = (bi - 1 + deg) % deg; // ccw-predecessor of a at b
                a = b;
            } while (!(a == u && ai == i));
            out.push_back(std::move(walk));
        }
    }
    return out;
}

void plane_graph::validate() const {
    int n = num_vertices();
    if (static_cast<int>(rot_.size()) != n) fail(errc::invalid_rotation, "rotation size mismatch");
    for (vertex_t v = 0; v < n; ++v) {
        auto a = g_.neighbors(v);
        auto r = rot_[v];
        std::sort(a.begin(), a.end());
        std::sort(r.begin(), r.end());
        if (a != r)
            fail(errc::invalid_rotation,
                 "rotation of vertex " + std::to_string(v) + " is not a permutation of its neighbors");
    }
    int f = num_faces();
    int expected = 2 - n + num_edges();
    if (f != expected)
        fail(errc::invalid_rotation, "face count " + std::to_string(f) + " != " +
                                         std::to_string(expected) + " required by euler's formula");
    // outer face must be one of the face walks (up to cyclic shift)
    if (outer_.empty()) fail(errc::invalid_rotation, "no outer face designated");
    auto rotations_equal = [](const std::vector<vertex_t>& a, const std::vector<vertex_t>& b) {
        if (a.size() != b.size()) return false;
        size_t len = a.size();
        for (size_t s = 0; s < len; ++s) {
            bool eq = true;
            for (size_t i = 0; i < len && eq; ++i) eq = a[i] == b[(s + i) % len];
            if (eq) return true;
        }
        return false;
    };
    for (const auto& fw : faces())
        if (rotations_equal(fw, outer_)) return;
    fail(errc::invalid_rotation, "outer face is not a face of the embedding");
}

} // namespace dld
