#include "dld/generators.hpp"

#include "dld/error.hpp"

#include <array>
#include <random>

namespace dld {

graph gen_star(int n) {
    if (n < 1) fail(errc::too_small, "need n >= 1");
    std::vector<edge> es;
    es.reserve(n - 1);
    for (vertex_t v = 1; v < n; ++v) es.push_back(edge(0, v));
    return graph::from_edges(n, es);
}

graph gen_cycle(int n) {
    if (n < 3) fail(errc::too_small, "need n >= 3");
    std::vector<edge> es;
    es.reserve(n);
    for (vertex_t v = 0; v < n; ++v) es.push_back(edge(v, (v + 1) % n));
    return graph::from_edges(n, es);
}

graph gen_complete(int n) {
    if (n < 1) fail(errc::too_small, "need n >= 1");
    std::vector<edge> es;
    es.reserve(n * (n - 1) / 2);
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v) es.push_back(edge(u, v));
    return graph::from_edges(n, es);
}

graph gen_maximal_planar(int n, std::uint64_t seed) {
    if (n < 3) fail(errc::too_small, "need n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<edge> es{edge(0, 1), edge(1, 2), edge(0, 2)};
    std::vector<std::array<vertex_t, 3>> faces{{0, 1, 2}};
    es.reserve(3 * n - 6);
    for (vertex_t v = 3; v < n; ++v) {
        // modulo keeps the sequence identical across standard library
        // implementations; the slight bias is irrelevant here
        size_t i = static_cast<size_t>(rng() % faces.size());
        auto [a, b, c] = faces[i];
        faces[i] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
        es.push_back(edge(a, v));
        es.push_back(edge(b, v));
        es.push_back(edge(c, v));
    }
    return graph::from_edges(n, es);
}

} // namespace dld
