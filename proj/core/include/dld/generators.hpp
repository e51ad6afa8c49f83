#pragma once

#include "dld/graph.hpp"

#include <cstdint>

namespace dld {

/* center 0, leaves 1..n-1; n >= 1 */
graph gen_star(int n);
/* cycle 0-1-...-(n-1)-0; n >= 3 */
graph gen_cycle(int n);
/* complete graph; n >= 1 */
graph gen_complete(int n);

/* random stacked triangulation: start from K_3, repeatedly split a uniformly
   random inner face with a new degree-3 vertex. deterministic per seed.
   n >= 3 */
graph gen_maximal_planar(int n, std::uint64_t seed);

} // namespace dld
