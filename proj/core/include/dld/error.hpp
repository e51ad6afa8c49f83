#pragma once

#include <stdexcept>
#include <string>

namespace dld {

enum class errc {
    // graph / embedding
    too_small,
    disconnected,
    not_planar,
    not_maximal,
    outer_face_not_triangle,
    invalid_rotation,
    // shift method
    cyclic_forest,
    // constructions
    vertex_on_edge,
    factors_too_small,
    not_prime,
    invalid_ordering,
    too_large,
    certification_failed,
    degenerate_rounding,
    not_found,
    // geometry
    degenerate_segment,
    missing_vertex_position,
    // io
    parse_error,
    duplicate_edge,
    self_loop,
    non_integer_coordinate,
    unknown_vertex,
    usage,
    io_error,
    internal,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
    errc code;

    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

} // namespace dld
