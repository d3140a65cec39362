#pragma once

#include "peiffer/equator.hpp"

#include <optional>

namespace peiffer {

/// Static SVG: boundary circle with the global basepoint, vertices on an inner
/// circle, arcs as labelled chords. With `upper` given, nodes flagged true sit
/// above a highlighted equator and the rest below it.
std::string render_svg(const Picture& p, const std::optional<std::vector<bool>>& upper = std::nullopt);

/// Glued picture with the r_i vertices above the equator.
std::string render_svg(const EquatorPicture& e);

/// Graphviz DOT: one node per picture node, one edge per arc.
std::string render_dot(const Picture& p);

}  // namespace peiffer
