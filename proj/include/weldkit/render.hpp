#pragma once

#include <string>

#include "weldkit/diagram.hpp"

namespace weld {

/// Static SVG drawing. The layout is a barycentric (Tutte) embedding of the
/// traced map, subdivided so every edge has two interior points and every
/// inner face a center, with one simple face pinned to a circle. Classical
/// under-strands are broken at the crossing; virtual crossings get a small
/// circle. The diagram is put in canonical form first, so the output depends
/// only on the canonical code.
std::string render_svg(const PlanarDiagram& d);

}  // namespace weld
