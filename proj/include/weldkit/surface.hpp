#pragma once

#include <cstddef>
#include <vector>

#include "weldkit/diagram.hpp"

namespace weld {

/// Combinatorial map on a closed oriented surface: darts paired by `alpha`,
/// `sigma` the counterclockwise successor around each vertex.
struct SurfaceMap {
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> sigma;
  std::vector<int> vertex_of;  // dart -> vertex
  int vertex_count = 0;
};

/// Immersed circle obtained by replacing every virtual crossing with a
/// 1-handle.
///
/// At a virtual crossing the earlier strand stays in the plane and the later
/// one climbs over a handle whose feet sit on either side of it. To keep the
/// map cellular each handle adds auxiliary vertices: one on the earlier
/// strand, and two on each attaching circle (the foot, and a point joined to
/// the strand vertex by a non-curve edge). Only classical crossings count as
/// curve vertices. The empty diagram maps to the round circle with one vertex
/// at the basepoint.
struct SurfaceCurve {
  SurfaceMap map;
  int genus = 0;
  int curve_vertices = 0;       // former classical crossings
  GaussCode curve_code;         // Gauss code of the immersed circle
};

SurfaceCurve representing_surface(const PlanarDiagram& d);

struct SurfaceCounts {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
};

SurfaceCounts surface_counts(const SurfaceCurve& sc);

/// (2 - chi) / 2 from face tracing of the map.
int surface_genus(const SurfaceCurve& sc);

}  // namespace weld
