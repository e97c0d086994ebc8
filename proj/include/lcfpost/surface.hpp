#pragma once

#include <array>
#include <vector>

#include "lcfpost/mesh.hpp"

namespace lcfpost {

// 6-node quadratic triangular face: corners 0..2, then midside nodes on
// edges (0,1) (1,2) (2,0). Node values are mesh indices. Corner order is
// outward: the geometric normal at the centroid points away from the
// parent element.
struct SurfaceFace {
  std::array<int, 6> nodes{};
  long parent_element = 0;
  int parent_face = 0;
};

struct SurfaceMesh {
  std::vector<SurfaceFace> faces;
};

// Free-surface extraction: faces whose sorted corner triple appears in
// exactly one element. Faces are emitted in (element, local face) order.
// Throws ValidationError if a face key appears in more than two elements.
SurfaceMesh extract_surface(const Mesh& mesh);

// Mesh node indices referenced by the surface, ascending. This is the
// point numbering used by the grid exporter for per-node scalars.
std::vector<int> surface_node_indices(const SurfaceMesh& surface);

}  // namespace lcfpost
