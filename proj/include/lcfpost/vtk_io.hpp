#pragma once

#include <span>
#include <string>
#include <vector>

#include "lcfpost/mesh.hpp"
#include "lcfpost/surface.hpp"

namespace lcfpost {

// Writes the surface triangulation plus one named scalar in legacy ASCII
// unstructured-grid format (quadratic-triangle cells, type 22). The value
// count selects the attachment: one per face -> CELL_DATA, one per surface
// node (order of surface_node_indices) -> POINT_DATA. Values are printed
// with 17 significant digits so a re-read reproduces them bit-exactly.
// The write is atomic (temp file + rename).
void export_hazard_field(const Mesh& mesh, const SurfaceMesh& surface,
                         std::span<const double> values, const std::string& label,
                         const std::string& path, const std::string& title = "");

// Minimal reader for round-trip checks of files produced by the exporter.
struct GridFile {
  std::string title;
  std::vector<Vec3> points;
  std::vector<std::array<int, 6>> cells;
  std::string scalar_label;
  bool cell_data = true;
  std::vector<double> scalars;
};

GridFile read_grid_file(const std::string& path);

}  // namespace lcfpost
