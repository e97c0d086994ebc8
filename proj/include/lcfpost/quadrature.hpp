#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "lcfpost/mesh.hpp"
#include "lcfpost/surface.hpp"

namespace lcfpost {

// Symmetric Gauss rule on the reference triangle. Weights sum to the
// reference area 1/2, so integrals are Σ weight * area_scale with
// area_scale the norm of the quadratic geometry map's tangent cross
// product.
struct TriangleRule {
  int degree = 0;
  std::vector<std::array<double, 3>> barycentric;
  std::vector<double> weights;
};

// Available degrees: 2, 4, 6. Throws ValidationError otherwise.
const TriangleRule& triangle_rule(int degree);

struct QuadPoint {
  int face = 0;
  std::array<double, 3> barycentric{};
  double weight = 0.0;
  double area_scale = 0.0;
  double temperature = 0.0;
  std::array<double, 6> stress{};
};

struct SurfaceQuadrature {
  std::vector<QuadPoint> points;  // face-major, rule order within a face
  int degree = 0;
  std::size_t points_per_face = 0;
  std::size_t face_count = 0;

  // Curved face area: Σ weight * area_scale over the face's points.
  double face_area(std::size_t face) const;
  double total_area() const;
};

// Maps the rule through the 6-node quadratic shape functions on every
// surface face and interpolates the nodal fields at each point. Throws
// ComputationError if a face is degenerate (area_scale <= 0).
SurfaceQuadrature build_quadrature(const Mesh& mesh, const FieldSet& fields,
                                   const SurfaceMesh& surface, int degree = 4);

// Tri6 shape functions at a barycentric point.
std::array<double, 6> tri6_shape(const std::array<double, 3>& bary);

// Position and tangent vectors of the quadratic geometry map at a
// barycentric point of one face.
void tri6_geometry(const Mesh& mesh, const SurfaceFace& face,
                   const std::array<double, 3>& bary, Vec3& position,
                   Vec3& tangent_xi, Vec3& tangent_eta);

}  // namespace lcfpost
