#pragma once

#include <array>
#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

namespace lcfpost {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

struct Node {
  long id = 0;
  Vec3 coords;
};

// 10-node quadratic tetrahedron. Local ordering: vertices 0..3, then
// midside nodes on edges (0,1) (1,2) (0,2) (0,3) (1,3) (2,3).
// `nodes` holds mesh indices, resolved from file ids at load time.
struct QuadTet {
  long id = 0;
  std::array<int, 10> nodes{};
};

class Mesh {
public:
  std::vector<Node> nodes;
  std::vector<QuadTet> elements;

  // -1 if the id is unknown.
  int index_of(long node_id) const;

  void rebuild_index();

  // Checks id uniqueness, coordinate finiteness, element node resolution
  // and positive geometric Jacobian at each element centroid.
  void validate() const;

  Vec3 element_centroid(const QuadTet& e) const;

private:
  std::unordered_map<long, int> id_to_index_;
};

// Nodal fields, indexed like Mesh::nodes. Stress components are ordered
// xx yy zz xy yz xz.
struct FieldSet {
  std::vector<double> temperature;
  std::vector<std::array<double, 6>> stress;
};

struct Model {
  Mesh mesh;
  FieldSet fields;
};

// Reads the block-structured text model format (NODES / ELEMENTS /
// FIELD <name> <arity> blocks, '#' comments). Throws ValidationError with
// the offending line for malformed records, dangling node ids or
// missing/incomplete fields.
Model load_model(const std::string& path);

// Tet10 geometric Jacobian determinant at barycentric (1/4,1/4,1/4,1/4).
double tet10_centroid_jacobian(const Mesh& mesh, const QuadTet& e);

}  // namespace lcfpost
