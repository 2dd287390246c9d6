#include "meshes.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace sos::meshes {

MeshData cube(long s) {
  MeshData m;
  for (int k = 0; k < 8; ++k) {
    const int x = (k == 1 || k == 2 || k == 5 || k == 6), y = (k == 2 || k == 3 || k == 6 || k == 7), z = k >= 4;
    m.vertices.push_back({x * s, y * s, z * s});
  }
  m.triangles = {{0, 2, 1}, {0, 3, 2}, {4, 5, 6}, {4, 6, 7}, {0, 1, 5}, {0, 5, 4},
                 {1, 2, 6}, {1, 6, 5}, {2, 3, 7}, {2, 7, 6}, {3, 0, 4}, {3, 4, 7}};
  return m;
}

MeshData tetrahedron(long s) {
  MeshData m;
  m.vertices = {{0, 0, 0}, {s, 0, 0}, {0, s, 0}, {0, 0, s}};
  m.triangles = {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {0, 3, 2}};
  return m;
}

MeshData sphere(unsigned n, long radius) {
  MeshData m;
  std::map<std::array<long, 3>, std::uint32_t> ids;
  auto vertex = [&](long x, long y, long z) {
    const std::array<long, 3> key{x, y, z};
    if (auto it = ids.find(key); it != ids.end()) return it->second;
    const double len = std::sqrt(double(x * x + y * y + z * z));
    const auto id = static_cast<std::uint32_t>(m.vertices.size());
    m.vertices.push_back({std::lround(radius * x / len), std::lround(radius * y / len), std::lround(radius * z / len)});
    ids.emplace(key, id);
    return id;
  };
  const long N = n;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) {
        auto at = [&](long i, long j) { return vertex(sx * i, sy * j, sz * (N - i - j)); };
        for (long i = 0; i < N; ++i)
          for (long j = 0; i + j < N; ++j) {
            m.triangles.push_back({at(i, j), at(i + 1, j), at(i, j + 1)});
            if (i + j + 2 <= N) m.triangles.push_back({at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
          }
      }
  return m;
}

MeshData torus(unsigned u, unsigned v, long major, long minor) {
  MeshData m;
  const double tau = 2 * std::numbers::pi;
  for (unsigned i = 0; i < u; ++i)
    for (unsigned j = 0; j < v; ++j) {
      const double a = tau * i / u, b = tau * j / v;
      const double ring = major + minor * std::cos(b);
      m.vertices.push_back({std::lround(ring * std::cos(a)), std::lround(ring * std::sin(a)),
                            std::lround(minor * std::sin(b))});
    }
  auto id = [&](unsigned i, unsigned j) { return static_cast<std::uint32_t>((i % u) * v + (j % v)); };
  for (unsigned i = 0; i < u; ++i)
    for (unsigned j = 0; j < v; ++j) {
      m.triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      m.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return m;
}

std::string to_off(const MeshData& m) {
  std::ostringstream out;
  out << "OFF\n" << m.vertices.size() << " " << m.triangles.size() << " 0\n";
  for (const auto& p : m.vertices) out << p[0] << " " << p[1] << " " << p[2] << "\n";
  for (const auto& t : m.triangles) out << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
  return out.str();
}

}  // namespace sos::meshes
