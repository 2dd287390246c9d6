#include "sos/cubes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "sos/parallel.hpp"

namespace sos {

CubeSet::CubeSet(Rational side, std::span<const Point3> lows) : side_(std::move(side)) {
  if (side_.sign() != Sign::Positive) throw std::invalid_argument("cube side must be positive");
  cubes_.reserve(lows.size());
  for (std::size_t k = 0; k < lows.size(); ++k) cubes_.push_back({lows[k], side_, static_cast<std::uint32_t>(k)});
}

int UnionVertex::volume_weight() const {
  int w = 0;
  for (Octant o = 0; o < 8; ++o) {
    if (!covered(o)) continue;
    const int flips = ((o & 1u) ? 0 : 1) + ((o & 2u) ? 0 : 1) + ((o & 4u) ? 0 : 1);
    w += flips % 2 == 0 ? 1 : -1;
  }
  return w;
}

namespace {

// The six perturbed faces of a cube, [axis * 2 + side].
using FaceTable = std::array<PerturbedScalar, 6>;

FaceTable faces_of(const Cube& c) {
  FaceTable t;
  for (int a = 0; a < 3; ++a)
    for (FaceSide s : {FaceSide::Low, FaceSide::High}) t[a * 2 + static_cast<int>(s)] = c.face(a, s);
  return t;
}

bool strictly_between(const PerturbedScalar& x, const FaceTable& f, int axis) {
  return compare_perturbed(x, f[axis * 2]) == Order::Greater && compare_perturbed(x, f[axis * 2 + 1]) == Order::Less;
}

bool inside_sos(const std::array<const PerturbedScalar*, 3>& coord, const std::array<FaceIndex, 3>& prov,
                const FaceTable& f, std::uint32_t cube) {
  for (int a = 0; a < 3; ++a) {
    if (prov[a].cube == cube) return false;
    if (!strictly_between(*coord[a], f, a)) return false;
  }
  return true;
}

// Sorted closed neighbourhoods: cubes whose closed boxes meet cube k's,
// including k itself.  Equal sides mean a neighbour's low corner lies in one
// of the 27 surrounding side-length buckets.
std::vector<std::vector<std::uint32_t>> neighbourhoods(const CubeSet& s) {
  const auto& cubes = s.cubes();
  std::vector<std::vector<std::uint32_t>> out(cubes.size());
  if (cubes.empty()) return out;

  Point3 origin = cubes[0].low;
  for (const auto& c : cubes)
    for (int a = 0; a < 3; ++a) origin[a] = std::min(origin[a], c.low[a]);

  using Key = std::array<long, 3>;
  std::map<Key, std::vector<std::uint32_t>> buckets;
  std::vector<Key> keys(cubes.size());
  for (const auto& c : cubes) {
    for (int a = 0; a < 3; ++a) keys[c.id][a] = ((c.low[a] - origin[a]) / s.side()).floor().get_si();
    buckets[keys[c.id]].push_back(c.id);
  }

  for (const auto& c : cubes) {
    auto& nb = out[c.id];
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy)
        for (long dz = -1; dz <= 1; ++dz) {
          const Key k{keys[c.id][0] + dx, keys[c.id][1] + dy, keys[c.id][2] + dz};
          const auto it = buckets.find(k);
          if (it == buckets.end()) continue;
          for (std::uint32_t other : it->second) {
            bool meets = true;
            for (int a = 0; a < 3 && meets; ++a) meets = (cubes[other].low[a] - c.low[a]).abs() <= s.side();
            if (meets) nb.push_back(other);
          }
        }
    std::sort(nb.begin(), nb.end());
  }
  return out;
}

std::uint8_t coverage_of(const std::array<FaceIndex, 3>& prov) {
  std::uint8_t mask = 0;
  for (Octant o = 0; o < 8; ++o) {
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t cube = prov[k].cube;
      bool solid = true;
      for (int a = 0; a < 3 && solid; ++a) {
        if (prov[a].cube != cube) continue;  // strictly inside this cube's slab
        const bool plus = (o >> a) & 1u;
        solid = plus == (prov[a].side == FaceSide::Low);
      }
      if (solid) {
        mask |= static_cast<std::uint8_t>(1u << o);
        break;
      }
    }
  }
  return mask;
}

void vertices_from(std::uint32_t a_id, const std::vector<std::vector<std::uint32_t>>& nbr,
                   const std::vector<FaceTable>& faces, std::vector<UnionVertex>& out) {
  const auto& na = nbr[a_id];
  const FaceTable& fa = faces[a_id];
  for (std::uint32_t b_id : na) {
    const FaceTable& fb = faces[b_id];
    const auto& nb = nbr[b_id];
    for (FaceSide sa : {FaceSide::Low, FaceSide::High}) {
      const PerturbedScalar& x = fa[static_cast<int>(sa)];
      if (b_id != a_id && !strictly_between(x, fb, 0)) continue;
      for (FaceSide sb : {FaceSide::Low, FaceSide::High}) {
        const PerturbedScalar& y = fb[2 + static_cast<int>(sb)];
        if (b_id != a_id && !strictly_between(y, fa, 1)) continue;
        for (std::uint32_t c_id : na) {
          if (c_id != b_id && !std::binary_search(nb.begin(), nb.end(), c_id)) continue;
          const FaceTable& fc = faces[c_id];
          for (FaceSide sc : {FaceSide::Low, FaceSide::High}) {
            const PerturbedScalar& z = fc[4 + static_cast<int>(sc)];
            if (c_id != a_id && !(strictly_between(z, fa, 2) && strictly_between(x, fc, 0))) continue;
            if (c_id != b_id && !(strictly_between(z, fb, 2) && strictly_between(y, fc, 1))) continue;

            const std::array<FaceIndex, 3> prov{FaceIndex{a_id, 0, sa}, FaceIndex{b_id, 1, sb},
                                                FaceIndex{c_id, 2, sc}};
            const std::array<const PerturbedScalar*, 3> coord{&x, &y, &z};
            bool hidden = false;
            for (std::uint32_t d_id : na) {
              if (d_id == a_id || d_id == b_id || d_id == c_id) continue;
              if (inside_sos(coord, prov, faces[d_id], d_id)) {
                hidden = true;
                break;
              }
            }
            if (hidden) continue;
            out.push_back({{x.value, y.value, z.value}, prov, coverage_of(prov)});
          }
        }
      }
    }
  }
}

int dir(Octant o, int axis) { return ((o >> axis) & 1u) ? 1 : -1; }

}  // namespace

bool point_in_cube_sos(const UnionVertex& v, const Cube& c) {
  const FaceTable f = faces_of(c);
  const PerturbedScalar x = v.coordinate(0), y = v.coordinate(1), z = v.coordinate(2);
  return inside_sos({&x, &y, &z}, v.provenance, f, c.id);
}

std::vector<UnionVertex> union_vertices(const CubeSet& s, unsigned threads) {
  const auto nbr = neighbourhoods(s);
  std::vector<FaceTable> faces;
  faces.reserve(s.size());
  for (const auto& c : s.cubes()) faces.push_back(faces_of(c));

  std::vector<std::vector<UnionVertex>> per_cube(s.size());
  parallel_for(s.size(), threads, [&](std::size_t a) {
    vertices_from(static_cast<std::uint32_t>(a), nbr, faces, per_cube[a]);
  });

  std::vector<UnionVertex> out;
  for (auto& part : per_cube) out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return out;
}

MassProperties mass_properties(const std::vector<UnionVertex>& vertices) {
  MassProperties m;

  // Volume: the union's indicator is sum_v w(v) [v <= p]; integrating that
  // over a large box and keeping the box-independent part gives -sum w x y z.
  for (const auto& v : vertices) {
    const int w = v.volume_weight();
    if (w != 0) m.volume -= Rational(w) * v.position[0] * v.position[1] * v.position[2];
  }

  using Pair = std::pair<Rational, Rational>;
  for (int k = 0; k < 3; ++k) {
    const int u = k == 0 ? 1 : 0;
    const int w = k == 2 ? 1 : 2;

    // Edges along k.  On each line, the signed 2D mixed difference of the four
    // quadrants around the line changes by (upper - lower) at each vertex; its
    // absolute value is the edge multiplicity between consecutive vertices.
    std::map<Pair, std::map<Rational, int>> lines;
    // Faces normal to k.  In each plane, the signed jump of the indicator
    // across the plane is sum_v omega(v) [v <= p] over the plane's vertices.
    std::map<Rational, std::map<Pair, int>> planes;

    for (const auto& v : vertices) {
      int upper = 0, lower = 0, omega = 0;
      for (Octant o = 0; o < 8; ++o) {
        if (!v.covered(o)) continue;
        const int quad = dir(o, u) * dir(o, w);
        if (dir(o, k) > 0) {
          upper += quad;
          omega += quad;
        } else {
          lower += quad;
          omega -= quad;
        }
      }
      const Pair across{v.position[u], v.position[w]};
      if (upper != lower) lines[across][v.position[k]] += upper - lower;
      if (omega != 0) planes[v.position[k]][across] += omega;
    }

    for (const auto& [line, deltas] : lines) {
      int running = 0;
      const Rational* prev = nullptr;
      for (const auto& [t, d] : deltas) {
        if (prev && running != 0) m.edge_length += Rational(std::abs(running)) * (t - *prev);
        running += d;
        prev = &t;
      }
    }

    for (const auto& [plane, weights] : planes) {
      std::vector<Rational> us, ws;
      for (const auto& [pos, _] : weights) {
        us.push_back(pos.first);
        ws.push_back(pos.second);
      }
      std::sort(us.begin(), us.end());
      us.erase(std::unique(us.begin(), us.end()), us.end());
      std::sort(ws.begin(), ws.end());
      ws.erase(std::unique(ws.begin(), ws.end()), ws.end());

      std::vector<int> prefix(us.size() * ws.size(), 0);
      for (const auto& [pos, om] : weights) {
        const auto i = std::lower_bound(us.begin(), us.end(), pos.first) - us.begin();
        const auto j = std::lower_bound(ws.begin(), ws.end(), pos.second) - ws.begin();
        prefix[i * ws.size() + j] += om;
      }
      for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j) {
          int& cell = prefix[i * ws.size() + j];
          if (i > 0) cell += prefix[(i - 1) * ws.size() + j];
          if (j > 0) cell += prefix[i * ws.size() + j - 1];
          if (i > 0 && j > 0) cell -= prefix[(i - 1) * ws.size() + j - 1];
        }
      for (std::size_t i = 0; i + 1 < us.size(); ++i)
        for (std::size_t j = 0; j + 1 < ws.size(); ++j)
          if (const int jump = prefix[i * ws.size() + j]; jump != 0)
            m.area += Rational(std::abs(jump)) * (us[i + 1] - us[i]) * (ws[j + 1] - ws[j]);
    }
  }
  return m;
}

MassProperties union_mass_properties(const CubeSet& s, unsigned threads) {
  return mass_properties(union_vertices(s, threads));
}
Rational union_volume(const CubeSet& s) { return union_mass_properties(s).volume; }
Rational union_area(const CubeSet& s) { return union_mass_properties(s).area; }
Rational union_edge_length(const CubeSet& s) { return union_mass_properties(s).edge_length; }

MassProperties compressed_cell_oracle(const CubeSet& s) {
  MassProperties m;
  if (s.size() == 0) return m;

  std::array<std::vector<Rational>, 3> coords;
  for (int a = 0; a < 3; ++a) {
    for (const auto& c : s.cubes()) {
      coords[a].push_back(c.low[a]);
      coords[a].push_back(c.low[a] + c.side);
    }
    std::sort(coords[a].begin(), coords[a].end());
    coords[a].erase(std::unique(coords[a].begin(), coords[a].end()), coords[a].end());
  }
  const std::array<std::size_t, 3> n{coords[0].size() - 1, coords[1].size() - 1, coords[2].size() - 1};
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n[1] + j) * n[2] + k; };
  auto index_of = [&](int a, const Rational& v) {
    return static_cast<std::size_t>(std::lower_bound(coords[a].begin(), coords[a].end(), v) - coords[a].begin());
  };

  // A box lies inside a cube iff its centre does; boxes never straddle a face.
  std::vector<std::uint8_t> solid(n[0] * n[1] * n[2], 0);
  for (const auto& c : s.cubes()) {
    std::array<std::size_t, 3> lo, hi;
    for (int a = 0; a < 3; ++a) {
      lo[a] = index_of(a, c.low[a]);
      hi[a] = index_of(a, c.low[a] + c.side);
    }
    for (auto i = lo[0]; i < hi[0]; ++i)
      for (auto j = lo[1]; j < hi[1]; ++j)
        for (auto k = lo[2]; k < hi[2]; ++k) solid[at(i, j, k)] = 1;
  }
  auto width = [&](int a, std::size_t i) { return coords[a][i + 1] - coords[a][i]; };
  // Cell lookup with out-of-range cells empty; idx may be -1.
  auto filled = [&](std::array<long, 3> idx) {
    for (int a = 0; a < 3; ++a)
      if (idx[a] < 0 || idx[a] >= static_cast<long>(n[a])) return false;
    return solid[at(idx[0], idx[1], idx[2])] != 0;
  };

  for (std::size_t i = 0; i < n[0]; ++i)
    for (std::size_t j = 0; j < n[1]; ++j)
      for (std::size_t k = 0; k < n[2]; ++k)
        if (solid[at(i, j, k)]) m.volume += width(0, i) * width(1, j) * width(2, k);

  for (int k = 0; k < 3; ++k) {
    const int u = k == 0 ? 1 : 0;
    const int w = k == 2 ? 1 : 2;
    // Faces normal to k: between cells t-1 and t, t = 0..n[k].
    for (long t = 0; t <= static_cast<long>(n[k]); ++t)
      for (long i = 0; i < static_cast<long>(n[u]); ++i)
        for (long j = 0; j < static_cast<long>(n[w]); ++j) {
          std::array<long, 3> below{}, above{};
          below[k] = t - 1;
          above[k] = t;
          below[u] = above[u] = i;
          below[w] = above[w] = j;
          if (filled(below) != filled(above)) m.area += width(u, i) * width(w, j);
        }
    // Edges along k: grid line (i, j) of u/w coordinates, cell interval t.
    for (long i = 0; i <= static_cast<long>(n[u]); ++i)
      for (long j = 0; j <= static_cast<long>(n[w]); ++j)
        for (long t = 0; t < static_cast<long>(n[k]); ++t) {
          bool q[2][2];
          for (int di = 0; di < 2; ++di)
            for (int dj = 0; dj < 2; ++dj) {
              std::array<long, 3> idx{};
              idx[k] = t;
              idx[u] = i - 1 + di;
              idx[w] = j - 1 + dj;
              q[di][dj] = filled(idx);
            }
          const int count = q[0][0] + q[0][1] + q[1][0] + q[1][1];
          int multiplicity = 0;
          if (count == 1 || count == 3) multiplicity = 1;
          if (count == 2 && q[0][0] == q[1][1]) multiplicity = 2;
          if (multiplicity) m.edge_length += Rational(multiplicity) * width(k, t);
        }
  }
  return m;
}

}  // namespace sos
