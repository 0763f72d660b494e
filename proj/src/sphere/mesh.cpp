#include "bulab/sphere/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "bulab/errors.hpp"
#include "bulab/tolerances.hpp"

namespace bulab::sphere {

namespace {

using Eigen::Vector3d;

std::vector<std::pair<int, int>> derive_edges(
    const std::vector<std::array<int, 3>>& faces) {
  std::set<std::pair<int, int>> edges;
  for (const auto& f : faces) {
    for (int k = 0; k < 3; ++k) {
      const int a = f[k], b = f[(k + 1) % 3];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  return {edges.begin(), edges.end()};
}

// ---------------------------------------------------------------------------
// Spatial hash for near-duplicate lookup among unit vectors.

class PointGrid {
 public:
  explicit PointGrid(double cell) : cell_(cell) {}

  void insert(const Vector3d& p, int index) {
    cells_[key(p)].push_back(index);
  }

  // Index of a stored point within `radius` of p, or -1.
  int find(const std::vector<Vector3d>& pts, const Vector3d& p,
           double radius) const {
    const double r2 = radius * radius;
    const long long qx = quantize(p.x());
    const long long qy = quantize(p.y());
    const long long qz = quantize(p.z());
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy)
        for (long long dz = -1; dz <= 1; ++dz) {
          const auto it = cells_.find(mix(qx + dx, qy + dy, qz + dz));
          if (it == cells_.end()) continue;
          for (int i : it->second)
            if ((pts[i] - p).squaredNorm() <= r2) return i;
        }
    return -1;
  }

 private:
  long long quantize(double v) const { return std::llround(v / cell_); }

  static std::uint64_t mix(long long a, long long b, long long c) {
    std::uint64_t h = static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(b) * 0xC2B2AE3D27D4EB4Full;
    h ^= static_cast<std::uint64_t>(c) * 0x165667B19E3779F9ull;
    return h;
  }

  std::uint64_t key(const Vector3d& p) const {
    return mix(quantize(p.x()), quantize(p.y()), quantize(p.z()));
  }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

// ---------------------------------------------------------------------------
// Quickhull specialized to points on the unit sphere. Every input point is
// in convex position, so every point must end up a hull vertex; a tiny
// deterministic radial perturbation breaks cospherical-coplanar ties.

struct HullFace {
  std::array<int, 3> v;
  std::array<int, 3> nbr;  // neighbor across edge (v[k], v[k+1])
  Vector3d normal;
  double offset = 0.0;
  std::vector<int> outside;
  int far_point = -1;
  double far_dist = 0.0;
  bool alive = true;
};

constexpr double kVisibleEps = 1e-12;

double splitmix01(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  x = x ^ (x >> 31);
  return static_cast<double>(x >> 11) / 9007199254740992.0;
}

class QuickHull {
 public:
  QuickHull(const std::vector<Vector3d>& points, std::uint64_t perturb_seed) {
    pts_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
      pts_.push_back(points[i] * (1.0 + 1e-8 * splitmix01(perturb_seed + i)));
  }

  std::vector<std::array<int, 3>> run() {
    build_initial_tetrahedron();
    assign_initial_conflicts();
    while (!pending_.empty()) {
      const int fi = pending_.back();
      pending_.pop_back();
      if (!faces_[fi].alive || faces_[fi].outside.empty()) continue;
      insert_point(fi);
    }
    std::vector<std::array<int, 3>> out;
    for (const HullFace& f : faces_)
      if (f.alive) out.push_back(f.v);
    return out;
  }

 private:
  double dist(const HullFace& f, int p) const {
    return f.normal.dot(pts_[p]) - f.offset;
  }

  int make_face(int a, int b, int c) {
    HullFace f;
    f.v = {a, b, c};
    f.normal = (pts_[b] - pts_[a]).cross(pts_[c] - pts_[a]);
    const double len = f.normal.norm();
    if (len < 1e-18) throw RefinementError("degenerate hull face");
    f.normal /= len;
    f.offset = f.normal.dot(pts_[a]);
    f.nbr = {-1, -1, -1};
    faces_.push_back(std::move(f));
    return static_cast<int>(faces_.size()) - 1;
  }

  void link(int fa, int fb) {
    // Find the shared directed edge and set both neighbor slots.
    for (int i = 0; i < 3; ++i) {
      const int a = faces_[fa].v[i], b = faces_[fa].v[(i + 1) % 3];
      for (int j = 0; j < 3; ++j) {
        if (faces_[fb].v[j] == b && faces_[fb].v[(j + 1) % 3] == a) {
          faces_[fa].nbr[i] = fb;
          faces_[fb].nbr[j] = fa;
          return;
        }
      }
    }
    throw RefinementError("hull faces do not share an edge");
  }

  void build_initial_tetrahedron() {
    const int n = static_cast<int>(pts_.size());
    if (n < 4) throw RefinementError("need at least four points");

    int i0 = 0;
    for (int i = 1; i < n; ++i) {
      const Vector3d &p = pts_[i], &q = pts_[i0];
      if (std::tie(p.x(), p.y(), p.z()) < std::tie(q.x(), q.y(), q.z())) i0 = i;
    }
    int i1 = -1;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double d = (pts_[i] - pts_[i0]).squaredNorm();
      if (d > best) best = d, i1 = i;
    }
    int i2 = -1;
    best = -1.0;
    const Vector3d dir = (pts_[i1] - pts_[i0]).normalized();
    for (int i = 0; i < n; ++i) {
      const Vector3d rel = pts_[i] - pts_[i0];
      const double d = (rel - rel.dot(dir) * dir).squaredNorm();
      if (d > best) best = d, i2 = i;
    }
    Vector3d nrm = (pts_[i1] - pts_[i0]).cross(pts_[i2] - pts_[i0]);
    int i3 = -1;
    best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double d = std::abs(nrm.dot(pts_[i] - pts_[i0]));
      if (d > best) best = d, i3 = i;
    }
    if (nrm.dot(pts_[i3] - pts_[i0]) > 0.0) std::swap(i1, i2);

    // Faces oriented so the opposite tetrahedron vertex is below each plane.
    const int f0 = make_face(i0, i1, i2);
    const int f1 = make_face(i0, i3, i1);
    const int f2 = make_face(i1, i3, i2);
    const int f3 = make_face(i0, i2, i3);
    link(f0, f1);
    link(f0, f2);
    link(f0, f3);
    link(f1, f2);
    link(f2, f3);
    link(f3, f1);
    interior_ = 0.25 * (pts_[i0] + pts_[i1] + pts_[i2] + pts_[i3]);
    for (int f = 0; f < 4; ++f)
      if (faces_[f].normal.dot(interior_) - faces_[f].offset > 0.0)
        throw RefinementError("initial tetrahedron is inside out");
    tetra_ = {i0, i1, i2, i3};
  }

  void assign_initial_conflicts() {
    for (int p = 0; p < static_cast<int>(pts_.size()); ++p) {
      if (p == tetra_[0] || p == tetra_[1] || p == tetra_[2] || p == tetra_[3])
        continue;
      assign_point(p, {0, 1, 2, 3});
    }
  }

  // Attaches p to the candidate face it is farthest above, if any. Returns
  // false when p is below all of them.
  bool assign_point(int p, const std::vector<int>& candidates) {
    int best_face = -1;
    double best_dist = kVisibleEps;
    for (int fi : candidates) {
      if (!faces_[fi].alive) continue;
      const double d = dist(faces_[fi], p);
      if (d > best_dist) {
        best_dist = d;
        best_face = fi;
      }
    }
    if (best_face < 0) return false;
    HullFace& f = faces_[best_face];
    f.outside.push_back(p);
    if (best_dist > f.far_dist) {
      f.far_dist = best_dist;
      f.far_point = p;
    }
    pending_.push_back(best_face);
    return true;
  }

  // Rare fallback: an orphan can sit above a surviving old face while being
  // below every fresh one. A global scan keeps such points from being lost.
  void assign_point_globally(int p) {
    std::vector<int> alive;
    for (int fi = 0; fi < static_cast<int>(faces_.size()); ++fi)
      if (faces_[fi].alive) alive.push_back(fi);
    assign_point(p, alive);
  }

  void insert_point(int start_face) {
    const int p = faces_[start_face].far_point;

    // Flood the visible region. 0 = unseen, 1 = visible, 2 = checked
    // invisible.
    std::vector<int> visible{start_face};
    std::vector<char> state(faces_.size(), 0);
    state[start_face] = 1;
    for (std::size_t head = 0; head < visible.size(); ++head) {
      const int fi = visible[head];
      for (int nb : faces_[fi].nbr) {
        if (state[nb]) continue;
        if (dist(faces_[nb], p) > kVisibleEps) {
          state[nb] = 1;
          visible.push_back(nb);
        } else {
          state[nb] = 2;
        }
      }
    }

    // Horizon: directed edges of visible faces whose neighbor survived.
    struct HorizonEdge {
      int a, b, neighbor, neighbor_slot;
    };
    std::unordered_map<int, HorizonEdge> next_from;
    for (int fi : visible) {
      for (int k = 0; k < 3; ++k) {
        const int nb = faces_[fi].nbr[k];
        if (state[nb] == 1) continue;
        const int a = faces_[fi].v[k], b = faces_[fi].v[(k + 1) % 3];
        int slot = -1;
        for (int j = 0; j < 3; ++j)
          if (faces_[nb].v[j] == b && faces_[nb].v[(j + 1) % 3] == a) slot = j;
        if (slot < 0) throw RefinementError("broken hull adjacency");
        next_from[a] = HorizonEdge{a, b, nb, slot};
      }
    }
    if (next_from.empty()) throw RefinementError("empty hull horizon");

    // Walk the horizon cycle and stitch new faces around p.
    std::vector<int> fresh;
    const int start_vertex = next_from.begin()->first;
    int v = start_vertex;
    do {
      const auto it = next_from.find(v);
      if (it == next_from.end()) throw RefinementError("open hull horizon");
      const HorizonEdge e = it->second;
      const int nf = make_face(e.a, e.b, p);
      if (faces_[nf].normal.dot(interior_) - faces_[nf].offset > 0.0)
        throw RefinementError("hull face oriented inward");
      faces_[nf].nbr[0] = e.neighbor;
      faces_[e.neighbor].nbr[e.neighbor_slot] = nf;
      fresh.push_back(nf);
      v = e.b;
    } while (v != start_vertex);
    if (fresh.size() != next_from.size())
      throw RefinementError("hull horizon is not a single cycle");

    // Consecutive new faces share the edges (b, p) / (p, a).
    const int m = static_cast<int>(fresh.size());
    for (int k = 0; k < m; ++k) {
      faces_[fresh[k]].nbr[1] = fresh[(k + 1) % m];       // edge (b, p)
      faces_[fresh[(k + 1) % m]].nbr[2] = fresh[k];       // edge (p, a)
    }

    // Retire the visible faces and re-seat their conflict points.
    std::vector<int> orphans;
    for (int fi : visible) {
      faces_[fi].alive = false;
      for (int q : faces_[fi].outside)
        if (q != p) orphans.push_back(q);
      faces_[fi].outside.clear();
    }
    std::sort(orphans.begin(), orphans.end());
    orphans.erase(std::unique(orphans.begin(), orphans.end()), orphans.end());
    for (int q : orphans)
      if (!assign_point(q, fresh)) assign_point_globally(q);
  }

  std::vector<Vector3d> pts_;
  std::vector<HullFace> faces_;
  std::vector<int> pending_;
  std::array<int, 4> tetra_{};
  Vector3d interior_;
};

bool triangulation_covers_all(const std::vector<std::array<int, 3>>& faces,
                              int n) {
  std::vector<char> used(n, 0);
  for (const auto& f : faces)
    for (int v : f) used[v] = 1;
  return std::find(used.begin(), used.end(), 0) == used.end();
}

}  // namespace

// ---------------------------------------------------------------------------

double IcosphereMesh::max_edge_length() const {
  double m = 0.0;
  for (const auto& [a, b] : edges)
    m = std::max(m, (vertices[a] - vertices[b]).norm());
  return m;
}

double IcosphereMesh::min_vertex_gap() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : edges)
    m = std::min(m, (vertices[a] - vertices[b]).norm());
  return m;
}

void validate_mesh(const IcosphereMesh& mesh) {
  for (const Vector3d& v : mesh.vertices)
    if (std::abs(v.norm() - 1.0) > 1e-12)
      throw RefinementError("mesh vertex is off the unit sphere");

  std::map<std::pair<int, int>, int> undirected;
  std::set<std::pair<int, int>> directed;
  for (const auto& f : mesh.faces) {
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
      throw RefinementError("mesh face repeats a vertex");
    const Vector3d area = (mesh.vertices[f[1]] - mesh.vertices[f[0]])
                              .cross(mesh.vertices[f[2]] - mesh.vertices[f[0]]);
    if (area.norm() < 1e-14) throw RefinementError("degenerate mesh face");
    for (int k = 0; k < 3; ++k) {
      const int a = f[k], b = f[(k + 1) % 3];
      if (!directed.emplace(a, b).second)
        throw RefinementError("mesh orientation is inconsistent");
      ++undirected[{std::min(a, b), std::max(a, b)}];
    }
  }
  for (const auto& [edge, count] : undirected)
    if (count != 2) throw RefinementError("mesh edge is not shared by 2 faces");

  const long long v = mesh.vertex_count();
  const long long e = static_cast<long long>(undirected.size());
  const long long f = static_cast<long long>(mesh.faces.size());
  if (v - e + f != 2)
    throw RefinementError("mesh is not a sphere: Euler characteristic " +
                          std::to_string(v - e + f));
}

IcosphereMesh build_icosphere(int level) {
  if (level < 0) throw ConfigError("subdivision level must be non-negative");
  if (level > tol().max_subdivision_level)
    throw ResourceError("subdivision level " + std::to_string(level) +
                        " exceeds the cap of " +
                        std::to_string(tol().max_subdivision_level));

  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vector3d> verts = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
      {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
      {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (Vector3d& v : verts) v.normalize();

  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int step = 0; step < level; ++step) {
    std::unordered_map<std::uint64_t, int> midpoint;
    const auto mid = [&](int a, int b) {
      const std::uint64_t key =
          (static_cast<std::uint64_t>(std::min(a, b)) << 32) |
          static_cast<std::uint64_t>(std::max(a, b));
      const auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Vector3d m = 0.5 * (verts[a] + verts[b]);
      m.normalize();
      verts.push_back(m);
      const int idx = static_cast<int>(verts.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };

    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = mid(f[0], f[1]);
      const int bc = mid(f[1], f[2]);
      const int ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  IcosphereMesh mesh;
  mesh.vertices = std::move(verts);
  mesh.faces = std::move(faces);
  mesh.edges = derive_edges(mesh.faces);
  mesh.level = level;
  validate_mesh(mesh);
  return mesh;
}

std::vector<std::array<int, 3>> triangulate_sphere_points(
    const std::vector<Vector3d>& points) {
  const int n = static_cast<int>(points.size());
  std::string last_error = "triangulation failed";
  for (std::uint64_t seed : {0ull, 0x5DEECE66Dull, 0xDA3E39CB94B95BDBull}) {
    try {
      auto faces = QuickHull(points, seed).run();
      if (!triangulation_covers_all(faces, n)) {
        last_error = "a point fell inside the hull; perturbation retry";
        continue;
      }
      return faces;
    } catch (const RefinementError& e) {
      last_error = e.what();
    }
  }
  throw RefinementError(last_error);
}

SymmetricMesh symmetrize_mesh(const IcosphereMesh& mesh,
                              const FiniteOrderMap& map) {
  const double merge = tol().vertex_merge;
  std::vector<Vector3d> pts = mesh.vertices;
  PointGrid grid(1e-6);
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) grid.insert(pts[i], i);

  // Orbit closure: keep applying the map until nothing new appears.
  std::deque<int> queue;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) queue.push_back(i);
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    Vector3d p = map(pts[i]);
    p.normalize();
    if (grid.find(pts, p, merge) >= 0) continue;
    pts.push_back(p);
    const int idx = static_cast<int>(pts.size()) - 1;
    grid.insert(p, idx);
    queue.push_back(idx);
  }

  std::vector<int> images(pts.size());
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    Vector3d p = map(pts[i]);
    p.normalize();
    const int j = grid.find(pts, p, merge);
    if (j < 0)
      throw SymmetrizationError("orbit closure missed the image of vertex " +
                                std::to_string(i));
    images[i] = j;
  }

  algebra::IndexAction action = algebra::IndexAction::from_permutation(images);
  if (map.order() % action.order() != 0)
    throw SymmetrizationError("induced permutation order " +
                              std::to_string(action.order()) +
                              " does not divide the map order");

  IcosphereMesh out;
  out.level = mesh.level;
  const bool grew = pts.size() != mesh.vertices.size();
  out.vertices = std::move(pts);
  out.faces = grew ? triangulate_sphere_points(out.vertices) : mesh.faces;
  out.edges = derive_edges(out.faces);
  validate_mesh(out);
  return SymmetricMesh{std::move(out), std::move(action)};
}

algebra::SampledFunction sample(const FunctionExpr& f,
                                const IcosphereMesh& mesh) {
  std::vector<algebra::Complex> values(mesh.vertices.size());
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    values[i] = f.eval(mesh.vertices[i]);
  return algebra::SampledFunction(std::move(values));
}

std::vector<int> equatorial_loop(const IcosphereMesh& mesh, double band) {
  std::vector<int> loop;
  for (int i = 0; i < mesh.vertex_count(); ++i)
    if (std::abs(mesh.vertices[i].z()) < band) loop.push_back(i);
  std::sort(loop.begin(), loop.end(), [&](int a, int b) {
    const double ta = std::atan2(mesh.vertices[a].y(), mesh.vertices[a].x());
    const double tb = std::atan2(mesh.vertices[b].y(), mesh.vertices[b].x());
    return ta < tb;
  });
  if (loop.size() < 3) throw EmptyInputError("equatorial band is too narrow");
  return loop;
}

}  // namespace bulab::sphere
