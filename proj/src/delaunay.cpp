#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bundles/errors.hpp"
#include "bundles/generators.hpp"
#include "bundles/predicates.hpp"

namespace bundles {
namespace {

// Symbolic vertex at infinity. The plane triangulation is closed into a
// sphere by one infinite triangle per hull edge, which lets insertion treat
// points outside the hull exactly like interior ones.
constexpr NodeId kInf = -1;

struct Tri {
  std::array<NodeId, 3> v;
  std::array<int, 3> nbr;  // nbr[i] faces the edge opposite v[i]
  bool alive = true;
};

class Mesh {
 public:
  explicit Mesh(const Coords& pts) : pts_(pts) {}

  void init(NodeId a, NodeId b, NodeId c) {
    make_tri(a, b, c);
    make_tri(b, a, kInf);
    make_tri(c, b, kInf);
    make_tri(a, c, kInf);
    stitch_all();
  }

  void insert(NodeId p) {
    const int seed = find_conflict(p);
    std::vector<int> cavity = grow_cavity(seed, p);

    // Cavity boundary: directed edges of cavity triangles whose neighbor
    // survives, recorded with that neighbor and its facing slot.
    struct BoundaryEdge {
      NodeId from, to;
      int outside, outside_slot;
    };
    std::vector<BoundaryEdge> boundary;
    for (int ti : cavity) {
      for (int i = 0; i < 3; ++i) {
        const int s = tris_[static_cast<std::size_t>(ti)].nbr[i];
        if (tris_[static_cast<std::size_t>(s)].alive) {
          const auto& t = tris_[static_cast<std::size_t>(ti)];
          int slot = 0;
          while (tris_[static_cast<std::size_t>(s)].nbr[slot] != ti) ++slot;
          boundary.push_back(
              {t.v[(i + 1) % 3], t.v[(i + 2) % 3], s, slot});
        }
      }
    }

    // Replace the cavity by the fan of p over its boundary. Triangle
    // (q, r, p): slot 0 faces edge (r, p), slot 1 faces (p, q), slot 2 faces
    // the reused boundary edge (q, r).
    std::map<std::pair<NodeId, NodeId>, std::pair<int, int>> halfedge;
    for (const auto& e : boundary) {
      if (e.from != kInf && e.to != kInf &&
          orient2d(pts_[static_cast<std::size_t>(e.from)],
                   pts_[static_cast<std::size_t>(e.to)],
                   pts_[static_cast<std::size_t>(p)]) <= 0) {
        throw degeneracy_error(
            "point " + std::to_string(p) +
            " lies exactly on a hull edge; perturb the input coordinates");
      }
      const int nt = make_tri(e.from, e.to, p);
      tris_[static_cast<std::size_t>(nt)].nbr[2] = e.outside;
      tris_[static_cast<std::size_t>(e.outside)].nbr[e.outside_slot] = nt;
      halfedge[{e.to, p}] = {nt, 0};
      halfedge[{p, e.from}] = {nt, 1};
    }
    for (const auto& [edge, where] : halfedge) {
      const auto twin = halfedge.at({edge.second, edge.first});
      tris_[static_cast<std::size_t>(where.first)].nbr[where.second] =
          twin.first;
    }
  }

  std::vector<std::array<NodeId, 3>> finite_triangles() const {
    std::vector<std::array<NodeId, 3>> out;
    for (const auto& t : tris_) {
      if (!t.alive || t.v[0] == kInf || t.v[1] == kInf || t.v[2] == kInf)
        continue;
      // Rotate the smallest id first; cyclic rotation keeps CCW order.
      std::array<NodeId, 3> tri = t.v;
      while (tri[0] > tri[1] || tri[0] > tri[2])
        tri = {tri[1], tri[2], tri[0]};
      out.push_back(tri);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int make_tri(NodeId a, NodeId b, NodeId c) {
    tris_.push_back({{a, b, c}, {-1, -1, -1}, true});
    return static_cast<int>(tris_.size()) - 1;
  }

  void stitch_all() {
    std::map<std::pair<NodeId, NodeId>, std::pair<int, int>> halfedge;
    for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti) {
      const auto& t = tris_[static_cast<std::size_t>(ti)];
      for (int i = 0; i < 3; ++i)
        halfedge[{t.v[(i + 1) % 3], t.v[(i + 2) % 3]}] = {ti, i};
    }
    for (const auto& [edge, where] : halfedge) {
      const auto twin = halfedge.at({edge.second, edge.first});
      tris_[static_cast<std::size_t>(where.first)].nbr[where.second] =
          twin.first;
    }
  }

  // Conflict = p strictly inside the circumcircle (finite triangle) or
  // strictly outside the hull across this edge (infinite triangle). Exact
  // cocircularity cannot be tie-broken and is reported to the caller.
  bool in_conflict(const Tri& t, NodeId p) const {
    const Point& pp = pts_[static_cast<std::size_t>(p)];
    int inf_slot = -1;
    for (int i = 0; i < 3; ++i)
      if (t.v[i] == kInf) inf_slot = i;
    if (inf_slot < 0) {
      const int s = incircle(pts_[static_cast<std::size_t>(t.v[0])],
                             pts_[static_cast<std::size_t>(t.v[1])],
                             pts_[static_cast<std::size_t>(t.v[2])], pp);
      if (s == 0)
        throw degeneracy_error(
            "exactly cocircular points; perturb the input coordinates");
      return s > 0;
    }
    const NodeId x = t.v[(inf_slot + 1) % 3];
    const NodeId y = t.v[(inf_slot + 2) % 3];
    return orient2d(pts_[static_cast<std::size_t>(x)],
                    pts_[static_cast<std::size_t>(y)], pp) > 0;
  }

  int find_conflict(NodeId p) const {
    for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti) {
      const auto& t = tris_[static_cast<std::size_t>(ti)];
      if (t.alive && in_conflict(t, p)) return ti;
    }
    throw degeneracy_error("point " + std::to_string(p) +
                           " conflicts with no triangle; perturb the input "
                           "coordinates");
  }

  // The conflict region is connected, so it grows from any seed triangle.
  std::vector<int> grow_cavity(int seed, NodeId p) {
    std::vector<int> cavity{seed};
    tris_[static_cast<std::size_t>(seed)].alive = false;
    for (std::size_t k = 0; k < cavity.size(); ++k) {
      const auto nbrs = tris_[static_cast<std::size_t>(cavity[k])].nbr;
      for (int s : nbrs) {
        auto& t = tris_[static_cast<std::size_t>(s)];
        if (t.alive && in_conflict(t, p)) {
          t.alive = false;
          cavity.push_back(s);
        }
      }
    }
    return cavity;
  }

  const Coords& pts_;
  std::vector<Tri> tris_;
};

void check_degenerate_input(const Coords& points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a] < points[b];
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points[order[k - 1]] == points[order[k]])
      throw degeneracy_error("coincident points " +
                             std::to_string(order[k - 1]) + " and " +
                             std::to_string(order[k]));
  }
}

}  // namespace

Triangulation triangulate(const Coords& points) {
  if (points.size() < 3)
    throw input_error("triangulation needs at least 3 points");
  check_degenerate_input(points);

  const NodeId a = 0, b = 1;
  NodeId c = -1;
  for (std::size_t k = 2; k < points.size(); ++k) {
    if (orient2d(points[0], points[1], points[k]) != 0) {
      c = static_cast<NodeId>(k);
      break;
    }
  }
  if (c < 0) throw degeneracy_error("all input points are collinear");

  NodeId v0 = a, v1 = b;
  if (orient2d(points[static_cast<std::size_t>(v0)],
               points[static_cast<std::size_t>(v1)],
               points[static_cast<std::size_t>(c)]) < 0)
    std::swap(v0, v1);

  Mesh mesh(points);
  mesh.init(v0, v1, c);
  for (NodeId p = 2; p < static_cast<NodeId>(points.size()); ++p) {
    if (p == c) continue;
    mesh.insert(p);
  }

  Triangulation result;
  result.triangles = mesh.finite_triangles();
  std::vector<Edge> edges;
  for (const auto& t : result.triangles) {
    edges.emplace_back(std::min(t[0], t[1]), std::max(t[0], t[1]));
    edges.emplace_back(std::min(t[1], t[2]), std::max(t[1], t[2]));
    edges.emplace_back(std::min(t[0], t[2]), std::max(t[0], t[2]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  result.edges = std::move(edges);
  return result;
}

Graph delaunay(const Coords& points) {
  Triangulation tri = triangulate(points);
  return Graph(static_cast<int>(points.size()), std::move(tri.edges), points);
}

}  // namespace bundles
