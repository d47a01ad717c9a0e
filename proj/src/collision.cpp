#include "symplan/collision.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace symplan {

namespace {

double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Andrew's monotone chain; returns counter-clockwise hull indices without
// collinear points.
std::vector<std::size_t> hull_indices_2d(std::span<const Eigen::Vector2d> pts) {
  if (pts.size() < 3) return {};
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return pts[i].x() < pts[j].x() || (pts[i].x() == pts[j].x() && pts[i].y() < pts[j].y());
  });
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double eps = 1e-12 * std::max(scale * scale, 1e-300);
  std::vector<std::size_t> hull(2 * pts.size() + 1);
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= eps) --k;
    hull[k++] = i;
  }
  for (std::size_t t = order.size() - 1, lower = k + 1; t-- > 0;) {
    const std::size_t i = order[t];
    while (k >= lower && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= eps) --k;
    hull[k++] = i;
  }
  hull.resize(k > 0 ? k - 1 : 0);
  return hull;
}

Eigen::Vector3d support(std::span<const Eigen::Vector3d> pts, const Eigen::Vector3d& d) {
  std::size_t best = 0;
  double best_dot = pts[0].dot(d);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double v = pts[i].dot(d);
    if (v > best_dot) {
      best_dot = v;
      best = i;
    }
  }
  return pts[best];
}

struct Simplex {
  std::array<Eigen::Vector3d, 4> pts;
  int size = 0;
};

Eigen::Vector3d closest_on_segment(Simplex& s) {
  const Eigen::Vector3d a = s.pts[0];
  const Eigen::Vector3d b = s.pts[1];
  const Eigen::Vector3d ab = b - a;
  const double len2 = ab.squaredNorm();
  const double t = len2 > 0.0 ? -a.dot(ab) / len2 : 0.0;
  if (t <= 0.0) {
    s.size = 1;
    return a;
  }
  if (t >= 1.0) {
    s.pts[0] = b;
    s.size = 1;
    return b;
  }
  return a + t * ab;
}

// Closest point to the origin on triangle abc (Voronoi region walk).
Eigen::Vector3d closest_on_triangle(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c,
                                    Simplex& out) {
  const Eigen::Vector3d ab = b - a;
  const Eigen::Vector3d ac = c - a;
  const Eigen::Vector3d ap = -a;
  const double d1 = ab.dot(ap);
  const double d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) {
    out.pts[0] = a;
    out.size = 1;
    return a;
  }
  const Eigen::Vector3d bp = -b;
  const double d3 = ab.dot(bp);
  const double d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) {
    out.pts[0] = b;
    out.size = 1;
    return b;
  }
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    const double v = d1 / (d1 - d3);
    out.pts[0] = a;
    out.pts[1] = b;
    out.size = 2;
    return a + v * ab;
  }
  const Eigen::Vector3d cp = -c;
  const double d5 = ab.dot(cp);
  const double d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) {
    out.pts[0] = c;
    out.size = 1;
    return c;
  }
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    const double w = d2 / (d2 - d6);
    out.pts[0] = a;
    out.pts[1] = c;
    out.size = 2;
    return a + w * ac;
  }
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    out.pts[0] = b;
    out.pts[1] = c;
    out.size = 2;
    return b + w * (c - b);
  }
  const double total = va + vb + vc;
  if (!(total > 0.0)) {
    // Degenerate triangle: fall back to its longest edge.
    Simplex e;
    e.pts[0] = a;
    e.pts[1] = (b - a).squaredNorm() >= (c - a).squaredNorm() ? b : c;
    e.size = 2;
    const Eigen::Vector3d p = closest_on_segment(e);
    out = e;
    return p;
  }
  const double v = vb / total;
  const double w = vc / total;
  out.pts[0] = a;
  out.pts[1] = b;
  out.pts[2] = c;
  out.size = 3;
  return a + v * ab + w * ac;
}

// Returns false when the origin lies inside the tetrahedron.
bool closest_on_tetrahedron(Simplex& s, Eigen::Vector3d& closest) {
  const auto& p = s.pts;
  static constexpr std::array<std::array<int, 4>, 4> faces{{{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 3, 2, 0}}};
  double best = std::numeric_limits<double>::infinity();
  Simplex best_simplex;
  bool outside_any = false;
  for (const auto& f : faces) {
    const Eigen::Vector3d& a = p[f[0]];
    const Eigen::Vector3d& b = p[f[1]];
    const Eigen::Vector3d& c = p[f[2]];
    const Eigen::Vector3d& d = p[f[3]];
    const Eigen::Vector3d n = (b - a).cross(c - a);
    const double sign_origin = (-a).dot(n);
    const double sign_opposite = (d - a).dot(n);
    const bool degenerate = std::abs(sign_opposite) <= 1e-14 * std::max(n.norm(), 1e-300) * (d - a).norm();
    if (!degenerate && sign_origin * sign_opposite >= 0.0) continue;
    outside_any = true;
    Simplex candidate;
    const Eigen::Vector3d q = closest_on_triangle(a, b, c, candidate);
    if (q.squaredNorm() < best) {
      best = q.squaredNorm();
      best_simplex = candidate;
      closest = q;
    }
  }
  if (!outside_any) return false;
  s = best_simplex;
  return true;
}

int lex_compare(const Config& a, const Config& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int k = 0; k < 3; ++k) {
      if (a[i].translation[k] != b[i].translation[k]) return a[i].translation[k] < b[i].translation[k] ? -1 : 1;
    }
    if (const auto* ra = std::get_if<Rotation2>(&a[i].rotation)) {
      const double x = ra->angle();
      const double y = std::get<Rotation2>(b[i].rotation).angle();
      if (x != y) return x < y ? -1 : 1;
    } else {
      const auto& x = std::get<Rotation3>(a[i].rotation).quaternion().coeffs();
      const auto& y = std::get<Rotation3>(b[i].rotation).quaternion().coeffs();
      for (int k = 0; k < 4; ++k) {
        if (x[k] != y[k]) return x[k] < y[k] ? -1 : 1;
      }
    }
  }
  return 0;
}

bool shapes_intersect(int dim, std::span<const Eigen::Vector3d> a, std::span<const Eigen::Vector3d> b) {
  return dim == 2 ? polygons_intersect(a, b) : polytopes_intersect(a, b);
}

Aabb box_of(std::span<const Eigen::Vector3d> pts) {
  Aabb box{pts[0], pts[0]};
  for (const auto& p : pts) {
    box.lo = box.lo.cwiseMin(p);
    box.hi = box.hi.cwiseMax(p);
  }
  return box;
}

}  // namespace

bool Aabb::overlaps(const Aabb& other, int dim) const {
  for (int k = 0; k < dim; ++k) {
    if (hi[k] < other.lo[k] || other.hi[k] < lo[k]) return false;
  }
  return true;
}

std::vector<Eigen::Vector3d> convex_hull_2d(std::span<const Eigen::Vector3d> points) {
  std::vector<Eigen::Vector2d> flat;
  flat.reserve(points.size());
  for (const auto& p : points) flat.emplace_back(p.x(), p.y());
  const auto idx = hull_indices_2d(flat);
  if (idx.size() < 3) throw std::invalid_argument("degenerate planar point set");
  std::vector<Eigen::Vector3d> out;
  for (std::size_t i : idx) out.emplace_back(points[i].x(), points[i].y(), 0.0);
  return out;
}

std::vector<Eigen::Vector3d> convex_hull_3d(std::span<const Eigen::Vector3d> points) {
  const std::size_t n = points.size();
  if (n < 4) throw std::invalid_argument("3D hull needs at least 4 points");
  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, (p - points[0]).norm());
  const double eps = 1e-9 * std::max(scale, 1e-300);
  std::vector<bool> on_hull(n, false);
  bool found_plane = false;
  // A triple spans a supporting plane when all other points lie on one side;
  // the hull vertices on that plane are the 2D hull of the coplanar points.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Eigen::Vector3d normal = (points[j] - points[i]).cross(points[k] - points[i]);
        const double len = normal.norm();
        if (len <= 1e-12 * scale * scale) continue;
        normal /= len;
        bool above = false;
        bool below = false;
        std::vector<std::size_t> coplanar;
        for (std::size_t m = 0; m < n; ++m) {
          const double d = normal.dot(points[m] - points[i]);
          if (d > eps) above = true;
          else if (d < -eps) below = true;
          else coplanar.push_back(m);
          if (above && below) break;
        }
        if (above == below) continue;  // straddling, or everything coplanar
        found_plane = true;
        const Eigen::Vector3d u = (points[j] - points[i]).normalized();
        const Eigen::Vector3d v = normal.cross(u);
        std::vector<Eigen::Vector2d> local;
        for (std::size_t m : coplanar) {
          const Eigen::Vector3d r = points[m] - points[i];
          local.emplace_back(u.dot(r), v.dot(r));
        }
        for (std::size_t h : hull_indices_2d(local)) on_hull[coplanar[h]] = true;
      }
    }
  }
  if (!found_plane) throw std::invalid_argument("degenerate (coplanar) spatial point set");
  std::vector<Eigen::Vector3d> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!on_hull[i]) continue;
    bool duplicate = false;
    for (const auto& o : out) duplicate = duplicate || (o - points[i]).norm() <= eps;
    if (!duplicate) out.push_back(points[i]);
  }
  return out;
}

ConvexShape::ConvexShape(int dim, std::vector<Eigen::Vector3d> points) : dim_(dim) {
  if (dim == 2) {
    vertices_ = convex_hull_2d(points);
  } else if (dim == 3) {
    vertices_ = convex_hull_3d(points);
  } else {
    throw std::invalid_argument("dimension must be 2 or 3");
  }
}

Eigen::Vector3d ConvexShape::centroid() const {
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (const auto& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

ConvexShape ConvexShape::centered() const {
  ConvexShape out = *this;
  const Eigen::Vector3d c = centroid();
  for (auto& v : out.vertices_) v -= c;
  return out;
}

double ConvexShape::circumradius() const {
  double r = 0.0;
  for (const auto& v : vertices_) r = std::max(r, v.norm());
  return r;
}

Aabb ConvexShape::aabb() const { return box_of(vertices_); }

double ConvexShape::area() const {
  if (dim_ != 2) throw std::logic_error("area is only defined for planar shapes");
  double area = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % vertices_.size()];
    area += a.x() * b.y() - a.y() * b.x();
  }
  return 0.5 * area;
}

World::World(int dim, Bounds bounds, std::vector<ConvexShape> obstacles)
    : dim_(dim), bounds_(bounds), obstacles_(std::move(obstacles)) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
  if ((bounds_.hi.array() < bounds_.lo.array()).any()) throw std::invalid_argument("empty bounds");
  for (const auto& o : obstacles_) {
    if (o.dim() != dim) throw std::invalid_argument("obstacle dimension mismatch");
    boxes_.push_back(o.aabb());
  }
  const int per_axis = dim == 2 ? 24 : 10;
  for (int a = 0; a < dim; ++a) {
    const double extent = bounds_.hi[a] - bounds_.lo[a];
    cells_[a] = extent > 0.0 ? per_axis : 1;
    cell_size_[a] = extent > 0.0 ? extent / per_axis : 1.0;
  }
  grid_.resize(static_cast<std::size_t>(cells_[0]) * cells_[1] * cells_[2]);
  for (std::size_t k = 0; k < boxes_.size(); ++k) {
    const auto lo = cell_of(boxes_[k].lo);
    const auto hi = cell_of(boxes_[k].hi);
    for (int x = lo[0]; x <= hi[0]; ++x)
      for (int y = lo[1]; y <= hi[1]; ++y)
        for (int z = lo[2]; z <= hi[2]; ++z) grid_[(static_cast<std::size_t>(x) * cells_[1] + y) * cells_[2] + z].push_back(k);
  }
}

std::array<int, 3> World::cell_of(const Eigen::Vector3d& p) const {
  std::array<int, 3> c{0, 0, 0};
  for (int a = 0; a < dim_; ++a) {
    const double t = std::floor((p[a] - bounds_.lo[a]) / cell_size_[a]);
    c[a] = static_cast<int>(std::clamp(t, 0.0, static_cast<double>(cells_[a] - 1)));
  }
  return c;
}

void World::candidates(const Aabb& box, std::vector<std::size_t>& out) const {
  out.clear();
  const auto lo = cell_of(box.lo);
  const auto hi = cell_of(box.hi);
  for (int x = lo[0]; x <= hi[0]; ++x)
    for (int y = lo[1]; y <= hi[1]; ++y)
      for (int z = lo[2]; z <= hi[2]; ++z) {
        const auto& cell = grid_[(static_cast<std::size_t>(x) * cells_[1] + y) * cells_[2] + z];
        out.insert(out.end(), cell.begin(), cell.end());
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

World World::without_obstacle(std::size_t index) const {
  std::vector<ConvexShape> rest = obstacles_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
  return World(dim_, bounds_, std::move(rest));
}

MovingObject::MovingObject(std::string name_, ConvexShape shape_, GroupPtr symmetry_, double weight_)
    : name(std::move(name_)), shape(std::move(shape_)), symmetry(std::move(symmetry_)), weight(weight_) {
  if (!symmetry) throw std::invalid_argument("moving object needs a symmetry group");
  if (symmetry->dim() != shape.dim()) throw std::invalid_argument("symmetry and shape dimensions differ");
  if (weight <= 0.0) weight = shape.circumradius();
}

MetricWeights weights_of(std::span<const MovingObject> objects) {
  std::vector<double> w;
  for (const auto& o : objects) w.push_back(o.weight);
  return MetricWeights(std::move(w));
}

namespace {

void place_into(const ConvexShape& shape, const ObjectPose& pose, std::vector<Eigen::Vector3d>& out) {
  out.clear();
  if (const auto* r2 = std::get_if<Rotation2>(&pose.rotation)) {
    const double c = std::cos(r2->angle());
    const double s = std::sin(r2->angle());
    for (const auto& v : shape.vertices()) {
      out.emplace_back(c * v.x() - s * v.y() + pose.translation.x(), s * v.x() + c * v.y() + pose.translation.y(),
                       0.0);
    }
  } else {
    const Eigen::Matrix3d m = std::get<Rotation3>(pose.rotation).matrix();
    for (const auto& v : shape.vertices()) out.push_back(m * v + pose.translation);
  }
}

}  // namespace

std::vector<Eigen::Vector3d> place(const ConvexShape& shape, const ObjectPose& pose) {
  std::vector<Eigen::Vector3d> out;
  out.reserve(shape.vertices().size());
  place_into(shape, pose, out);
  return out;
}

bool polygons_intersect(std::span<const Eigen::Vector3d> a, std::span<const Eigen::Vector3d> b) {
  auto separated_by_edges_of = [](std::span<const Eigen::Vector3d> p, std::span<const Eigen::Vector3d> q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Eigen::Vector3d& u = p[i];
      const Eigen::Vector3d& v = p[(i + 1) % p.size()];
      const double nx = v.y() - u.y();
      const double ny = u.x() - v.x();
      double max_p = -std::numeric_limits<double>::infinity();
      double min_p = std::numeric_limits<double>::infinity();
      for (const auto& x : p) {
        const double d = nx * x.x() + ny * x.y();
        max_p = std::max(max_p, d);
        min_p = std::min(min_p, d);
      }
      double max_q = -std::numeric_limits<double>::infinity();
      double min_q = std::numeric_limits<double>::infinity();
      for (const auto& x : q) {
        const double d = nx * x.x() + ny * x.y();
        max_q = std::max(max_q, d);
        min_q = std::min(min_q, d);
      }
      if (max_p < min_q || max_q < min_p) return true;
    }
    return false;
  };
  return !separated_by_edges_of(a, b) && !separated_by_edges_of(b, a);
}

bool polytopes_intersect(std::span<const Eigen::Vector3d> a, std::span<const Eigen::Vector3d> b, double margin) {
  auto minkowski = [&](const Eigen::Vector3d& d) -> Eigen::Vector3d { return support(a, d) - support(b, -d); };
  Eigen::Vector3d ca = Eigen::Vector3d::Zero();
  Eigen::Vector3d cb = Eigen::Vector3d::Zero();
  for (const auto& p : a) ca += p;
  for (const auto& p : b) cb += p;
  Eigen::Vector3d v = ca / static_cast<double>(a.size()) - cb / static_cast<double>(b.size());
  Simplex s;
  for (int iter = 0; iter < 64; ++iter) {
    const double vv = v.squaredNorm();
    if (vv <= margin * margin) return true;
    const Eigen::Vector3d w = minkowski(-v);
    const double vw = v.dot(w);
    if (vw > margin * std::sqrt(vv)) return false;  // separating plane with normal v
    if (vv - vw <= 1e-12 * vv) return true;         // converged within the margin band
    s.pts[s.size++] = w;
    switch (s.size) {
      case 1:
        v = w;
        break;
      case 2:
        v = closest_on_segment(s);
        break;
      case 3: {
        Simplex out;
        v = closest_on_triangle(s.pts[0], s.pts[1], s.pts[2], out);
        s = out;
        break;
      }
      default:
        if (!closest_on_tetrahedron(s, v)) return true;
        break;
    }
  }
  return true;
}

bool is_free(const World& world, std::span<const MovingObject> objects, const Config& q) {
  if (q.size() != objects.size()) throw std::invalid_argument("config and object list sizes differ");
  if (q.dim() != world.dim()) throw std::invalid_argument("config and world dimensions differ");
  const int dim = world.dim();
  thread_local std::vector<std::vector<Eigen::Vector3d>> placed;
  thread_local std::vector<Aabb> boxes;
  thread_local std::vector<std::size_t> nearby;
  if (placed.size() < objects.size()) placed.resize(objects.size());
  boxes.clear();
  const auto obstacles = world.obstacles();
  const auto obstacle_boxes = world.obstacle_boxes();
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!world.bounds().contains(q[i].translation, dim)) return false;
    place_into(objects[i].shape, q[i], placed[i]);
    boxes.push_back(box_of(placed[i]));
    world.candidates(boxes.back(), nearby);
    for (std::size_t k : nearby) {
      if (!boxes.back().overlaps(obstacle_boxes[k], dim)) continue;
      if (shapes_intersect(dim, placed[i], obstacles[k].vertices())) return false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (boxes[j].overlaps(boxes[i], dim) && shapes_intersect(dim, placed[j], placed[i])) return false;
    }
  }
  return true;
}

bool is_free(const World& world, const MovingObject& object, const Config& q) {
  return is_free(world, std::span<const MovingObject>(&object, 1), q);
}

bool edge_free(const World& world, std::span<const MovingObject> objects, const Config& a, const Config& b,
               double resolution, std::size_t* checks) {
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
  const bool swap = lex_compare(b, a) < 0;
  const Config& from = swap ? b : a;
  const Config& to = swap ? a : b;
  const double length = dist_config(from, to, weights_of(objects));
  const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(length / resolution)));
  std::size_t local_checks = 0;
  auto check = [&](const Config& q) {
    ++local_checks;
    return is_free(world, objects, q);
  };
  bool ok = check(from) && check(to);
  // Coarse-to-fine over the same grid of steps, so blocked edges fail early.
  std::size_t top = 1;
  while (top * 2 < steps) top *= 2;
  for (std::size_t stride = top; ok && stride >= 1; stride /= 2) {
    for (std::size_t i = stride; ok && i < steps; i += stride) {
      if (stride != top && i % (2 * stride) == 0) continue;
      ok = check(geodesic(from, to, static_cast<double>(i) / static_cast<double>(steps)));
    }
  }
  if (checks) *checks += local_checks;
  return ok;
}

bool edge_free(const World& world, const MovingObject& object, const Config& a, const Config& b, double resolution,
               std::size_t* checks) {
  return edge_free(world, std::span<const MovingObject>(&object, 1), a, b, resolution, checks);
}

SymmetryCheck check_object_symmetry(const MovingObject& object, double tol) {
  SymmetryCheck result;
  const auto verts = object.shape.vertices();
  for (const auto& factor : object.symmetry->factors()) {
    for (const auto& r : factor.elements) {
      for (const auto& v : verts) {
        Eigen::Vector3d image;
        if (const auto* r2 = std::get_if<Rotation2>(&r)) {
          const Eigen::Vector2d p = r2->rotate(v.head<2>());
          image = {p.x(), p.y(), 0.0};
        } else {
          image = std::get<Rotation3>(r).rotate(v);
        }
        double best = std::numeric_limits<double>::infinity();
        for (const auto& u : verts) best = std::min(best, (u - image).norm());
        result.max_deviation = std::max(result.max_deviation, best);
      }
    }
  }
  result.ok = result.max_deviation <= tol;
  return result;
}

ConvexShape regular_polygon(int sides, double circumradius) {
  if (sides < 3) throw std::invalid_argument("polygon needs at least 3 sides");
  std::vector<Eigen::Vector3d> pts;
  for (int k = 0; k < sides; ++k) {
    const double a = kTwoPi * k / sides;
    pts.emplace_back(circumradius * std::cos(a), circumradius * std::sin(a), 0.0);
  }
  return ConvexShape(2, std::move(pts)).centered();
}

ConvexShape rectangle(double length, double width) {
  const double x = 0.5 * length;
  const double y = 0.5 * width;
  return ConvexShape(2, {{-x, -y, 0}, {x, -y, 0}, {x, y, 0}, {-x, y, 0}});
}

ConvexShape regular_pyramid(int sides, double base_radius, double height) {
  if (sides < 3) throw std::invalid_argument("pyramid base needs at least 3 sides");
  std::vector<Eigen::Vector3d> pts;
  for (int k = 0; k < sides; ++k) {
    const double a = kTwoPi * k / sides;
    pts.emplace_back(base_radius * std::cos(a), base_radius * std::sin(a), 0.0);
  }
  pts.emplace_back(0.0, 0.0, height);
  return ConvexShape(3, std::move(pts)).centered();
}

ConvexShape regular_prism(int sides, double radius, double height) {
  if (sides < 3) throw std::invalid_argument("prism base needs at least 3 sides");
  std::vector<Eigen::Vector3d> pts;
  for (double z : {-0.5 * height, 0.5 * height}) {
    for (int k = 0; k < sides; ++k) {
      const double a = kTwoPi * k / sides;
      pts.emplace_back(radius * std::cos(a), radius * std::sin(a), z);
    }
  }
  return ConvexShape(3, std::move(pts));
}

ConvexShape regular_tetrahedron(double circumradius) {
  const double s = circumradius / std::sqrt(3.0);
  return ConvexShape(3, {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}});
}

ConvexShape cube(double half_side) {
  std::vector<Eigen::Vector3d> pts;
  for (int i = 0; i < 8; ++i) {
    pts.emplace_back((i & 1) ? half_side : -half_side, (i & 2) ? half_side : -half_side,
                     (i & 4) ? half_side : -half_side);
  }
  return ConvexShape(3, std::move(pts));
}

}  // namespace symplan
