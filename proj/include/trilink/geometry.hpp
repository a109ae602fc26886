#pragma once

// Exact predicates and constructions over rational 3-space.
//
// Conventions: filled triangles, segments and their intersections are closed
// sets. A Triangle value stands for three non-collinear vertices; whether an
// operation means the outline (three edges) or the filled triangle is stated
// in its name.

#include "trilink/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace trilink {

struct Point3 {
  Scalar x, y, z;

  friend bool operator==(const Point3&, const Point3&) = default;
  friend bool operator<(const Point3& a, const Point3& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  }
  friend Point3 operator+(const Point3& a, const Point3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Point3 operator-(const Point3& a, const Point3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Point3 operator*(const Point3& a, const Scalar& s) {
    return {a.x * s, a.y * s, a.z * s};
  }
  friend Point3 operator/(const Point3& a, const Scalar& s) {
    return {a.x / s, a.y / s, a.z / s};
  }

  const Scalar& operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
};

inline Scalar dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline bool is_zero(const Point3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

inline bool collinear(const Point3& a, const Point3& b, const Point3& c) {
  return is_zero(cross(b - a, c - a));
}

struct Segment {
  Point3 p, q;

  friend bool operator==(const Segment&, const Segment&) = default;
  bool degenerate() const { return p == q; }
  Point3 at(const Scalar& t) const { return p + (q - p) * t; }
};

class Triangle {
 public:
  /// Throws std::invalid_argument when the vertices are collinear.
  Triangle(Point3 a, Point3 b, Point3 c) : v_{std::move(a), std::move(b), std::move(c)} {
    if (collinear(v_[0], v_[1], v_[2]))
      throw std::invalid_argument("degenerate triangle: vertices are collinear");
  }

  const Point3& operator[](std::size_t i) const { return v_[i]; }
  const std::array<Point3, 3>& vertices() const { return v_; }

  Segment edge(std::size_t i) const { return {v_[i], v_[(i + 1) % 3]}; }
  Point3 normal() const { return cross(v_[1] - v_[0], v_[2] - v_[0]); }
  Point3 centroid() const { return (v_[0] + v_[1] + v_[2]) / Scalar(3); }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  std::array<Point3, 3> v_;
};

// ---------------------------------------------------------------------------
// Orientation

/// Signed volume determinant det[b - a, c - a, d - a] (six times the signed
/// tetrahedron volume).
inline Scalar orient3d_value(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return dot(cross(b - a, c - a), d - a);
}

inline Sign orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return sign_of(orient3d_value(a, b, c, d));
}

inline Scalar side_value(const Triangle& t, const Point3& p) {
  return orient3d_value(t[0], t[1], t[2], p);
}

namespace detail {

// Orthogonal projection onto the coordinate plane that drops `axis`. It is
// injective on any plane whose normal has a nonzero `axis` component.
struct Projection {
  int axis = 2;

  static Projection for_normal(const Point3& n) {
    const Scalar ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
    if (ax >= ay && ax >= az) return {0};
    if (ay >= az) return {1};
    return {2};
  }

  // Signed doubled area of (a, b, c) in the projected plane.
  Scalar orient2d(const Point3& a, const Point3& b, const Point3& c) const {
    const int u = (axis + 1) % 3, v = (axis + 2) % 3;
    return (b[u] - a[u]) * (c[v] - a[v]) - (b[v] - a[v]) * (c[u] - a[u]);
  }
};

inline void dedupe(std::vector<Point3>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Coplanar point in closed triangle, using the triangle's own projection.
inline bool inside_coplanar(const Point3& p, const Triangle& t) {
  const auto proj = Projection::for_normal(t.normal());
  const int orient = proj.orient2d(t[0], t[1], t[2]).sign();
  for (std::size_t i = 0; i < 3; ++i)
    if (proj.orient2d(t[i], t[(i + 1) % 3], p).sign() * orient < 0) return false;
  return true;
}

// Sutherland-Hodgman clip of a coplanar point list (any length, treated as a
// closed polygon) against a convex polygon given in order. Works for
// degenerate subjects (a point or a 2-gon). Result is unnormalized.
inline std::vector<Point3> clip_convex(std::vector<Point3> subject, const std::vector<Point3>& clip,
                                       const Projection& proj) {
  const std::size_t n = clip.size();
  const int orient = proj.orient2d(clip[0], clip[1], clip[2]).sign();
  for (std::size_t i = 0; i < n && !subject.empty(); ++i) {
    const Point3& a = clip[i];
    const Point3& b = clip[(i + 1) % n];
    std::vector<Point3> out;
    for (std::size_t k = 0; k < subject.size(); ++k) {
      const Point3& cur = subject[k];
      const Point3& nxt = subject[(k + 1) % subject.size()];
      const Scalar fc = proj.orient2d(a, b, cur) * orient;
      const Scalar fn = proj.orient2d(a, b, nxt) * orient;
      if (fc.sign() >= 0) out.push_back(cur);
      if (fc.sign() * fn.sign() < 0) out.push_back(cur + (nxt - cur) * (fc / (fc - fn)));
    }
    subject = std::move(out);
  }
  return subject;
}

// Reduce coplanar points to their convex hull vertices in counter-clockwise
// order (w.r.t. the projection). Collinear interior points are dropped.
inline std::vector<Point3> convex_position(std::vector<Point3> pts, const Projection& proj) {
  dedupe(pts);
  if (pts.size() <= 2) return pts;
  const int u = (proj.axis + 1) % 3, v = (proj.axis + 2) % 3;
  std::sort(pts.begin(), pts.end(), [u, v](const Point3& a, const Point3& b) {
    return std::tie(a[u], a[v]) < std::tie(b[u], b[v]);
  });
  std::vector<Point3> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && proj.orient2d(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && proj.orient2d(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Membership

/// Closed filled triangle membership: coplanar and all barycentric
/// coordinates non-negative.
inline bool point_in_filled_triangle(const Point3& p, const Triangle& t) {
  return side_value(t, p) == 0 && detail::inside_coplanar(p, t);
}

/// Strict interior of the filled triangle (relative to its plane).
inline bool point_in_open_triangle(const Point3& p, const Triangle& t) {
  if (side_value(t, p) != 0) return false;
  const auto proj = detail::Projection::for_normal(t.normal());
  const int orient = proj.orient2d(t[0], t[1], t[2]).sign();
  for (std::size_t i = 0; i < 3; ++i)
    if (proj.orient2d(t[i], t[(i + 1) % 3], p).sign() * orient <= 0) return false;
  return true;
}

/// Closed segment membership (a degenerate segment is a point).
inline bool point_on_segment(const Point3& p, const Segment& s) {
  if (!collinear(s.p, s.q, p)) return false;
  for (int axis = 0; axis < 3; ++axis) {
    const auto [lo, hi] = std::minmax(s.p[axis], s.q[axis]);
    if (p[axis] < lo || p[axis] > hi) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Segment / segment

/// True iff the closed segments share a point. Degenerate segments allowed.
inline bool segments_intersect(const Segment& s1, const Segment& s2) {
  if (orient3d(s1.p, s1.q, s2.p, s2.q) != Sign::Zero) return false;

  const Point3 d1 = s1.q - s1.p, d2 = s2.q - s2.p;
  Point3 n = cross(d1, s2.p - s1.p);
  if (is_zero(n)) n = cross(d1, s2.q - s1.p);
  if (is_zero(n)) n = cross(d2, s1.p - s2.p);
  if (is_zero(n)) n = cross(d2, s1.q - s2.p);

  if (is_zero(n)) {
    // All four points on one line (or coincident): compare 1-D intervals on
    // an axis along which the line is not constant.
    Point3 dir = !is_zero(d1) ? d1 : (!is_zero(d2) ? d2 : s2.p - s1.p);
    if (is_zero(dir)) return true;
    const int axis = dir.x != 0 ? 0 : (dir.y != 0 ? 1 : 2);
    const auto [lo1, hi1] = std::minmax(s1.p[axis], s1.q[axis]);
    const auto [lo2, hi2] = std::minmax(s2.p[axis], s2.q[axis]);
    return !(hi1 < lo2 || hi2 < lo1);
  }

  const auto proj = detail::Projection::for_normal(n);
  const int o1 = proj.orient2d(s1.p, s1.q, s2.p).sign();
  const int o2 = proj.orient2d(s1.p, s1.q, s2.q).sign();
  const int o3 = proj.orient2d(s2.p, s2.q, s1.p).sign();
  const int o4 = proj.orient2d(s2.p, s2.q, s1.q).sign();
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && point_on_segment(s2.p, s1)) return true;
  if (o2 == 0 && point_on_segment(s2.q, s1)) return true;
  if (o3 == 0 && point_on_segment(s1.p, s2)) return true;
  if (o4 == 0 && point_on_segment(s1.q, s2)) return true;
  return false;
}

/// True iff the two triangle outlines share a point (9 edge/edge tests).
inline bool outlines_intersect(const Triangle& a, const Triangle& b) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (segments_intersect(a.edge(i), b.edge(j))) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Segment / filled triangle

struct EmptySet {
  friend bool operator==(const EmptySet&, const EmptySet&) = default;
};

/// Intersection of a segment with a convex set: empty, one point, or a
/// sub-segment of positive length.
using IntersectionSet = std::variant<EmptySet, Point3, Segment>;

inline bool is_empty(const IntersectionSet& s) { return std::holds_alternative<EmptySet>(s); }

namespace detail {

// Clip a segment lying in t's plane against the closed filled triangle.
inline IntersectionSet clip_coplanar_segment(const Segment& s, const Triangle& t) {
  const auto proj = Projection::for_normal(t.normal());
  const int orient = proj.orient2d(t[0], t[1], t[2]).sign();
  Scalar lo(0), hi(1);
  for (std::size_t i = 0; i < 3; ++i) {
    const Point3& a = t[i];
    const Point3& b = t[(i + 1) % 3];
    // Signed edge function is affine along the segment: f(l) = f0 + l (f1 - f0).
    const Scalar f0 = proj.orient2d(a, b, s.p) * orient;
    const Scalar f1 = proj.orient2d(a, b, s.q) * orient;
    if (f0.sign() < 0 && f1.sign() < 0) return EmptySet{};
    if (f0.sign() < 0) lo = std::max(lo, f0 / (f0 - f1));
    if (f1.sign() < 0) hi = std::min(hi, f0 / (f0 - f1));
  }
  if (lo > hi) return EmptySet{};
  if (lo == hi) return s.at(lo);
  return Segment{s.at(lo), s.at(hi)};
}

}  // namespace detail

/// Exact intersection of a closed segment with a closed filled triangle.
/// A degenerate segment is treated as a point.
inline IntersectionSet segment_filled_triangle(const Segment& s, const Triangle& t) {
  if (s.degenerate()) {
    if (point_in_filled_triangle(s.p, t)) return s.p;
    return EmptySet{};
  }
  const Scalar d0 = side_value(t, s.p);
  const Scalar d1 = side_value(t, s.q);
  if (d0.sign() * d1.sign() > 0) return EmptySet{};
  if (d0 == 0 && d1 == 0) return detail::clip_coplanar_segment(s, t);

  Point3 x = d0 == 0 ? s.p : (d1 == 0 ? s.q : s.at(d0 / (d0 - d1)));
  if (detail::inside_coplanar(x, t)) return x;
  return EmptySet{};
}

/// Does the segment meet the convex hull of three points, which may be
/// collinear or coincident (a degenerate hull is a segment or a point)?
inline bool segment_meets_hull3(const Segment& s, const Point3& a, const Point3& b,
                                const Point3& c) {
  if (!collinear(a, b, c)) return !is_empty(segment_filled_triangle(s, Triangle(a, b, c)));
  // Hull is the longest of the three pairwise segments.
  const Scalar ab = dot(b - a, b - a), ac = dot(c - a, c - a), bc = dot(c - b, c - b);
  Segment hull{a, b};
  if (ac >= ab && ac >= bc) hull = {a, c};
  else if (bc >= ab && bc >= ac) hull = {b, c};
  return segments_intersect(s, hull);
}

// ---------------------------------------------------------------------------
// Outline / filled triangle profile

/// Classification of (outline of a) ∩ (filled triangle b).
struct IntersectionProfile {
  enum class Kind { Empty, Points, ContainsSegment, WholeOutline };

  Kind kind = Kind::Empty;
  std::vector<Point3> points;  // distinct, sorted; only for Kind::Points

  std::size_t point_count() const { return kind == Kind::Points ? points.size() : 0; }
  bool is_points(std::size_t n) const { return kind == Kind::Points && points.size() == n; }

  friend bool operator==(const IntersectionProfile&, const IntersectionProfile&) = default;
};

class DisjointnessViolated : public std::invalid_argument {
 public:
  DisjointnessViolated() : std::invalid_argument("triangle outlines intersect") {}
};

/// Profile of a's outline against b's filled triangle. Throws
/// DisjointnessViolated if the outlines meet.
inline IntersectionProfile outline_hull_profile(const Triangle& a, const Triangle& b) {
  if (outlines_intersect(a, b)) throw DisjointnessViolated();

  IntersectionProfile profile;
  if (point_in_filled_triangle(a[0], b) && point_in_filled_triangle(a[1], b) &&
      point_in_filled_triangle(a[2], b)) {
    profile.kind = IntersectionProfile::Kind::WholeOutline;
    return profile;
  }
  std::vector<Point3> pts;
  for (std::size_t i = 0; i < 3; ++i) {
    const IntersectionSet hit = segment_filled_triangle(a.edge(i), b);
    if (std::holds_alternative<Segment>(hit)) {
      profile.kind = IntersectionProfile::Kind::ContainsSegment;
      return profile;
    }
    if (const auto* p = std::get_if<Point3>(&hit)) pts.push_back(*p);
  }
  detail::dedupe(pts);
  if (pts.empty()) return profile;
  if (pts.size() > 2)
    throw std::logic_error("outline meets a filled triangle in more than two isolated points");
  profile.kind = IntersectionProfile::Kind::Points;
  profile.points = std::move(pts);
  return profile;
}

// ---------------------------------------------------------------------------
// Filled triangle / filled triangle

/// A closed convex set given by its vertices in convex position:
/// 0 vertices = empty, 1 = point, 2 = segment, 3+ = planar polygon.
struct ConvexSet {
  std::vector<Point3> vertices;

  enum class Kind { Empty, Point, Segment, Polygon };
  Kind kind() const {
    switch (vertices.size()) {
      case 0: return Kind::Empty;
      case 1: return Kind::Point;
      case 2: return Kind::Segment;
      default: return Kind::Polygon;
    }
  }
  bool empty() const { return vertices.empty(); }

  /// Sorted vertex list; equal point sets have equal canonical forms.
  std::vector<Point3> canonical() const {
    auto v = vertices;
    std::sort(v.begin(), v.end());
    return v;
  }
};

namespace detail {

// Points where the filled triangle t meets the plane with signed vertex
// distances `d` (not all zero): at most two distinct points.
inline std::vector<Point3> plane_section(const Triangle& t, const std::array<Scalar, 3>& d) {
  std::vector<Point3> pts;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    if (d[i] == 0) pts.push_back(t[i]);
    if (d[i].sign() * d[j].sign() < 0) pts.push_back(t[i] + (t[j] - t[i]) * (d[i] / (d[i] - d[j])));
  }
  dedupe(pts);
  return pts;
}

inline std::array<Scalar, 3> side_values(const Triangle& plane_of, const Triangle& t) {
  return {side_value(plane_of, t[0]), side_value(plane_of, t[1]), side_value(plane_of, t[2])};
}

inline std::vector<Point3> as_list(const Triangle& t) { return {t[0], t[1], t[2]}; }

inline ConvexSet from_intersection(const IntersectionSet& s) {
  if (const auto* p = std::get_if<Point3>(&s)) return {{*p}};
  if (const auto* seg = std::get_if<Segment>(&s)) return {{seg->p, seg->q}};
  return {};
}

}  // namespace detail

/// Exact intersection of two closed filled triangles.
inline ConvexSet filled_pair_intersection(const Triangle& a, const Triangle& b) {
  const auto da = detail::side_values(b, a);
  if (da[0] == 0 && da[1] == 0 && da[2] == 0) {
    const auto proj = detail::Projection::for_normal(b.normal());
    auto clipped = detail::clip_convex(detail::as_list(a), detail::as_list(b), proj);
    return {detail::convex_position(std::move(clipped), proj)};
  }
  const auto section = detail::plane_section(a, da);
  if (section.empty()) return {};
  if (section.size() == 1) {
    if (detail::inside_coplanar(section[0], b)) return {{section[0]}};
    return {};
  }
  return detail::from_intersection(segment_filled_triangle(Segment{section[0], section[1]}, b));
}

namespace detail {

// Does a planar convex set (>= 3 vertices, convex position, plane of
// `plane_of`) meet the filled triangle t?
inline bool polygon_meets_triangle(const std::vector<Point3>& polygon, const Triangle& plane_of,
                                   const Triangle& t) {
  const auto proj = Projection::for_normal(plane_of.normal());
  const auto dt = side_values(plane_of, t);
  if (dt[0] == 0 && dt[1] == 0 && dt[2] == 0)
    return !clip_convex(polygon, as_list(t), proj).empty();
  auto section = plane_section(t, dt);
  if (section.empty()) return false;
  return !clip_convex(std::move(section), polygon, proj).empty();
}

}  // namespace detail

/// True iff the three closed filled triangles share a point.
inline bool triple_common_point(const Triangle& a, const Triangle& b, const Triangle& c) {
  const ConvexSet bc = filled_pair_intersection(b, c);
  switch (bc.kind()) {
    case ConvexSet::Kind::Empty: return false;
    case ConvexSet::Kind::Point: return point_in_filled_triangle(bc.vertices[0], a);
    case ConvexSet::Kind::Segment:
      return !is_empty(segment_filled_triangle(Segment{bc.vertices[0], bc.vertices[1]}, a));
    case ConvexSet::Kind::Polygon: return detail::polygon_meets_triangle(bc.vertices, b, a);
  }
  return false;
}

}  // namespace trilink
