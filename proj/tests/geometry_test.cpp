#include "support/generators.hpp"
#include "trilink/canonical.hpp"
#include "trilink/geometry.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace trilink {
namespace {

using testing::random_point;
using testing::random_triangle_mixed;

Scalar q(long n, long d = 1) { return Scalar(n) / Scalar(d); }
Point3 P(const Scalar& x, const Scalar& y, const Scalar& z) { return {x, y, z}; }

const Triangle kUnit(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0));

TEST(Orient3d, UnitSimplexIsPositive) {
  EXPECT_EQ(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)), Sign::Positive);
}

TEST(Orient3d, CoplanarIsZero) {
  EXPECT_EQ(orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(2, 3, 0)), Sign::Zero);
}

TEST(Orient3d, AntisymmetricUnderTranspositions) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<Point3, 4> p{random_point(rng), random_point(rng), random_point(rng), random_point(rng)};
    const Sign s = orient3d(p[0], p[1], p[2], p[3]);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        auto r = p;
        std::swap(r[i], r[j]);
        EXPECT_EQ(orient3d(r[0], r[1], r[2], r[3]), -s);
      }
  }
}

TEST(PointInFilledTriangle, CentroidAndVertices) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Triangle t = random_triangle_mixed(rng);
    EXPECT_TRUE(point_in_filled_triangle(t.centroid(), t));
    for (const auto& v : t.vertices()) EXPECT_TRUE(point_in_filled_triangle(v, t));
    EXPECT_FALSE(point_in_filled_triangle(t.centroid() + t.normal(), t));
  }
  EXPECT_FALSE(point_in_filled_triangle(kUnit.centroid() + P(0, 0, 1), kUnit));
  EXPECT_FALSE(point_in_filled_triangle(P(1, 1, 0), kUnit));
  EXPECT_TRUE(point_in_filled_triangle(P(q(1, 2), q(1, 2), 0), kUnit));
}

TEST(SegmentsIntersect, Cases) {
  const Segment s{P(0, 0, 0), P(2, 0, 0)};
  EXPECT_TRUE(segments_intersect(s, {P(1, -1, 0), P(1, 1, 0)}));    // crossing
  EXPECT_TRUE(segments_intersect(s, {P(2, 0, 0), P(3, 1, 0)}));     // shared endpoint
  EXPECT_TRUE(segments_intersect(s, {P(1, 0, 0), P(5, 0, 0)}));     // collinear overlap
  EXPECT_FALSE(segments_intersect(s, {P(3, 0, 0), P(5, 0, 0)}));    // collinear apart
  EXPECT_FALSE(segments_intersect(s, {P(1, -1, 1), P(1, 1, 1)}));   // skew
  EXPECT_FALSE(segments_intersect(s, {P(0, 1, 0), P(2, 1, 0)}));    // parallel
  EXPECT_TRUE(segments_intersect(s, {P(1, 0, 0), P(1, 0, 0)}));     // point on segment
  EXPECT_FALSE(segments_intersect(s, {P(1, 1, 0), P(1, 1, 0)}));    // point off segment
  EXPECT_FALSE(segments_intersect(s, {P(3, 1, 0), P(3, -1, 0)}));   // coplanar, misses
}

TEST(SegmentFilledTriangle, VerticalThroughInterior) {
  const auto r = segment_filled_triangle({P(q(1, 3), q(1, 3), -1), P(q(1, 3), q(1, 3), 1)}, kUnit);
  ASSERT_TRUE(std::holds_alternative<Point3>(r));
  EXPECT_EQ(std::get<Point3>(r), P(q(1, 3), q(1, 3), 0));
}

TEST(SegmentFilledTriangle, CrossingOutsideHull) {
  EXPECT_TRUE(is_empty(segment_filled_triangle({P(5, 5, -1), P(5, 5, 1)}, kUnit)));
}

TEST(SegmentFilledTriangle, CoplanarClip) {
  // Line y = 1/4 meets x >= 0, y >= 0, x + y <= 1 in x in [0, 3/4].
  const Segment s{P(-1, q(1, 4), 0), P(2, q(1, 4), 0)};
  const auto r = segment_filled_triangle(s, kUnit);
  ASSERT_TRUE(std::holds_alternative<Segment>(r));
  EXPECT_EQ(std::get<Segment>(r), (Segment{P(0, q(1, 4), 0), P(q(3, 4), q(1, 4), 0)}));

  // Cross-check with the sampling oracle.
  const auto o = testing::oracle({s, kUnit});
  ASSERT_EQ(o.kind, testing::OracleResult::Kind::Segment);
  EXPECT_TRUE(testing::agrees(r, o));
}

TEST(SegmentFilledTriangle, EndpointTouchAndCoplanarPoint) {
  // Endpoint resting on the interior.
  auto r = segment_filled_triangle({P(q(1, 4), q(1, 4), 0), P(0, 0, 3)}, kUnit);
  ASSERT_TRUE(std::holds_alternative<Point3>(r));
  EXPECT_EQ(std::get<Point3>(r), P(q(1, 4), q(1, 4), 0));
  // Coplanar segment touching only the vertex (1,0,0).
  r = segment_filled_triangle({P(1, 0, 0), P(2, -1, 0)}, kUnit);
  ASSERT_TRUE(std::holds_alternative<Point3>(r));
  EXPECT_EQ(std::get<Point3>(r), P(1, 0, 0));
  // Degenerate segment.
  EXPECT_TRUE(std::holds_alternative<Point3>(segment_filled_triangle({P(0, 0, 0), P(0, 0, 0)}, kUnit)));
}

TEST(SegmentFilledTriangle, ResultPointsLieOnBothSets) {
  Rng rng(5);
  int nonempty = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto c = testing::random_segment_triangle(rng);
    const auto r = segment_filled_triangle(c.segment, c.triangle);
    if (const auto* p = std::get_if<Point3>(&r)) {
      ++nonempty;
      EXPECT_TRUE(point_in_filled_triangle(*p, c.triangle));
      EXPECT_TRUE(point_on_segment(*p, c.segment));
    } else if (const auto* s = std::get_if<Segment>(&r)) {
      ++nonempty;
      EXPECT_NE(s->p, s->q);
      for (const auto& e : {s->p, s->q}) {
        EXPECT_TRUE(point_in_filled_triangle(e, c.triangle));
        EXPECT_TRUE(point_on_segment(e, c.segment));
      }
    }
  }
  EXPECT_GT(nonempty, 200);
}

TEST(SegmentFilledTriangle, AgreesWithSamplingOracle) {
  Rng rng(17);
  int confident = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto c = testing::random_segment_triangle(rng);
    const auto o = testing::oracle(c);
    if (o.kind == testing::OracleResult::Kind::Unsure) continue;
    ++confident;
    EXPECT_TRUE(testing::agrees(segment_filled_triangle(c.segment, c.triangle), o)) << "trial " << trial;
  }
  EXPECT_GT(confident, 1350);
}

TEST(OutlineHullProfile, DisjointHullsAreEmpty) {
  const Triangle b(P(100, 0, 0), P(101, 0, 0), P(100, 1, 0));
  EXPECT_EQ(outline_hull_profile(kUnit, b).kind, IntersectionProfile::Kind::Empty);
}

TEST(OutlineHullProfile, HopfPairHasOnePoint) {
  const Linking h = hopf_split();
  const auto p = outline_hull_profile(h[1], h[0]);
  ASSERT_TRUE(p.is_points(1));
  EXPECT_EQ(p.points[0], P(1, 1, 0));
}

TEST(OutlineHullProfile, BorromeanCycleHasTwoPoints) {
  const Linking b = borromean_certified();
  for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(outline_hull_profile(b[j], b[(j + 1) % 3]).is_points(2));
}

TEST(OutlineHullProfile, SegmentAndWholeOutline) {
  const Triangle big(P(0, 0, 0), P(4, 0, 0), P(0, 4, 0));
  const Triangle standing(P(q(1, 5), q(1, 5), 0), P(q(2, 5), q(1, 5), 0), P(q(3, 10), q(1, 5), 1));
  EXPECT_EQ(outline_hull_profile(standing, big).kind, IntersectionProfile::Kind::ContainsSegment);
  const Triangle inner(P(1, 1, 0), P(2, 1, 0), P(1, 2, 0));
  EXPECT_EQ(outline_hull_profile(inner, big).kind, IntersectionProfile::Kind::WholeOutline);
  EXPECT_EQ(outline_hull_profile(big, inner).kind, IntersectionProfile::Kind::Empty);
}

TEST(OutlineHullProfile, VertexInsideHullCountsOnce) {
  const Triangle big(P(0, 0, 0), P(4, 0, 0), P(0, 4, 0));
  const Triangle tip(P(1, 1, 0), P(1, 0, 2), P(2, 1, 3));
  const auto p = outline_hull_profile(tip, big);
  ASSERT_TRUE(p.is_points(1));
  EXPECT_EQ(p.points[0], P(1, 1, 0));
}

TEST(OutlineHullProfile, RejectsIntersectingOutlines) {
  const Triangle shares_vertex(P(0, 0, 0), P(0, 0, 1), P(1, 1, 1));
  EXPECT_THROW(outline_hull_profile(kUnit, shares_vertex), DisjointnessViolated);
}

TEST(OutlineHullProfile, InvariantUnderVertexPermutation) {
  Rng rng(23);
  int nonempty = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto [a, b] = testing::random_disjoint_pair(rng);
    const auto ref = outline_hull_profile(a, b);
    nonempty += ref.kind != IntersectionProfile::Kind::Empty;
    std::array<std::size_t, 3> pa{0, 1, 2};
    do {
      const Triangle a2(a[pa[0]], a[pa[1]], a[pa[2]]);
      const Triangle b2(b[pa[2]], b[pa[0]], b[pa[1]]);
      EXPECT_EQ(outline_hull_profile(a2, b2), ref);
    } while (std::next_permutation(pa.begin(), pa.end()));
  }
  EXPECT_GT(nonempty, 30);
}

TEST(FilledPairIntersection, DisjointIsEmpty) {
  const Triangle far(P(100, 0, 0), P(101, 0, 0), P(100, 1, 0));
  EXPECT_TRUE(filled_pair_intersection(kUnit, far).empty());
}

TEST(FilledPairIntersection, BorromeanPairIsSegmentBetweenProfilePoints) {
  const Linking b = borromean_certified();
  const ConvexSet s = filled_pair_intersection(b[0], b[1]);
  ASSERT_EQ(s.kind(), ConvexSet::Kind::Segment);
  const auto profile = outline_hull_profile(b[0], b[1]);
  EXPECT_EQ(s.canonical(), profile.points);
  EXPECT_EQ(outline_hull_profile(b[1], b[0]).kind, IntersectionProfile::Kind::Empty);
  for (const auto& v : s.vertices) {
    EXPECT_TRUE(point_in_filled_triangle(v, b[0]));
    EXPECT_TRUE(point_in_filled_triangle(v, b[1]));
    EXPECT_TRUE(point_on_segment(v, b[0].edge(0)) || point_on_segment(v, b[0].edge(1)) ||
                point_on_segment(v, b[0].edge(2)));
  }
}

TEST(FilledPairIntersection, SelfIntersectionIsTheTriangle) {
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Triangle t = random_triangle_mixed(rng);
    const ConvexSet s = filled_pair_intersection(t, t);
    ASSERT_EQ(s.kind(), ConvexSet::Kind::Polygon);
    std::vector<Point3> v{t[0], t[1], t[2]};
    std::sort(v.begin(), v.end());
    EXPECT_EQ(s.canonical(), v);
  }
}

TEST(FilledPairIntersection, CoplanarOverlapIsPolygon) {
  // Unit square corner cut: triangles overlap in the square [0,1/2]^2 minus nothing.
  const Triangle b(P(q(1, 2), q(-1, 2), 0), P(q(1, 2), 1, 0), P(-1, q(1, 2), 0));
  const ConvexSet s = filled_pair_intersection(kUnit, b);
  ASSERT_EQ(s.kind(), ConvexSet::Kind::Polygon);
  for (const auto& v : s.vertices) {
    EXPECT_TRUE(point_in_filled_triangle(v, kUnit));
    EXPECT_TRUE(point_in_filled_triangle(v, b));
  }
  // Coplanar triangles sharing only a vertex meet in that point.
  const Triangle corner(P(1, 0, 0), P(2, 0, 0), P(2, -1, 0));
  const ConvexSet c = filled_pair_intersection(kUnit, corner);
  ASSERT_EQ(c.kind(), ConvexSet::Kind::Point);
  EXPECT_EQ(c.vertices[0], P(1, 0, 0));
}

TEST(FilledPairIntersection, SymmetricAsPointSets) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Triangle a = random_triangle_mixed(rng, 16);
    Triangle b = random_triangle_mixed(rng, 16);
    if (trial % 3 == 0) {
      // Coplanar partner.
      auto coef = [&] { return testing::random_scalar(rng, 8) + Scalar(1) / 3; };
      for (;;) {
        Scalar u0 = coef(), v0 = coef(), u1 = coef(), v1 = coef(), u2 = coef(), v2 = coef();
        const Point3 x = testing::in_plane(a, u0, v0), y = testing::in_plane(a, u1, v1),
                     z = testing::in_plane(a, u2, v2);
        if (!collinear(x, y, z)) {
          b = Triangle(x, y, z);
          break;
        }
      }
    }
    const ConvexSet ab = filled_pair_intersection(a, b), ba = filled_pair_intersection(b, a);
    EXPECT_EQ(ab.canonical(), ba.canonical()) << "trial " << trial;
    for (const auto& v : ab.vertices) {
      EXPECT_TRUE(point_in_filled_triangle(v, a));
      EXPECT_TRUE(point_in_filled_triangle(v, b));
    }
  }
}

TEST(TripleCommonPoint, Examples) {
  const Triangle t1 = kUnit;
  const Triangle t2(P(10, 0, 0), P(11, 0, 0), P(10, 1, 0));
  const Triangle t3(P(20, 0, 0), P(21, 0, 0), P(20, 1, 0));
  EXPECT_FALSE(triple_common_point(t1, t2, t3));
  EXPECT_TRUE(triple_common_point(t1, t1, t1));
  const Linking b = borromean_certified();
  EXPECT_TRUE(triple_common_point(b[0], b[1], b[2]));
  EXPECT_TRUE(triple_common_point(b[2], b[0], b[1]));
}

TEST(TripleCommonPoint, CoplanarPairWithPiercingThird) {
  const Triangle big(P(0, 0, 0), P(4, 0, 0), P(0, 4, 0));
  const Triangle other(P(1, 1, 0), P(5, 1, 0), P(1, 5, 0));
  // Overlap of the two coplanar triangles is the region x, y >= 1, x + y <= 4.
  const Triangle through(P(q(3, 2), q(3, 2), -1), P(q(3, 2), q(3, 2), 1), P(9, 9, 9));
  EXPECT_TRUE(triple_common_point(through, big, other));
  const Triangle misses(P(q(1, 2), q(1, 2), -1), P(q(1, 2), q(1, 2), 1), P(-9, -9, 9));
  EXPECT_FALSE(triple_common_point(misses, big, other));
  const Triangle coplanar_hit(P(2, 2, 0), P(3, 3, 0), P(2, 3, 0));
  EXPECT_TRUE(triple_common_point(coplanar_hit, big, other));
  const Triangle coplanar_miss(P(-3, -3, 0), P(-2, -3, 0), P(-3, -2, 0));
  EXPECT_FALSE(triple_common_point(coplanar_miss, big, other));
}

}  // namespace
}  // namespace trilink
