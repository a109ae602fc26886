#pragma once

// Linking invariants: pairwise linking coefficient mod 2 and the Borromean
// property (cyclic-enumeration form and reduced form).

#include "trilink/geometry.hpp"
#include "trilink/linking.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trilink {

/// Parity is undefined by crossing count: some outline/hull contact is not a
/// transversal crossing through the open filled triangle.
class NonGenericError : public std::runtime_error {
 public:
  NonGenericError(std::size_t first, std::size_t second)
      : std::runtime_error("non-generic pair (" + std::to_string(first) + ", " +
                           std::to_string(second) + "): parity undefined, perturb first"),
        first_(first),
        second_(second) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_, second_;
};

/// Number of points where a's outline crosses b's filled triangle, or nullopt
/// if any contact is non-transversal: a vertex of a in b's plane inside the
/// hull, an edge of a lying in b's plane and meeting the hull, or a crossing
/// on the boundary of the hull.
inline std::optional<std::size_t> transversal_crossings(const Triangle& a, const Triangle& b) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Segment e = a.edge(i);
    const IntersectionSet hit = segment_filled_triangle(e, b);
    if (is_empty(hit)) continue;
    if (!std::holds_alternative<Point3>(hit)) return std::nullopt;
    if (side_value(b, e.p).sign() * side_value(b, e.q).sign() >= 0) return std::nullopt;
    if (!point_in_open_triangle(std::get<Point3>(hit), b)) return std::nullopt;
    ++count;
  }
  return count;
}

/// True iff crossings are transversal in both directions.
inline bool is_generic_pair(const Triangle& a, const Triangle& b) {
  return transversal_crossings(a, b).has_value() && transversal_crossings(b, a).has_value();
}

/// Linking coefficient mod 2 of two triangles with disjoint outlines.
/// Throws NonGenericError unless the pair is generic in both directions; the
/// two crossing counts are independent routes to the same parity.
inline int linking_parity(const Triangle& a, const Triangle& b) {
  if (outlines_intersect(a, b)) throw DisjointnessViolated();
  const auto ab = transversal_crossings(a, b);
  const auto ba = transversal_crossings(b, a);
  if (!ab || !ba) throw NonGenericError(0, 1);
  if (*ab % 2 != *ba % 2) throw std::logic_error("asymmetric crossing parity on a generic pair");
  return static_cast<int>(*ab % 2);
}

/// Multiset of the three pairwise parities of a 3-linking, stored in
/// descending order so that equal multisets compare equal.
struct ParityProfile {
  std::array<int, 3> values{0, 0, 0};

  ParityProfile() = default;
  ParityProfile(int a, int b, int c) : values{a, b, c} {
    std::sort(values.begin(), values.end(), std::greater<>());
  }

  int linked_pairs() const { return values[0] + values[1] + values[2]; }

  std::string str() const {
    return "{" + std::to_string(values[0]) + "," + std::to_string(values[1]) + "," +
           std::to_string(values[2]) + "}";
  }

  friend bool operator==(const ParityProfile&, const ParityProfile&) = default;
};

namespace detail {

inline void require_three(const Linking& link) {
  if (link.size() != 3) throw std::invalid_argument("operation requires a linking of 3 triangles");
}

constexpr std::array<std::array<std::size_t, 3>, 6> kEnumerations{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace detail

/// Pairwise parities; NonGenericError names the offending pair.
inline ParityProfile pairwise_parity_profile(const Linking& link) {
  detail::require_three(link);
  std::array<int, 3> p{};
  constexpr std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [i, j] = pairs[k];
    try {
      p[k] = linking_parity(link[i], link[j]);
    } catch (const NonGenericError&) {
      throw NonGenericError(i, j);
    }
  }
  return {p[0], p[1], p[2]};
}

/// All pairs generic, so every parity is defined.
inline bool is_generic(const Linking& link) {
  for (std::size_t i = 0; i < link.size(); ++i)
    for (std::size_t j = i + 1; j < link.size(); ++j)
      if (!is_generic_pair(link[i], link[j])) return false;
  return true;
}

/// Common point of the three hulls, and some cyclic enumeration in which
/// each outline meets the next filled triangle in exactly two points.
inline bool is_borromean(const Linking& link) {
  detail::require_three(link);
  if (!triple_common_point(link[0], link[1], link[2])) return false;
  for (const auto& e : detail::kEnumerations) {
    bool ok = true;
    for (std::size_t j = 0; j < 3 && ok; ++j)
      ok = outline_hull_profile(link[e[j]], link[e[(j + 1) % 3]]).is_points(2);
    if (ok) return true;
  }
  return false;
}

/// Reduced characterization: an enumeration L0, L1, L2 with
/// |dL1 ∩ <L2>| = 2, |dL2 ∩ <L0>| = 2, dL1 ∩ <L0> = ∅ and a triple common
/// point of the hulls.
inline bool is_borromean_reduced(const Linking& link) {
  detail::require_three(link);
  if (!triple_common_point(link[0], link[1], link[2])) return false;
  for (const auto& e : detail::kEnumerations) {
    const Triangle& l0 = link[e[0]];
    const Triangle& l1 = link[e[1]];
    const Triangle& l2 = link[e[2]];
    if (outline_hull_profile(l1, l2).is_points(2) && outline_hull_profile(l2, l0).is_points(2) &&
        outline_hull_profile(l1, l0).kind == IntersectionProfile::Kind::Empty)
      return true;
  }
  return false;
}

}  // namespace trilink
