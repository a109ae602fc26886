#pragma once

// The five canonical linkings of three triangles. Irrational coordinates are
// replaced by nearby rationals; every constructor verifies the defining
// properties of its output exactly before returning it.

#include "trilink/invariants.hpp"
#include "trilink/linking.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trilink {

enum class CanonicalClass { Unlink3, Borromean, HopfSplit, Chain3, Necklace };

inline constexpr std::array<CanonicalClass, 5> kCanonicalClasses{
    CanonicalClass::Unlink3, CanonicalClass::Borromean, CanonicalClass::HopfSplit,
    CanonicalClass::Chain3, CanonicalClass::Necklace};

/// Fixture names used by the CLI `generate` command.
inline std::string_view fixture_name(CanonicalClass c) {
  switch (c) {
    case CanonicalClass::Unlink3: return "unlink";
    case CanonicalClass::Borromean: return "borromean";
    case CanonicalClass::HopfSplit: return "hopf-split";
    case CanonicalClass::Chain3: return "chain";
    case CanonicalClass::Necklace: return "necklace";
  }
  return "";
}

inline std::optional<CanonicalClass> canonical_from_name(std::string_view name) {
  for (auto c : kCanonicalClasses)
    if (fixture_name(c) == name) return c;
  return std::nullopt;
}

class CertificationFailed : public std::logic_error {
 public:
  explicit CertificationFailed(const std::string& what)
      : std::logic_error("canonical linking failed certification: " + what) {}
};

namespace detail {

inline Point3 pt(const Scalar& x, const Scalar& y, const Scalar& z) { return {x, y, z}; }

inline Triangle translated(const Triangle& t, const Point3& d) { return {t[0] + d, t[1] + d, t[2] + d}; }

inline void certify(bool ok, const char* what) {
  if (!ok) throw CertificationFailed(what);
}

// Runs a parametrized construction; geometric failures (degenerate or
// touching triangles, undefined parity) become CertificationFailed.
template <class Build>
Linking certified(const char* name, Build build) {
  try {
    return build();
  } catch (const CertificationFailed&) {
    throw;
  } catch (const NonGenericError& e) {
    throw CertificationFailed(std::string(name) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CertificationFailed(std::string(name) + ": " + e.what());
  }
}

inline bool hulls_disjoint(const Triangle& a, const Triangle& b) {
  return filled_pair_intersection(a, b).empty();
}

// Hopf pair: each outline crosses the other's filled triangle exactly once.
inline bool hopf_pair(const Triangle& a, const Triangle& b) {
  return outline_hull_profile(a, b).is_points(1) && outline_hull_profile(b, a).is_points(1) &&
         linking_parity(a, b) == 1;
}

// Nearest integer to sqrt(n).
inline Integer rounded_sqrt(const Integer& n) {
  const Integer r = boost::multiprecision::sqrt(n);
  const Integer twice = 2 * r + 1;
  return 4 * n >= twice * twice ? Integer(r + 1) : r;
}

inline Point3 cycle_coordinates(const Point3& p) { return {p.z, p.x, p.y}; }

inline Triangle cycle_coordinates(const Triangle& t) {
  return {cycle_coordinates(t[0]), cycle_coordinates(t[1]), cycle_coordinates(t[2])};
}

}  // namespace detail

/// Three congruent triangles spaced far apart along the x axis.
inline Linking unlink3() {
  using detail::pt;
  const Triangle base(pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0));
  Linking link({base, detail::translated(base, pt(10, 0, 0)), detail::translated(base, pt(20, 0, 0))});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      detail::certify(detail::hulls_disjoint(link[i], link[j]), "unlink hulls must be disjoint");
  return link;
}

/// Rational rounding of the Borromean (Valknut) triple: the triangle with
/// vertices (1,0,0), (-2/sqrt5, +-1/sqrt10, 0) and its images under the
/// coordinate cycle x -> y -> z -> x. Coordinates are rounded to the nearest
/// multiple of 1/denominator.
inline Linking borromean_certified(long denominator = 1'000'000) {
  using detail::pt;
  const Integer den(denominator);
  // 2/sqrt(5) = sqrt(4/5), 1/sqrt(10) = sqrt(1/10)
  const Scalar a = make_rational(detail::rounded_sqrt(den * den * 4 / 5), den);
  const Scalar b = make_rational(detail::rounded_sqrt(den * den / 10), den);
  return detail::certified("Borromean", [&] {
    const Triangle t0(pt(1, 0, 0), pt(-a, b, 0), pt(-a, -b, 0));
    const Triangle t1 = detail::cycle_coordinates(t0);
    const Triangle t2 = detail::cycle_coordinates(t1);
    Linking link({t0, t1, t2});
    detail::certify(is_borromean(link), "rounded triple is not Borromean");
    detail::certify(pairwise_parity_profile(link) == ParityProfile(0, 0, 0),
                    "rounded triple has a linked pair");
    return link;
  });
}

/// A Hopf pair plus a third triangle whose hull is disjoint from both.
inline Linking hopf_split() {
  using detail::pt;
  const Triangle flat(pt(0, 0, 0), pt(4, 0, 0), pt(0, 4, 0));
  const Triangle hook(pt(1, 1, -1), pt(1, 1, 1), pt(1, -3, 2));
  const Triangle far = detail::translated(flat, pt(100, 0, 0));
  Linking link({flat, hook, far});
  detail::certify(detail::hopf_pair(flat, hook), "triangles 0 and 1 must form a Hopf pair");
  detail::certify(detail::hulls_disjoint(far, flat) && detail::hulls_disjoint(far, hook),
                  "triangle 2 hull must be disjoint from the Hopf pair");
  return link;
}

/// Two triangles with disjoint hulls, each Hopf-linked with a third.
inline Linking chain3() {
  using detail::pt;
  const Triangle middle(pt(0, 0, 0), pt(12, 0, 0), pt(0, 12, 0));
  const Triangle left(pt(1, 1, -1), pt(1, 1, 1), pt(1, -3, 2));
  const Triangle right = detail::translated(left, pt(6, 0, 0));
  Linking link({middle, left, right});
  detail::certify(detail::hopf_pair(middle, left) && detail::hopf_pair(middle, right),
                  "outer triangles must each be Hopf-linked with the middle one");
  detail::certify(detail::hulls_disjoint(left, right), "outer hulls must be disjoint");
  return link;
}

/// Parameters of the rational necklace. The first triangle has base (-1,0,0),
/// (1,0,0) and apex (0,0,height); each next triangle is the previous one
/// rotated about its (vertical) altitude by the rational rotation with
/// half-angle tangent `half_tan` (about pi/3 by default), shifted up by a
/// third of the altitude and sideways by `drift` along x. The drift moves
/// each apex off the neighbours' planes so that all crossings are transversal.
struct NecklaceParams {
  Scalar height = Scalar(97) / 56;   // ~ sqrt(3)
  Scalar half_tan = Scalar(15) / 26; // ~ tan(pi/6)
  Scalar drift = Scalar(1) / 20;
};

namespace detail {

inline Triangle next_bead(const Triangle& t, const NecklaceParams& p) {
  const Scalar t2 = p.half_tan * p.half_tan;
  const Scalar cos_a = (1 - t2) / (1 + t2);
  const Scalar sin_a = 2 * p.half_tan / (1 + t2);
  const Point3 foot = (t[0] + t[1]) / Scalar(2);
  const Point3 shift = (t[2] - foot) / Scalar(3) + Point3{p.drift, 0, 0};
  auto step = [&](const Point3& v) {
    const Point3 r = v - foot;
    return Point3{foot.x + cos_a * r.x - sin_a * r.y, foot.y + sin_a * r.x + cos_a * r.y,
                  foot.z + r.z} +
           shift;
  };
  return {step(t[0]), step(t[1]), step(t[2])};
}

}  // namespace detail

/// Rational necklace: three triangles, every pair Hopf-linked.
inline Linking necklace_rational(const NecklaceParams& params = {}) {
  using detail::pt;
  return detail::certified("necklace", [&] {
    const Triangle t0(pt(-1, 0, 0), pt(1, 0, 0), pt(0, 0, params.height));
    const Triangle t1 = detail::next_bead(t0, params);
    const Triangle t2 = detail::next_bead(t1, params);
    Linking link({t0, t1, t2});
    detail::certify(pairwise_parity_profile(link) == ParityProfile(1, 1, 1),
                    "necklace pairs must all be linked");
    return link;
  });
}

inline Linking make_canonical(CanonicalClass c) {
  switch (c) {
    case CanonicalClass::Unlink3: return unlink3();
    case CanonicalClass::Borromean: return borromean_certified();
    case CanonicalClass::HopfSplit: return hopf_split();
    case CanonicalClass::Chain3: return chain3();
    case CanonicalClass::Necklace: return necklace_rational();
  }
  throw std::invalid_argument("unknown canonical class");
}

}  // namespace trilink
