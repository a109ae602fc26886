#pragma once

// Elementary moves: replace vertex C of a triangle ABC by C' (off line AB)
// provided the swept hulls <ACC'> and <BCC'> avoid every other outline.

#include "trilink/invariants.hpp"
#include "trilink/linking.hpp"
#include "trilink/random.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trilink {

struct MoveSpec {
  std::size_t target = 0;  // index of the moved triangle
  std::size_t pivot = 0;   // index of the replaced vertex (plays the role of C)
  Point3 new_apex;

  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

struct MoveVerdict {
  enum class Kind { Valid, ApexOnLineAB, SweepHitsOutline, ResultNotDisjoint };

  Kind kind = Kind::Valid;
  std::size_t other = 0;  // triangle hit by the sweep, for SweepHitsOutline

  bool valid() const { return kind == Kind::Valid; }
  friend bool operator==(const MoveVerdict&, const MoveVerdict&) = default;
};

inline std::string to_string(const MoveVerdict& v) {
  switch (v.kind) {
    case MoveVerdict::Kind::Valid: return "Valid";
    case MoveVerdict::Kind::ApexOnLineAB: return "Invalid(ApexOnLineAB)";
    case MoveVerdict::Kind::SweepHitsOutline:
      return "Invalid(SweepHitsOutline(" + std::to_string(v.other) + "))";
    case MoveVerdict::Kind::ResultNotDisjoint: return "Invalid(ResultNotDisjoint)";
  }
  return "?";
}

class InvalidMove : public std::invalid_argument {
 public:
  explicit InvalidMove(const MoveVerdict& v) : std::invalid_argument("invalid move: " + to_string(v)) {}
};

class ExhaustedAttempts : public std::runtime_error {
 public:
  explicit ExhaustedAttempts(std::size_t attempts)
      : std::runtime_error("no valid move found in " + std::to_string(attempts) + " attempts") {}
};

namespace detail {

inline void check_range(const Linking& link, const MoveSpec& m) {
  if (m.target >= link.size() || m.pivot >= 3) throw std::out_of_range("move target/pivot out of range");
}

inline Triangle moved_triangle(const Linking& link, const MoveSpec& m) {
  std::array<Point3, 3> v = link[m.target].vertices();
  v[m.pivot] = m.new_apex;
  return Triangle(v[0], v[1], v[2]);
}

}  // namespace detail

/// Checks the move conditions in order: apex off line AB, swept hulls
/// disjoint from every other outline, resulting linking disjoint.
inline MoveVerdict validate_move(const Linking& link, const MoveSpec& m) {
  detail::check_range(link, m);
  const Triangle& t = link[m.target];
  const Point3& a = t[(m.pivot + 1) % 3];
  const Point3& b = t[(m.pivot + 2) % 3];
  const Point3& c = t[m.pivot];
  const Point3& c2 = m.new_apex;

  if (collinear(a, b, c2)) return {MoveVerdict::Kind::ApexOnLineAB, 0};

  for (std::size_t k = 0; k < link.size(); ++k) {
    if (k == m.target) continue;
    for (std::size_t e = 0; e < 3; ++e) {
      const Segment edge = link[k].edge(e);
      if (segment_meets_hull3(edge, a, c, c2) || segment_meets_hull3(edge, b, c, c2))
        return {MoveVerdict::Kind::SweepHitsOutline, k};
    }
  }

  const Triangle moved = detail::moved_triangle(link, m);
  for (std::size_t k = 0; k < link.size(); ++k)
    if (k != m.target && outlines_intersect(moved, link[k]))
      return {MoveVerdict::Kind::ResultNotDisjoint, k};
  return {};
}

/// Applies a move; throws InvalidMove unless validate_move accepts it.
inline Linking apply_move(const Linking& link, const MoveSpec& m) {
  const MoveVerdict v = validate_move(link, m);
  if (!v.valid()) throw InvalidMove(v);
  return link.with_triangle(m.target, detail::moved_triangle(link, m));
}

/// The move that undoes m when applied to the result of m.
inline MoveSpec reverse_move(const Linking& before, const MoveSpec& m) {
  detail::check_range(before, m);
  return {m.target, m.pivot, before[m.target][m.pivot]};
}

struct RandomMoveOptions {
  std::size_t attempts = 256;
  std::uint64_t denominator = std::uint64_t{1} << 16;
};

/// Rejection-samples a valid move: uniform target and pivot, apex shifted by
/// an offset with coordinates on a grid of step scale/denominator inside
/// [-scale, scale]. Deterministic in the Rng state. `attempts_used`, when
/// given, receives the number of proposals drawn.
inline MoveSpec random_move(const Linking& link, Rng& rng, const Scalar& scale,
                            const RandomMoveOptions& opts = {},
                            std::size_t* attempts_used = nullptr) {
  for (std::size_t i = 0; i < opts.attempts; ++i) {
    MoveSpec m;
    m.target = static_cast<std::size_t>(rng.below(link.size()));
    m.pivot = static_cast<std::size_t>(rng.below(3));
    m.new_apex = link[m.target][m.pivot] + rng.unit_offset(opts.denominator) * scale;
    if (validate_move(link, m).valid()) {
      if (attempts_used) *attempts_used = i + 1;
      return m;
    }
  }
  if (attempts_used) *attempts_used = opts.attempts;
  throw ExhaustedAttempts(opts.attempts);
}

struct Perturbation {
  Linking result;
  std::vector<MoveSpec> moves;
};

/// Applies random valid moves until every pair is generic. The returned move
/// list replays from `link` to `result`.
inline Perturbation perturb_to_generic(const Linking& link, Rng& rng, const Scalar& scale,
                                       std::size_t max_moves = 64,
                                       const RandomMoveOptions& opts = {}) {
  Perturbation out{link, {}};
  while (!is_generic(out.result)) {
    if (out.moves.size() >= max_moves) throw ExhaustedAttempts(max_moves);
    const MoveSpec m = random_move(out.result, rng, scale, opts);
    out.result = apply_move(out.result, m);
    out.moves.push_back(m);
  }
  return out;
}

/// Applies a move list in order; throws InvalidMove at the first bad step.
inline Linking replay_moves(Linking link, const std::vector<MoveSpec>& moves) {
  for (const auto& m : moves) link = apply_move(link, m);
  return link;
}

}  // namespace trilink
