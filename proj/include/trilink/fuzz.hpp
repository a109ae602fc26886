#pragma once

// Randomized checks of the isotopy invariants.
//
// run_isotopy_fuzz walks a chain of random valid elementary moves and checks
// that the invariant signature never changes at generic steps.
// run_bordef_equivalence compares the two Borromean predicates on generated
// triples. Both are deterministic in their seed; reports serialize to JSON.

#include "trilink/canonical.hpp"
#include "trilink/classifier.hpp"
#include "trilink/io.hpp"
#include "trilink/moves.hpp"
#include "trilink/random.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trilink {

struct FuzzOptions {
  std::size_t moves = 500;
  std::uint64_t seed = 1;
  Scalar scale = Scalar(1) / 4;
  RandomMoveOptions move_options;
  std::size_t max_perturbation_moves = 64;
};

struct FuzzStep {
  std::size_t index = 0;              // 0 is the start linking
  std::optional<MoveSpec> move;       // move that produced this step
  bool generic = false;
  std::optional<ParityProfile> parity;
  bool borromean = false;
};

struct FuzzViolation {
  std::size_t step = 0;
  std::string expected;
  std::string observed;
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::size_t requested_moves = 0;
  std::string scale;
  std::string start_label;
  std::size_t attempted = 0;  // proposals drawn by rejection sampling
  std::size_t accepted = 0;   // moves applied, including final perturbation
  std::size_t perturbation_moves = 0;
  std::optional<Signature> reference;
  std::vector<FuzzStep> steps;
  std::optional<FuzzViolation> violation;
  std::optional<std::string> error;  // move generation exhausted, etc.
  double wall_seconds = 0;

  bool ok() const { return !violation && !error; }
};

namespace detail {

inline FuzzStep evaluate_step(const Linking& link, std::size_t index, std::optional<MoveSpec> move) {
  FuzzStep s;
  s.index = index;
  s.move = std::move(move);
  s.generic = is_generic(link);
  if (s.generic) {
    s.parity = pairwise_parity_profile(link);
    s.borromean = is_borromean(link);
  }
  return s;
}

}  // namespace detail

/// Applies `opts.moves` random valid moves from `start` (a 3-linking),
/// evaluating the parity profile and Borromean flag after every move. The
/// first generic step fixes the reference signature; any later generic step
/// that differs is a violation. A non-generic final state is perturbed with
/// extra valid moves so the chain ends on an evaluated step.
inline FuzzReport run_isotopy_fuzz(const Linking& start, const FuzzOptions& opts = {}) {
  detail::require_three(start);
  const auto t0 = std::chrono::steady_clock::now();
  FuzzReport report;
  report.seed = opts.seed;
  report.requested_moves = opts.moves;
  report.scale = to_string(opts.scale);
  report.start_label = std::string(to_string(classify3(start)));

  Rng rng(opts.seed);
  Linking current = start;
  auto record = [&](std::optional<MoveSpec> move) {
    FuzzStep step = detail::evaluate_step(current, report.steps.size(), std::move(move));
    if (step.generic && !report.violation) {
      const Signature sig{step.parity, step.borromean};
      if (!report.reference) report.reference = sig;
      else if (!(*report.reference == sig))
        report.violation = FuzzViolation{step.index, report.reference->str(), sig.str()};
    }
    report.steps.push_back(std::move(step));
  };

  auto advance = [&] {
    std::size_t used = 0;
    try {
      const MoveSpec m = random_move(current, rng, opts.scale, opts.move_options, &used);
      report.attempted += used;
      current = apply_move(current, m);
      ++report.accepted;
      record(m);
    } catch (const ExhaustedAttempts&) {
      report.attempted += used;
      throw;
    }
  };

  record(std::nullopt);
  try {
    for (std::size_t i = 0; i < opts.moves; ++i) advance();
    while (!report.steps.back().generic) {
      if (report.perturbation_moves >= opts.max_perturbation_moves)
        throw ExhaustedAttempts(opts.max_perturbation_moves);
      ++report.perturbation_moves;
      advance();
    }
  } catch (const ExhaustedAttempts& e) {
    report.error = e.what();
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

/// The linking reached at the end of a report's move chain.
inline Linking final_linking(const Linking& start, const FuzzReport& report) {
  std::vector<MoveSpec> moves;
  for (const auto& s : report.steps)
    if (s.move) moves.push_back(*s.move);
  return replay_moves(start, moves);
}

/// JSON report. Wall time is nondeterministic and is only included on
/// request, so that equal seeds give byte-identical default reports.
inline nlohmann::ordered_json to_json(const FuzzReport& r, bool include_timing = false) {
  nlohmann::ordered_json j;
  j["kind"] = "isotopy-fuzz";
  j["seed"] = r.seed;
  j["requested_moves"] = r.requested_moves;
  j["scale"] = r.scale;
  j["start_label"] = r.start_label;
  j["moves_attempted"] = r.attempted;
  j["moves_accepted"] = r.accepted;
  j["perturbation_moves"] = r.perturbation_moves;
  j["reference"] = r.reference ? r.reference->str() : "none";
  std::size_t generic_steps = 0;
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : r.steps) {
    nlohmann::ordered_json js;
    js["step"] = s.index;
    js["move"] = s.move ? serialize_move(*s.move) : "";
    js["generic"] = s.generic;
    if (s.generic) {
      ++generic_steps;
      js["parity"] = s.parity->str();
      js["borromean"] = s.borromean;
    }
    steps.push_back(std::move(js));
  }
  j["generic_steps"] = generic_steps;
  if (r.violation)
    j["violation"] = {{"step", r.violation->step},
                      {"expected", r.violation->expected},
                      {"observed", r.violation->observed}};
  else
    j["violation"] = nullptr;
  j["error"] = r.error ? nlohmann::ordered_json(*r.error) : nlohmann::ordered_json(nullptr);
  if (include_timing) j["wall_seconds"] = r.wall_seconds;
  j["steps"] = std::move(steps);
  return j;
}

// ---------------------------------------------------------------------------
// Borromean predicate equivalence

/// Uniform random triangle with coordinates on the grid (1/den)Z inside
/// [-extent, extent]^3, resampled until non-degenerate.
inline Triangle random_triangle(Rng& rng, const Scalar& extent, std::uint64_t den) {
  for (;;) {
    Point3 a = rng.unit_offset(den) * extent;
    Point3 b = rng.unit_offset(den) * extent;
    Point3 c = rng.unit_offset(den) * extent;
    if (!collinear(a, b, c)) return Triangle(a, b, c);
  }
}

/// Random 3-linking in a box, resampled until the outlines are disjoint.
inline Linking random_linking3(Rng& rng, const Scalar& extent = 1, std::uint64_t den = 16) {
  for (;;) {
    std::vector<Triangle> tris;
    for (int i = 0; i < 3; ++i) tris.push_back(random_triangle(rng, extent, den));
    try {
      return Linking(std::move(tris));
    } catch (const LinkingError&) {
    }
  }
}

/// Each vertex of `link` displaced by an independent offset in
/// [-amount, amount]^3 (not a move sequence), resampled until valid.
inline Linking jittered(const Linking& link, Rng& rng, const Scalar& amount, std::uint64_t den = 64) {
  for (;;) {
    std::vector<Triangle> tris;
    bool ok = true;
    for (const auto& t : link.triangles()) {
      std::array<Point3, 3> v;
      for (std::size_t k = 0; k < 3; ++k) v[k] = t[k] + rng.unit_offset(den) * amount;
      if (collinear(v[0], v[1], v[2])) {
        ok = false;
        break;
      }
      tris.emplace_back(v[0], v[1], v[2]);
    }
    if (!ok) continue;
    try {
      return Linking(std::move(tris));
    } catch (const LinkingError&) {
    }
  }
}

struct EquivalenceCase {
  std::size_t trial = 0;
  std::string source;
  bool borromean = false;
  bool reduced = false;
};

struct EquivalenceReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t borromean_count = 0;  // trials where both predicates hold
  std::vector<EquivalenceCase> discrepancies;
  std::vector<std::string> discrepancy_linkings;  // serialized witnesses
  std::size_t per_source[4] = {0, 0, 0, 0};

  bool ok() const { return discrepancies.empty(); }
};

inline constexpr const char* kEquivalenceSources[4] = {"canonical", "fuzz-descendant", "random",
                                                       "jittered-borromean"};

/// Generates `trials` triples (cycling through canonical constructors,
/// short random move chains from them, random triples in a box, and vertex
/// jitters of the Borromean triple) and compares is_borromean with
/// is_borromean_reduced on each. Trial i uses its own stream of `seed`.
inline EquivalenceReport run_bordef_equivalence(std::size_t trials, std::uint64_t seed) {
  EquivalenceReport report;
  report.seed = seed;
  report.trials = trials;

  std::vector<Linking> canon;
  for (auto c : kCanonicalClasses) canon.push_back(make_canonical(c));
  const Linking& borromean = canon[1];

  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = Rng::stream(seed, i);
    const std::size_t source = i % 4;
    const Linking& base = canon[(i / 4) % canon.size()];
    std::optional<Linking> link;
    switch (source) {
      case 0: {
        // Random reindexing of a canonical triple.
        std::vector<std::size_t> order{0, 1, 2};
        for (std::size_t k = 2; k > 0; --k) std::swap(order[k], order[rng.below(k + 1)]);
        link = base.permuted(order);
        break;
      }
      case 1: {
        Linking cur = base;
        const std::size_t n = 1 + rng.below(20);
        try {
          for (std::size_t k = 0; k < n; ++k) cur = apply_move(cur, random_move(cur, rng, Scalar(1) / 4));
        } catch (const ExhaustedAttempts&) {
        }
        link = cur;
        break;
      }
      case 2: link = random_linking3(rng); break;
      default: link = jittered(borromean, rng, Scalar(1) / 3); break;
    }
    ++report.per_source[source];
    const bool full = is_borromean(*link);
    const bool reduced = is_borromean_reduced(*link);
    if (full && reduced) ++report.borromean_count;
    if (full != reduced) {
      report.discrepancies.push_back({i, kEquivalenceSources[source], full, reduced});
      report.discrepancy_linkings.push_back(serialize_linking(*link));
    }
  }
  return report;
}

inline nlohmann::ordered_json to_json(const EquivalenceReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = "bordef-equivalence";
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["borromean_trials"] = r.borromean_count;
  nlohmann::ordered_json sources;
  for (std::size_t s = 0; s < 4; ++s) sources[kEquivalenceSources[s]] = r.per_source[s];
  j["trials_per_source"] = sources;
  auto d = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < r.discrepancies.size(); ++k) {
    const auto& c = r.discrepancies[k];
    d.push_back({{"trial", c.trial},
                 {"source", c.source},
                 {"is_borromean", c.borromean},
                 {"is_borromean_reduced", c.reduced},
                 {"linking", r.discrepancy_linkings[k]}});
  }
  j["discrepancies"] = std::move(d);
  return j;
}

}  // namespace trilink
