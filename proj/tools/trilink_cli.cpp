// trilink: command-line front end for triangle linking invariants.
//
// Exit codes: 0 ok, 1 violation or validation failure, 2 usage or parse error.

#include "trilink/trilink.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

using namespace trilink;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

Scalar parse_scalar_arg(const std::string& text, const char* what) {
  auto v = parse_rational(text);
  if (!v) throw UsageError(std::string("bad rational for ") + what + ": '" + text + "'");
  return *v;
}

std::string label_text(ClassLabel3 label) {
  std::string s(to_string(label));
  if (label == ClassLabel3::ZeroProfileNonBorromean) s += " (Unlink3 under Conjecture)";
  return s;
}

int cmd_classify(const std::string& file) {
  const Linking link = parse_linking(read_input(file));
  if (link.size() == 2) {
    const ClassLabel2 label = classify2(link[0], link[1]);
    std::cout << to_string(label) << '\n';
    std::cout << "parity=" << (label == ClassLabel2::NonGeneric ? "undefined" : (label == ClassLabel2::Hopf ? "1" : "0"))
              << '\n';
    return kExitOk;
  }
  const Signature sig = signature(link);
  std::cout << label_text(classify3(sig)) << '\n' << sig.str() << '\n';
  return kExitOk;
}

const char* kind_name(IntersectionProfile::Kind k) {
  switch (k) {
    case IntersectionProfile::Kind::Empty: return "empty";
    case IntersectionProfile::Kind::Points: return "points";
    case IntersectionProfile::Kind::ContainsSegment: return "segment";
    case IntersectionProfile::Kind::WholeOutline: return "whole-outline";
  }
  return "?";
}

int cmd_invariants(const std::string& file) {
  const Linking link = parse_linking(read_input(file));
  for (std::size_t i = 0; i < link.size(); ++i)
    for (std::size_t j = i + 1; j < link.size(); ++j) {
      std::cout << "parity(" << i << "," << j << ")=";
      try {
        std::cout << linking_parity(link[i], link[j]) << '\n';
      } catch (const NonGenericError&) {
        std::cout << "undefined (non-generic)\n";
      }
    }
  for (std::size_t i = 0; i < link.size(); ++i)
    for (std::size_t j = 0; j < link.size(); ++j) {
      if (i == j) continue;
      const auto p = outline_hull_profile(link[i], link[j]);
      std::cout << "profile(outline " << i << ", hull " << j << ")=" << kind_name(p.kind);
      if (p.kind == IntersectionProfile::Kind::Points) std::cout << ' ' << p.points.size();
      std::cout << '\n';
    }
  if (link.size() == 3) {
    try {
      std::cout << "parity_profile=" << pairwise_parity_profile(link).str() << '\n';
    } catch (const NonGenericError& e) {
      std::cout << "parity_profile=undefined (" << e.what() << ")\n";
    }
    std::cout << "triple_common_point=" << (triple_common_point(link[0], link[1], link[2]) ? "true" : "false")
              << '\n';
    std::cout << "is_borromean=" << (is_borromean(link) ? "true" : "false") << '\n';
    std::cout << "is_borromean_reduced=" << (is_borromean_reduced(link) ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_generate(const std::string& name, const std::string& out) {
  const auto c = canonical_from_name(name);
  if (!c) throw UsageError("unknown linking '" + name + "' (unlink, borromean, hopf-split, chain, necklace)");
  std::string text = "# canonical linking: " + name + "\n" + serialize_linking(make_canonical(*c));
  write_output(out, text);
  return kExitOk;
}

int cmd_move(const std::string& file, std::size_t target, std::size_t pivot,
             const std::vector<std::string>& apex, const std::string& out) {
  const Linking link = parse_linking(read_input(file));
  if (target >= link.size() || pivot >= 3) throw UsageError("target or pivot out of range");
  const MoveSpec m{target, pivot,
                   {parse_scalar_arg(apex[0], "apex x"), parse_scalar_arg(apex[1], "apex y"),
                    parse_scalar_arg(apex[2], "apex z")}};
  const MoveVerdict v = validate_move(link, m);
  std::cout << to_string(v) << '\n';
  if (!v.valid()) return kExitFailure;
  if (!out.empty()) write_output(out, serialize_linking(apply_move(link, m)));
  return kExitOk;
}

int cmd_fuzz(const std::string& file, std::size_t moves, std::uint64_t seed, const std::string& scale,
             bool timing, const std::string& out, const std::string& moves_out) {
  const Linking link = parse_linking(read_input(file));
  if (link.size() != 3) throw UsageError("fuzz needs a linking of 3 triangles");
  FuzzOptions opts;
  opts.moves = moves;
  opts.seed = seed;
  opts.scale = parse_scalar_arg(scale, "--scale");
  const FuzzReport report = run_isotopy_fuzz(link, opts);
  write_output(out, to_json(report, timing).dump(2) + "\n");
  if (!moves_out.empty()) {
    std::vector<MoveSpec> ms;
    for (const auto& s : report.steps)
      if (s.move) ms.push_back(*s.move);
    write_output(moves_out, serialize_moves(ms));
  }
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_bordef(std::size_t trials, std::uint64_t seed, const std::string& out) {
  const EquivalenceReport report = run_bordef_equivalence(trials, seed);
  write_output(out, to_json(report).dump(2) + "\n");
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_perturb(const std::string& file, std::uint64_t seed, const std::string& scale, const std::string& out,
                const std::string& moves_out) {
  const Linking link = parse_linking(read_input(file));
  Rng rng(seed);
  const Perturbation p = perturb_to_generic(link, rng, parse_scalar_arg(scale, "--scale"));
  write_output(out, serialize_linking(p.result));
  if (!moves_out.empty()) write_output(moves_out, serialize_moves(p.moves));
  return kExitOk;
}

int cmd_replay(const std::string& file, const std::string& moves_file, const std::string& out) {
  const Linking link = parse_linking(read_input(file));
  const auto moves = parse_moves(read_input(moves_file));
  write_output(out, serialize_linking(replay_moves(link, moves)));
  return kExitOk;
}

int cmd_export_obj(const std::string& file, const std::string& out) {
  write_output(out, export_obj(parse_linking(read_input(file))));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trilink: exact invariants of linkings of triangles in 3-space"};
  app.require_subcommand(1);

  std::string file, out, name, scale = "1/4", moves_out, moves_file;
  std::size_t target = 0, pivot = 0, moves = 500, trials = 1000;
  std::uint64_t seed = 1;
  bool timing = false;
  std::vector<std::string> apex;

  auto* classify = app.add_subcommand("classify", "Print the class label and invariant signature");
  classify->add_option("file", file, "Linking file ('-' for stdin)")->required();

  auto* invariants = app.add_subcommand("invariants", "Print parities, profiles and Borromean predicates");
  invariants->add_option("file", file, "Linking file ('-' for stdin)")->required();

  auto* generate = app.add_subcommand("generate", "Write a canonical linking");
  generate->add_option("name", name, "unlink | borromean | hopf-split | chain | necklace")->required();
  generate->add_option("-o,--output", out, "Output file (default stdout)");

  auto* move = app.add_subcommand("move", "Validate an elementary move and optionally apply it");
  move->add_option("file", file, "Linking file ('-' for stdin)")->required();
  move->add_option("--target", target, "Index of the moved triangle")->required();
  move->add_option("--pivot", pivot, "Index of the replaced vertex (0-2)")->required();
  move->add_option("--apex", apex, "New vertex: x y z as rational literals")->required()->expected(3);
  move->add_option("-o,--output", out, "Write the moved linking here when valid");

  auto* fuzz = app.add_subcommand("fuzz", "Random elementary moves; check invariants never change");
  fuzz->add_option("file", file, "Linking file of 3 triangles ('-' for stdin)")->required();
  fuzz->add_option("--moves", moves, "Number of moves")->capture_default_str();
  fuzz->add_option("--seed", seed, "RNG seed")->capture_default_str();
  fuzz->add_option("--scale", scale, "Apex offset bound (rational)")->capture_default_str();
  fuzz->add_flag("--timing", timing, "Include wall time in the report");
  fuzz->add_option("-o,--output", out, "Report file (default stdout)");
  fuzz->add_option("--moves-out", moves_out, "Write the applied move list here");

  auto* bordef = app.add_subcommand("bordef-check", "Compare the two Borromean predicates on generated triples");
  bordef->add_option("--trials", trials, "Number of triples")->capture_default_str();
  bordef->add_option("--seed", seed, "RNG seed")->capture_default_str();
  bordef->add_option("-o,--output", out, "Report file (default stdout)");

  auto* perturb = app.add_subcommand("perturb", "Apply random valid moves until every pair is generic");
  perturb->add_option("file", file, "Linking file ('-' for stdin)")->required();
  perturb->add_option("--seed", seed, "RNG seed")->capture_default_str();
  perturb->add_option("--scale", scale, "Apex offset bound (rational)")->capture_default_str();
  perturb->add_option("-o,--output", out, "Output linking (default stdout)");
  perturb->add_option("--moves-out", moves_out, "Write the applied move list here");

  auto* replay = app.add_subcommand("replay", "Apply a move list to a linking");
  replay->add_option("file", file, "Linking file")->required();
  replay->add_option("moves", moves_file, "Move list file")->required();
  replay->add_option("-o,--output", out, "Output linking (default stdout)");

  auto* obj = app.add_subcommand("export-obj", "Write outlines as OBJ polylines (lossy, for viewing)");
  obj->add_option("file", file, "Linking file ('-' for stdin)")->required();
  obj->add_option("-o,--output", out, "OBJ file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(file);
    if (*invariants) return cmd_invariants(file);
    if (*generate) return cmd_generate(name, out);
    if (*move) return cmd_move(file, target, pivot, apex, out);
    if (*fuzz) return cmd_fuzz(file, moves, seed, scale, timing, out, moves_out);
    if (*bordef) return cmd_bordef(trials, seed, out);
    if (*perturb) return cmd_perturb(file, seed, scale, out, moves_out);
    if (*replay) return cmd_replay(file, moves_file, out);
    if (*obj) return cmd_export_obj(file, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "invalid linking: " << e.what() << '\n';
    return kExitFailure;
  } catch (const InvalidMove& e) {
    std::cerr << e.what() << '\n';
    return kExitFailure;
  } catch (const ExhaustedAttempts& e) {
    std::cerr << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
