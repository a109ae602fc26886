#pragma once

// Text formats.
//
// Linking file (exact, line oriented):
//
//   # comment (anywhere after '#')
//   version 1
//
//   x y z        <- three points per triangle, one point per line
//   x y z
//   x y z
//
//   x y z        <- triangles separated by one or more blank lines
//   ...
//
// Coordinates are integer or fraction literals ("3", "-7/4"). Move lists use
// one move per line: `move <target> <pivot> <x> <y> <z>`.

#include "trilink/linking.hpp"
#include "trilink/moves.hpp"

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trilink {

/// Malformed text: bad literal, wrong arity, missing header.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed text that does not describe a valid linking.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline constexpr int kFormatVersion = 1;

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;  // empty for blank lines
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  for (std::size_t number = 1;; ++number) {
    const auto nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::istringstream in{std::string(raw)};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    lines.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

inline Scalar parse_coordinate(const std::string& token, std::size_t line) {
  const auto v = parse_rational(token);
  if (!v) throw ParseError(line, "malformed rational literal '" + token + "'");
  return *v;
}

inline Point3 parse_point(const Line& line, std::size_t first = 0) {
  return {parse_coordinate(line.tokens[first], line.number),
          parse_coordinate(line.tokens[first + 1], line.number),
          parse_coordinate(line.tokens[first + 2], line.number)};
}

inline std::string point_text(const Point3& p) {
  return to_string(p.x) + " " + to_string(p.y) + " " + to_string(p.z);
}

}  // namespace detail

/// Parses a linking file; throws ParseError or ValidationError with the line
/// number of the offending point or triangle.
inline Linking parse_linking(std::string_view text) {
  const auto lines = detail::tokenize(text);
  std::size_t i = 0;
  while (i < lines.size() && lines[i].tokens.empty()) ++i;
  if (i == lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number, "missing 'version' header");
  const auto& header = lines[i];
  if (header.tokens.size() != 2 || header.tokens[0] != "version")
    throw ParseError(header.number, "expected 'version " + std::to_string(kFormatVersion) + "'");
  if (header.tokens[1] != std::to_string(kFormatVersion))
    throw ParseError(header.number, "unsupported format version '" + header.tokens[1] + "'");

  struct Group {
    std::size_t first_line;
    std::vector<Point3> points;
  };
  std::vector<Group> groups;
  bool in_group = false;
  for (++i; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.empty()) {
      in_group = false;
      continue;
    }
    if (line.tokens.size() != 3)
      throw ParseError(line.number, "expected 3 coordinates, got " + std::to_string(line.tokens.size()));
    if (!in_group) groups.push_back({line.number, {}});
    in_group = true;
    groups.back().points.push_back(detail::parse_point(line));
    if (groups.back().points.size() > 3)
      throw ParseError(line.number, "triangle has more than 3 points");
  }

  std::vector<Triangle> triangles;
  for (const auto& g : groups) {
    if (g.points.size() != 3)
      throw ParseError(g.first_line, "triangle has " + std::to_string(g.points.size()) + " points, expected 3");
    try {
      triangles.emplace_back(g.points[0], g.points[1], g.points[2]);
    } catch (const std::invalid_argument&) {
      throw ValidationError(g.first_line, "degenerate triangle (collinear vertices)");
    }
  }
  try {
    return Linking(std::move(triangles));
  } catch (const LinkingError& e) {
    const std::size_t line =
        groups.empty() ? header.number : groups[std::min(e.second(), groups.size() - 1)].first_line;
    throw ValidationError(line, e.what());
  }
}

/// Canonical text of a linking; parse_linking(serialize_linking(L)) == L.
inline std::string serialize_linking(const Linking& link) {
  std::string out = "version " + std::to_string(kFormatVersion) + "\n";
  for (const auto& t : link.triangles()) {
    out += "\n";
    for (const auto& p : t.vertices()) out += detail::point_text(p) + "\n";
  }
  return out;
}

inline std::string serialize_move(const MoveSpec& m) {
  return "move " + std::to_string(m.target) + " " + std::to_string(m.pivot) + " " +
         detail::point_text(m.new_apex);
}

inline std::string serialize_moves(const std::vector<MoveSpec>& moves) {
  std::string out;
  for (const auto& m : moves) out += serialize_move(m) + "\n";
  return out;
}

inline std::vector<MoveSpec> parse_moves(std::string_view text) {
  std::vector<MoveSpec> moves;
  for (const auto& line : detail::tokenize(text)) {
    if (line.tokens.empty()) continue;
    if (line.tokens.size() != 6 || line.tokens[0] != "move")
      throw ParseError(line.number, "expected 'move <target> <pivot> <x> <y> <z>'");
    MoveSpec m;
    for (std::size_t k : {1u, 2u}) {
      const auto& tok = line.tokens[k];
      if (!detail::all_digits(tok) || tok.size() > 9) throw ParseError(line.number, "bad index '" + tok + "'");
      (k == 1 ? m.target : m.pivot) = std::stoul(tok);
    }
    m.new_apex = detail::parse_point(line, 3);
    moves.push_back(std::move(m));
  }
  return moves;
}

/// Wavefront OBJ with each outline as a closed polyline. Coordinates are
/// rounded to double: for viewing only, not an exact representation.
inline std::string export_obj(const Linking& link) {
  std::ostringstream out;
  out << "# triangle linking outlines\n"
      << "# VISUALIZATION ONLY: coordinates rounded to double precision, not exact\n";
  out << std::setprecision(17);
  for (const auto& t : link.triangles())
    for (const auto& p : t.vertices())
      out << "v " << to_double(p.x) << ' ' << to_double(p.y) << ' ' << to_double(p.z) << '\n';
  for (std::size_t i = 0; i < link.size(); ++i) {
    const std::size_t base = 3 * i + 1;
    out << "o triangle_" << i << '\n'
        << "l " << base << ' ' << base + 1 << ' ' << base + 2 << ' ' << base << '\n';
  }
  return out.str();
}

}  // namespace trilink
