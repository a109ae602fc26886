#include "trilink/fuzz.hpp"
#include "trilink/io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace trilink {
namespace {

Point3 P(const Scalar& x, const Scalar& y, const Scalar& z) { return {x, y, z}; }

template <class E>
std::size_t error_line(std::string_view text) {
  try {
    parse_linking(text);
  } catch (const E& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return 0;
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Scalar(1) / 2);
  EXPECT_EQ(parse_rational("-7"), Scalar(-7));
  EXPECT_EQ(parse_rational("+4/2"), Scalar(2));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("0.5"));
  EXPECT_FALSE(parse_rational("1/-2"));
  EXPECT_FALSE(parse_rational(""));
  EXPECT_FALSE(parse_rational("/3"));
  EXPECT_EQ(to_string(Scalar(-6) / 4), "-3/2");
  EXPECT_EQ(to_string(Scalar(5)), "5");
  const Scalar big = parse_rational("123456789012345678901234567891/7").value();
  EXPECT_EQ(to_string(big), "123456789012345678901234567891/7");
}

TEST(Format, ParsesCommentsAndBlankLines) {
  const Linking link = parse_linking(
      "# two triangles\n"
      "version 1\n"
      "\n"
      "0 0 0   # origin\n"
      "4 0 0\n"
      "0 4 0\n"
      "\n\n"
      "1 1 -1\n"
      "1 1 1\n"
      "1 -3 2\n");
  ASSERT_EQ(link.size(), 2u);
  EXPECT_EQ(link[1][2], P(1, -3, 2));
}

TEST(Format, RoundTripsCanonical) {
  for (auto c : kCanonicalClasses) {
    const Linking link = make_canonical(c);
    const std::string text = serialize_linking(link);
    EXPECT_EQ(parse_linking(text), link);
    EXPECT_EQ(serialize_linking(parse_linking(text)), text);
  }
}

TEST(Format, RoundTripsRandom) {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const Linking link = jittered(necklace_rational(), rng, Scalar(1) / 7, 1 + rng.below(1000));
    EXPECT_EQ(parse_linking(serialize_linking(link)), link);
  }
}

TEST(Format, ParseErrorsCarryLines) {
  EXPECT_EQ(error_line<ParseError>("version 1\n0 0 0\n1 0 0\n0 1/0 0\n"), 4u);
  EXPECT_EQ(error_line<ParseError>("version 1\n0 0 0\n1 0 x\n0 1 0\n"), 3u);
  EXPECT_EQ(error_line<ParseError>("version 1\n0 0 0 0\n"), 2u);
  EXPECT_EQ(error_line<ParseError>("0 0 0\n"), 1u);
  EXPECT_EQ(error_line<ParseError>("version 2\n"), 1u);
  EXPECT_EQ(error_line<ParseError>("version 1\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n"), 5u);
  EXPECT_EQ(error_line<ParseError>("version 1\n\n0 0 0\n1 0 0\n\n0 1 0\n"), 3u);
  EXPECT_EQ(error_line<ParseError>(""), 1u);
}

TEST(Format, ValidationErrorsCarryLines) {
  // Shared vertex: outlines meet.
  EXPECT_EQ(error_line<ValidationError>("version 1\n0 0 0\n1 0 0\n0 1 0\n\n0 0 0\n0 0 1\n1 1 1\n"), 6u);
  // Collinear vertices.
  EXPECT_EQ(error_line<ValidationError>("version 1\n0 0 0\n1 0 0\n2 0 0\n\n5 5 5\n6 5 5\n5 6 5\n"), 2u);
  // One triangle is not a linking.
  EXPECT_EQ(error_line<ValidationError>("version 1\n0 0 0\n1 0 0\n0 1 0\n"), 2u);
}

TEST(Moves, TextRoundTrip) {
  const std::vector<MoveSpec> moves{{0, 2, P(Scalar(1) / 3, -2, 0)}, {2, 0, P(5, 6, Scalar(-7) / 9)}};
  const std::string text = serialize_moves(moves);
  EXPECT_EQ(text, "move 0 2 1/3 -2 0\nmove 2 0 5 6 -7/9\n");
  EXPECT_EQ(parse_moves(text), moves);
  EXPECT_THROW(parse_moves("move 0 x 1 2 3\n"), ParseError);
  EXPECT_THROW(parse_moves("move 0 1 2 3\n"), ParseError);
}

TEST(Obj, OneClosedPolylinePerTriangle) {
  const std::string obj = export_obj(chain3());
  EXPECT_NE(obj.find("VISUALIZATION ONLY"), std::string::npos);
  std::istringstream in(obj);
  std::string line;
  int v = 0, l = 0;
  while (std::getline(in, line)) {
    v += line.rfind("v ", 0) == 0;
    l += line.rfind("l ", 0) == 0;
  }
  EXPECT_EQ(v, 9);
  EXPECT_EQ(l, 3);
  EXPECT_NE(obj.find("l 4 5 6 4"), std::string::npos);
}

TEST(Fixtures, CommittedFilesMatchConstructors) {
  for (auto c : kCanonicalClasses) {
    const std::string path = std::string(TRILINK_FIXTURE_DIR) + "/" + std::string(fixture_name(c)) + ".lnk";
    std::ifstream in(path);
    ASSERT_TRUE(in) << path;
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(parse_linking(buf.str()), make_canonical(c)) << path;
  }
}

}  // namespace
}  // namespace trilink
