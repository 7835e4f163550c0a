#include <gtest/gtest.h>

#include <random>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace ncode;
using namespace testing_helpers;

namespace {

Polygon rect(int x0, int y0, int x1, int y1) {
  return Polygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

Built must_build(const NeuralCode& c) {
  auto b = build_realization(c);
  if (!b.built) throw std::runtime_error("not covered: " + to_string(b.reason));
  return *b.built;
}

std::set<oracle::Word> words_of(const NeuralCode& c) {
  std::set<oracle::Word> out;
  for (auto w : c.codewords()) out.insert(w.bits());
  return out;
}

}  // namespace

TEST(Geometry, Rationals) {
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_ANY_THROW(parse_rational("1/0"));
}

TEST(Geometry, PolygonDefects) {
  EXPECT_FALSE(polygon_defect(rect(0, 0, 1, 1)));
  Polygon cw{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
  EXPECT_TRUE(polygon_defect(cw));
  Polygon collinear{{{0, 0}, {1, 0}, {2, 0}, {1, 1}}};
  EXPECT_TRUE(polygon_defect(collinear));
  EXPECT_EQ(twice_area(rect(0, 0, 2, 3)), 12);
}

TEST(Geometry, Hull) {
  auto h = convex_hull({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 0}});
  EXPECT_EQ(h.vertices.size(), 4u);
  EXPECT_FALSE(polygon_defect(h));
}

TEST(CodeOfRealization, DisjointIntervals) {
  Realization r{1, {{1, Interval{0, 1}}, {2, Interval{2, 3}}}};
  EXPECT_EQ(code_of_realization(r), code("1,2"));
}

TEST(CodeOfRealization, TouchingIntervalsDoNotOverlap) {
  Realization r{1, {{1, Interval{0, 1}}, {2, Interval{1, 2}}}};
  EXPECT_EQ(code_of_realization(r), code("1,2"));
}

TEST(CodeOfRealization, OverlappingSquares) {
  Realization r{2, {{1, rect(0, 0, 2, 2)}, {2, rect(1, 0, 3, 2)}}};
  EXPECT_EQ(code_of_realization(r), code("1,12,2"));
}

TEST(CodeOfRealization, CornerContactIsEmpty) {
  Realization r{2, {{1, rect(0, 0, 1, 1)}, {2, rect(1, 1, 2, 2)}}};
  EXPECT_EQ(code_of_realization(r), code("1,2"));
}

TEST(CodeOfRealization, SmallRandomFamiliesMatchOracles) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<long, long>> ivs;
    Realization r{1, {}};
    for (int j = 0; j < 4; ++j) {
      long a = long(rng() % 8), b = a + 1 + long(rng() % 4);
      ivs.push_back({a, b});
      r.regions[j + 1] = Interval{Rational(a), Rational(b)};
    }
    EXPECT_EQ(words_of(code_of_realization(r)), oracle::intervals_code(ivs));
  }
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::array<int, 4>> rects;
    Realization r{2, {}};
    for (int j = 0; j < 3; ++j) {
      int x = int(rng() % 5), y = int(rng() % 5);
      int x1 = x + 1 + int(rng() % 3), y1 = y + 1 + int(rng() % 3);
      rects.push_back({x, y, x1, y1});
      r.regions[j + 1] = rect(x, y, x1, y1);
    }
    EXPECT_EQ(words_of(code_of_realization(r)), oracle::rectangles_code(rects));
  }
}

TEST(Build, PathOfFacetsChain) {
  auto target = code("134,1357,356,13,35");
  auto b = must_build(target);
  EXPECT_EQ(b.tag.kind, Construction::PoFChain1D);
  EXPECT_EQ(b.realization.dimension, 1);
  EXPECT_EQ(code_of_realization(b.realization), target);
  // order 134 | 13 | 1357 | 35 | 356: neuron 4 lies left of 7, which lies left of 6
  const auto& r = b.realization.regions;
  const auto& i4 = std::get<Interval>(r.at(4));
  const auto& i7 = std::get<Interval>(r.at(7));
  const auto& i6 = std::get<Interval>(r.at(6));
  EXPECT_TRUE((i4.hi <= i7.lo && i7.hi <= i6.lo) || (i6.hi <= i7.lo && i7.hi <= i4.lo));
}

TEST(Build, RunningExamples) {
  for (const char* text : {kC22, kC18a, kC18b}) {
    auto target = code(text);
    auto b = must_build(target);
    auto v = verify_realization(b.realization, target);
    EXPECT_TRUE(v.ok) << text;
    EXPECT_TRUE(v.missing.empty() && v.extra.empty());
  }
  EXPECT_EQ(must_build(code(kC22)).tag.kind, Construction::L22Case2b);
  EXPECT_EQ(must_build(code(kC18a)).realization.dimension, 1);
  EXPECT_EQ(must_build(code(kC18b)).tag.kind, Construction::L18Case2);
}

TEST(Build, Preconditions) {
  EXPECT_THROW(build_realization(code(kC24)), PreconditionError);
  // convex but not minimal
  EXPECT_EQ(build_realization(code("134,1357,356,13,35,1")).reason, NotCoveredReason::NotMinimal);
  auto spare = NeuralCode(ws({"1", "2"}), 3);
  auto b = must_build(spare);
  EXPECT_FALSE(b.realization.regions.count(3));
  EXPECT_TRUE(verify_realization(b.realization, spare).ok);
}

TEST(Build, DisconnectedGlue) {
  auto target = code(std::string(kC22) + ",89");
  auto b = must_build(target);
  EXPECT_EQ(b.tag.kind, Construction::DisconnectedGlue);
  EXPECT_TRUE(verify_realization(b.realization, target).ok);
}

TEST(Verify, ChainIsNotC22) {
  auto chain = must_build(code("134,1357,356,13,35")).realization;
  auto v = verify_realization(chain, code(kC22));
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.missing, ws({"57", "257"}));
  EXPECT_TRUE(v.extra.empty());
}

TEST(Verify, ClockwisePolygonRejected) {
  Realization r{2, {{1, Polygon{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}}}};
  auto v = verify_realization(r, code("1"));
  EXPECT_FALSE(v.ok);
  ASSERT_FALSE(v.problems.empty());
  EXPECT_EQ(v.problems.front().neuron, 1);
}

TEST(Json, RoundTrip) {
  auto r = must_build(code(kC22)).realization;
  EXPECT_EQ(realization_from_json(realization_to_json(r)), r);
  EXPECT_ANY_THROW(realization_from_json("{\"dimension\": 1}"));
  EXPECT_ANY_THROW(realization_from_json("not json"));
}

TEST(Svg, EmitsOneShapePerRegion) {
  auto svg = realization_to_svg(must_build(code(kC22)).realization);
  std::size_t count = 0;
  for (std::size_t p = svg.find("<polygon"); p != std::string::npos; p = svg.find("<polygon", p + 1)) ++count;
  EXPECT_EQ(count, 7u);
  EXPECT_EQ(svg.rfind("</svg>"), svg.size() - 7);
}
