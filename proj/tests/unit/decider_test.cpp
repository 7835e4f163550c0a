#include <gtest/gtest.h>

#include "../support/helpers.hpp"

using namespace ncode;
using namespace testing_helpers;

namespace {

template <class T>
const T* find_cert(const Decision& d) {
  for (const auto& c : d.certificates)
    if (const auto* x = std::get_if<T>(&c)) return x;
  return nullptr;
}

void expect_replays(const NeuralCode& c, const Decision& d) {
  for (const auto& cert : d.certificates) EXPECT_TRUE(replay_certificate(c, cert)) << to_string(cert);
}

}  // namespace

TEST(Decide, C22) {
  auto c = code(kC22);
  auto d = decide(c);
  EXPECT_EQ(d.verdict, Verdict::Convex);
  const auto* t = find_cert<cert::TheoremNoLocalObstruction>(d);
  ASSERT_TRUE(t);
  ASSERT_TRUE(t->cls);
  EXPECT_EQ(t->cls->id, 22);
  expect_replays(c, d);
}

TEST(Decide, C24) {
  auto c = code(kC24);
  auto d = decide(c);
  EXPECT_EQ(d.verdict, Verdict::NonConvex);
  const auto* s = find_cert<cert::L24MinimalPoFSprocket>(d);
  ASSERT_TRUE(s);
  EXPECT_EQ(to_string(s->sprocket), "((3,6,5,1),(12,14))");
  expect_replays(c, d);
}

TEST(Decide, SingleFacet) {
  auto d = decide(code("123"));
  EXPECT_EQ(d.verdict, Verdict::Convex);
  EXPECT_TRUE(find_cert<cert::MaxIntersectionComplete>(d));
}

TEST(Decide, EmptyCode) { EXPECT_EQ(decide(NeuralCode()).verdict, Verdict::Convex); }

TEST(Decide, LocalObstructionComesFirst) {
  auto c = code("134,1357,257,356,35,57");
  auto d = decide(c);
  EXPECT_EQ(d.verdict, Verdict::NonConvex);
  const auto* o = find_cert<cert::LocalObstruction>(d);
  ASSERT_TRUE(o);
  EXPECT_EQ(o->face, w("13"));
  expect_replays(c, d);
}

TEST(Decide, MaxIntersectionComplete) {
  auto c = code(std::string(kC24) + ",1");
  auto d = decide(c);
  EXPECT_EQ(d.verdict, Verdict::Convex);
  EXPECT_TRUE(find_cert<cert::MaxIntersectionComplete>(d));
}

TEST(Decide, ThreeFacetsNonMinimalUsesMonotonicity) {
  auto c = code("134,1357,356,13,35,1");
  auto d = decide(c);
  EXPECT_EQ(d.verdict, Verdict::Convex);
  const auto* t = find_cert<cert::TheoremNoLocalObstruction>(d);
  ASSERT_TRUE(t);
  EXPECT_FALSE(t->cls);
  const auto* m = find_cert<cert::Monotonicity>(d);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->base, code("134,1357,356,13,35"));
  expect_replays(c, d);
}

TEST(Decide, L24MinimalWithoutPathOfFacets) {
  auto c = minimal_code(ws({"1235", "1246", "1347", "567"}));
  auto d = decide(c);
  // every facet intersection is mandatory without a path of facets, so completeness fires first
  EXPECT_EQ(d.verdict, Verdict::Convex);
  EXPECT_TRUE(find_cert<cert::L24MinimalPoFConvex>(d) || find_cert<cert::MaxIntersectionComplete>(d));
  expect_replays(c, d);
}

TEST(Decide, WheelTableCode) {
  auto d = decide(code(kWheelTable));
  EXPECT_EQ(d.verdict, Verdict::NonConvex);
  const auto* s = find_cert<cert::L24MinimalPoFSprocket>(d);
  ASSERT_TRUE(s);
  EXPECT_EQ(to_string(s->sprocket), "((2,6,4,1),(13,15))");
}

TEST(Decide, ConeOfC24) {
  EXPECT_EQ(decide(code(kD28)).verdict, Verdict::NonConvex);
  auto c = code(std::string(kD28) + ",7");
  auto d = decide(c);
  EXPECT_EQ(d.verdict, Verdict::NonConvex);
  expect_replays(c, d);
}

TEST(Decide, C26AsPrinted) {
  auto d = decide(code(kC26));
  EXPECT_EQ(d.verdict, Verdict::NonConvex);
  const auto* o = find_cert<cert::LocalObstruction>(d);
  ASSERT_TRUE(o);
  EXPECT_EQ(o->face, w("3"));
}

TEST(Decide, C26Corrected) {
  auto c = code(std::string(kC26) + ",3");
  auto d = decide(c);
  EXPECT_NE(d.verdict, Verdict::Convex);
  expect_replays(c, d);
}

TEST(Decide, DisconnectedNerveCombinesComponents) {
  auto bad = code(std::string(kC24) + ",7");
  auto d = decide(bad);
  EXPECT_EQ(d.verdict, Verdict::NonConvex);
  const auto* dd = find_cert<cert::DisconnectedDecomposition>(d);
  ASSERT_TRUE(dd);
  EXPECT_EQ(dd->components.size(), 2u);
  expect_replays(bad, d);

  auto good = code(std::string(kC22) + ",8");
  auto e = decide(good);
  EXPECT_EQ(e.verdict, Verdict::Convex);
  EXPECT_TRUE(find_cert<cert::DisconnectedDecomposition>(e));
}

TEST(Decide, ReplayRejectsForgedCertificates) {
  auto c22 = code(kC22);
  EXPECT_FALSE(replay_certificate(c22, cert::MaxIntersectionComplete{}));
  EXPECT_FALSE(replay_certificate(c22, cert::LocalObstruction{w("13")}));
  SprocketCandidate s{{w("3"), w("6"), w("5"), w("1")}, {w("12"), w("14")}};
  EXPECT_FALSE(replay_certificate(c22, cert::Sprocket{s}));
}

TEST(Decide, VerdictNames) {
  EXPECT_EQ(to_string(Verdict::Convex), "CONVEX");
  EXPECT_EQ(to_string(Verdict::NonConvex), "NONCONVEX");
  EXPECT_EQ(to_string(Verdict::Unknown), "UNKNOWN");
}
