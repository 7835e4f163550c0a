#include <gtest/gtest.h>

#include <algorithm>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace ncode;
using namespace testing_helpers;

namespace {

SimplicialComplex complex_of(int k, std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<VertexSet> fs;
  for (auto f : facets) fs.push_back(VertexSet(f));
  return SimplicialComplex(k, fs);
}

std::vector<Codeword> sorted(std::vector<Codeword> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Nerve, RunningExamples) {
  auto n22 = code_nerve(maximal_codewords(code(kC22)));
  // facets in canonical order: 134, 257, 356, 1357
  EXPECT_EQ(classify_small_complex(n22).cls.id, 22);
  EXPECT_EQ(n22.dimension(), 2);
  auto n24 = code_nerve(maximal_codewords(code(kC24)));
  auto cl = classify_small_complex(n24);
  EXPECT_EQ(cl.cls.id, 24);
  EXPECT_FALSE(cl.contractible);
  EXPECT_EQ(n24.euler_characteristic(), -1);
  EXPECT_EQ(classify_small_complex(code_nerve(ws({"12"}))).cls.id, 1);
}

TEST(Nerve, Edges) {
  auto n = code_nerve(maximal_codewords(code(kC24)));
  // 123, 145, 356, 1246: triangle {123,145,1246} and 356 meets each of them
  EXPECT_EQ(n.facets().size(), 4u);
  EXPECT_TRUE(n.has_face(VertexSet{1, 2, 4}));
  EXPECT_FALSE(n.has_face(VertexSet{1, 3, 4}));
}

TEST(Link, FacetSets) {
  auto f24 = maximal_codewords(code(kC24));
  EXPECT_EQ(sorted(link_facet_sets(f24, w("1"))), ws({"23", "45", "246"}));
  auto f22 = maximal_codewords(code(kC22));
  EXPECT_EQ(sorted(link_facet_sets(f22, w("3"))), ws({"14", "56", "157"}));
  EXPECT_EQ(link_facet_sets(f24, w("356")), std::vector<Codeword>{Codeword{}});
}

TEST(Classify, SmallExamples) {
  auto hollow = classify_small_complex(complex_of(3, {{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_EQ(hollow.cls.id, 7);
  EXPECT_FALSE(hollow.contractible);
  auto filled = classify_small_complex(complex_of(3, {{1, 2, 3}}));
  EXPECT_EQ(filled.cls.id, 8);
  EXPECT_TRUE(filled.contractible);
  EXPECT_TRUE(is_contractible_small(complex_of(1, {{1}})));
  EXPECT_FALSE(is_contractible_small(complex_of(2, {{1}, {2}})));
  EXPECT_TRUE(is_contractible_small(complex_of(3, {{1, 2}, {2, 3}})));
}

TEST(Classify, ReferenceTableIsConsistent) {
  for (int id = 1; id <= kNerveClassCount; ++id) {
    const auto& ref = reference_complex({id});
    auto cl = classify_small_complex(ref);
    EXPECT_EQ(cl.cls.id, id);
    EXPECT_EQ(ref.relabeled(cl.relabeling), ref);
  }
}

TEST(Classify, RejectsLargeComplexes) {
  EXPECT_ANY_THROW(classify_small_complex(complex_of(5, {{1, 2, 3, 4, 5}})));
}

TEST(Complex, EulerAndConnectivityAgreeWithOracle) {
  for (int id = 1; id <= kNerveClassCount; ++id) {
    const auto& ref = reference_complex({id});
    std::vector<oracle::Word> fs;
    for (auto f : ref.facets()) fs.push_back(f.bits());
    EXPECT_EQ(ref.euler_characteristic(), oracle::euler(fs)) << id;
    EXPECT_EQ(ref.connected(), oracle::connected(fs)) << id;
  }
}

TEST(Collapse, Examples) {
  EXPECT_EQ(collapse_to_point(complex_of(3, {{1, 2, 3}})), Collapse::Collapsible);
  EXPECT_EQ(collapse_to_point(complex_of(3, {{1, 2}, {2, 3}, {1, 3}})), Collapse::NotCollapsible);
}

TEST(LinkContractible, Examples) {
  auto f24 = maximal_codewords(code(kC24));
  EXPECT_TRUE(is_link_contractible(f24, w("1")));
  EXPECT_FALSE(is_link_contractible(f24, w("12")));
  auto f22 = maximal_codewords(code(kC22));
  EXPECT_TRUE(is_link_contractible(f22, w("3")));
}

TEST(Mandatory, Examples) {
  auto m24 = mandatory_faces(maximal_codewords(code(kC24)));
  EXPECT_EQ(m24.faces, ws({"3", "5", "6", "12", "14", "123", "145", "356", "1246"}));
  EXPECT_TRUE(m24.indeterminate.empty());
  auto m22 = mandatory_faces(maximal_codewords(code(kC22)));
  EXPECT_EQ(m22.faces, ws({"13", "35", "57", "134", "257", "356", "1357"}));
  EXPECT_EQ(mandatory_faces(ws({"123"})).faces, ws({"123"}));
}

TEST(MinimalCode, Examples) {
  auto c24 = code(kC24);
  EXPECT_EQ(minimal_code(maximal_codewords(c24)), c24);
  EXPECT_EQ(minimal_code(ws({"134", "1357", "356"})), code("134,1357,356,13,35"));
  EXPECT_EQ(minimal_code(ws({"12"})), code("12"));
}

TEST(LocalObstruction, Examples) {
  EXPECT_FALSE(has_local_obstruction(code(kC24)));
  EXPECT_FALSE(has_local_obstruction(code(kC22)));
  EXPECT_EQ(has_local_obstruction(code("134,1357,257,356,35,57")), w("13"));
  EXPECT_EQ(has_local_obstruction(code(kC26)), w("3"));
}

TEST(PathOfFacets, Examples) {
  EXPECT_EQ(path_of_facets(w("123"), w("1246"), w("145")), (PathOfFacets{1, 2, 3}));
  EXPECT_EQ(path_of_facets(w("134"), w("1357"), w("356")), (PathOfFacets{1, 2, 3}));
  EXPECT_FALSE(path_of_facets(w("12"), w("13"), w("23")));
}

TEST(PathOfFacets, MiddleFacetVaries) {
  // (F1 & F2) - F3 empty: middle is F3
  EXPECT_EQ(path_of_facets(w("134"), w("356"), w("1357")), (PathOfFacets{1, 3, 2}));
  EXPECT_EQ(path_of_facets(w("1357"), w("134"), w("356")), (PathOfFacets{2, 1, 3}));
}
