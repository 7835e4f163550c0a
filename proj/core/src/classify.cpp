#include "ncode/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncode {

namespace {

struct Reference {
  int k;
  std::vector<std::vector<int>> facets;
};

// Vertices stand for facets F1..F4 of a code.
const std::array<Reference, kNerveClassCount> kReferences = {{
    {1, {{1}}},
    {2, {{1}, {2}}},
    {2, {{1, 2}}},
    {3, {{1}, {2}, {3}}},
    {3, {{1, 2}, {3}}},
    {3, {{1, 2}, {1, 3}}},
    {3, {{1, 2}, {1, 3}, {2, 3}}},
    {3, {{1, 2, 3}}},
    {4, {{1}, {2}, {3}, {4}}},
    {4, {{1, 2}, {3}, {4}}},
    {4, {{1, 2}, {1, 3}, {4}}},
    {4, {{1, 2}, {3, 4}}},
    {4, {{1, 2}, {1, 3}, {3, 4}}},
    {4, {{1, 2}, {1, 3}, {1, 4}}},
    {4, {{1, 2}, {1, 3}, {2, 3}, {4}}},
    {4, {{1, 2, 3}, {4}}},
    {4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}}},
    {4, {{1, 2, 3}, {2, 4}}},
    {4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}},
    {4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}},
    {4, {{1, 2, 3}, {2, 4}, {3, 4}}},
    {4, {{1, 2, 3}, {2, 3, 4}}},
    {4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
    {4, {{1, 2, 3}, {1, 4}, {2, 4}, {3, 4}}},
    {4, {{1, 2, 3}, {1, 3, 4}, {2, 4}}},
    {4, {{1, 2, 3}, {1, 3, 4}, {2, 3, 4}}},
    {4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}},
    {4, {{1, 2, 3, 4}}},
}};

// Bit s of the mask is set when vertex subset s (as a 4-bit word) is a face.
std::uint16_t face_mask(const SimplicialComplex& c) {
  std::uint16_t mask = 0;
  for (unsigned s = 1; s < 16; ++s)
    if (c.has_face(VertexSet(s))) mask |= std::uint16_t(1u << s);
  return mask;
}

std::uint16_t permute_mask(std::uint16_t mask, const std::vector<int>& perm) {
  std::uint16_t out = 0;
  for (unsigned s = 1; s < 16; ++s) {
    if (!(mask & (1u << s))) continue;
    unsigned t = 0;
    for (unsigned v = 0; v < perm.size(); ++v)
      if (s & (1u << v)) t |= 1u << (perm[v] - 1);
    out |= std::uint16_t(1u << t);
  }
  return out;
}

struct Table {
  std::array<SimplicialComplex, kNerveClassCount> complexes;
  std::array<std::uint16_t, kNerveClassCount> masks{};
  std::array<bool, kNerveClassCount> contractible{};

  Table() {
    for (int i = 0; i < kNerveClassCount; ++i) {
      const Reference& r = kReferences[i];
      std::vector<VertexSet> facets;
      for (const auto& f : r.facets) facets.push_back(VertexSet::of(f));
      complexes[i] = SimplicialComplex(r.k, std::move(facets));
      masks[i] = face_mask(complexes[i]);
      Collapse c = collapse_to_point(complexes[i]);
      contractible[i] = c == Collapse::Collapsible;
      // Only collapsibility certifies contractibility here; a connected complex
      // with Euler characteristic 1 that does not collapse would need a finer test.
      bool plausible = complexes[i].connected() && complexes[i].euler_characteristic() == 1;
      if (c == Collapse::Undecided || (plausible && !contractible[i]))
        throw std::logic_error("contractibility of L" + std::to_string(i + 1) + " not settled by collapse search");
    }
  }
};

const Table& table() {
  static const Table t;
  return t;
}

}  // namespace

const SimplicialComplex& reference_complex(NerveClass c) {
  if (c.id < 1 || c.id > kNerveClassCount) throw std::out_of_range("nerve class id");
  return table().complexes[c.id - 1];
}

bool class_contractible(NerveClass c) {
  if (c.id < 1 || c.id > kNerveClassCount) throw std::out_of_range("nerve class id");
  return table().contractible[c.id - 1];
}

Classification classify_small_complex(const SimplicialComplex& complex) {
  int k = complex.vertex_count();
  if (k < 1 || k > 4) throw std::invalid_argument("classification needs 1 to 4 vertices, got " + std::to_string(k));
  const Table& t = table();
  std::uint16_t mask = face_mask(complex);
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::uint16_t m = permute_mask(mask, perm);
    for (int i = 0; i < kNerveClassCount; ++i)
      if (kReferences[i].k == k && t.masks[i] == m) return {NerveClass{i + 1}, perm, t.contractible[i]};
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw std::logic_error("complex matched no reference class");
}

bool is_contractible_small(const SimplicialComplex& complex) { return classify_small_complex(complex).contractible; }

}  // namespace ncode
