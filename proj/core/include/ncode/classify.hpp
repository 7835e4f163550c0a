#pragma once

#include <array>
#include <string>
#include <vector>

#include "ncode/complex.hpp"

namespace ncode {

// One of the 28 isomorphism types of complexes on at most four vertices.
struct NerveClass {
  int id = 0;  // 1..28
  std::string name() const { return "L" + std::to_string(id); }
  friend bool operator==(NerveClass, NerveClass) = default;
};

inline constexpr int kNerveClassCount = 28;

const SimplicialComplex& reference_complex(NerveClass c);
bool class_contractible(NerveClass c);

struct Classification {
  NerveClass cls;
  // relabeling[v-1] is the reference label of input vertex v; lexicographically least.
  std::vector<int> relabeling;
  bool contractible = false;
};

// Classifies a complex with 1..4 vertices. Throws for larger complexes.
Classification classify_small_complex(const SimplicialComplex& complex);
bool is_contractible_small(const SimplicialComplex& complex);

}  // namespace ncode
