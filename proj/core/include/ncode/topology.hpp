#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "ncode/classify.hpp"
#include "ncode/code.hpp"

namespace ncode {

// {F - sigma : sigma within F}. A facet sigma gives the single empty set.
std::vector<Codeword> link_facet_sets(std::span<const Codeword> facets, Codeword sigma);

enum class Contractibility { Contractible, NotContractible, Indeterminate };

// Links of facets ({empty}) count as non-contractible.
Contractibility link_contractibility(std::span<const Codeword> facets, Codeword sigma);
// Throws when the answer is indeterminate.
bool is_link_contractible(std::span<const Codeword> facets, Codeword sigma);

struct MandatoryFaces {
  std::vector<Codeword> faces;          // canonical order
  std::vector<Codeword> indeterminate;  // candidates whose link could not be settled
};
MandatoryFaces mandatory_faces(std::span<const Codeword> facets);
NeuralCode minimal_code(std::span<const Codeword> facets);

struct ObstructionCheck {
  std::optional<Codeword> obstruction;  // smallest missing mandatory face
  std::vector<Codeword> undecided;      // missing candidates with indeterminate links
};
ObstructionCheck local_obstruction(const NeuralCode& code);
inline std::optional<Codeword> has_local_obstruction(const NeuralCode& code) {
  return local_obstruction(code).obstruction;
}

// (a, b, c) over positions 1..3 with (Fa & Fc) - Fb empty; a < c.
struct PathOfFacets {
  int a, b, c;
  friend bool operator==(PathOfFacets, PathOfFacets) = default;
};
std::optional<PathOfFacets> path_of_facets(Codeword f1, Codeword f2, Codeword f3);

// Nerve of the facets of a code; vertex j is the j-th facet in canonical order.
SimplicialComplex code_nerve(std::span<const Codeword> facets);

}  // namespace ncode
