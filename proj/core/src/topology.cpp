#include "ncode/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncode {

std::vector<Codeword> link_facet_sets(std::span<const Codeword> facets, Codeword sigma) {
  std::vector<Codeword> out;
  for (Codeword f : facets)
    if (sigma.subset_of(f)) out.push_back(f - sigma);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Contractibility link_contractibility(std::span<const Codeword> facets, Codeword sigma) {
  if (sigma.empty()) throw std::invalid_argument("link of the empty face is not considered");
  std::vector<Codeword> link = link_facet_sets(facets, sigma);
  if (link.empty()) throw std::invalid_argument(to_string(sigma) + " is not a face");
  if (link.size() == 1 && link.front().empty()) return Contractibility::NotContractible;

  Codeword common = Codeword::range(1, 64);
  for (Codeword l : link) common &= l;
  if (!common.empty()) return Contractibility::Contractible;  // nerve is a full simplex

  SimplicialComplex n = nerve<NeuronTag>(link);
  if (n.vertex_count() <= 4)
    return is_contractible_small(n) ? Contractibility::Contractible : Contractibility::NotContractible;

  if (!n.connected()) return Contractibility::NotContractible;
  for (VertexSet f : n.facets())
    if (f.size() > 16) return Contractibility::Indeterminate;
  if (n.euler_characteristic() != 1) return Contractibility::NotContractible;
  return collapse_to_point(n) == Collapse::Collapsible ? Contractibility::Contractible
                                                       : Contractibility::Indeterminate;
}

bool is_link_contractible(std::span<const Codeword> facets, Codeword sigma) {
  switch (link_contractibility(facets, sigma)) {
    case Contractibility::Contractible: return true;
    case Contractibility::NotContractible: return false;
    default: throw std::runtime_error("contractibility of the link of " + to_string(sigma) + " is indeterminate");
  }
}

namespace {

void require_antichain(std::span<const Codeword> facets) {
  if (!is_antichain(facets)) throw std::invalid_argument("facets must form an antichain of nonempty sets");
}

}  // namespace

MandatoryFaces mandatory_faces(std::span<const Codeword> facets) {
  require_antichain(facets);
  MandatoryFaces out;
  std::vector<Codeword> candidates(facets.begin(), facets.end());
  for (Codeword s : max_intersection_faces(facets)) candidates.push_back(s);
  std::sort(candidates.begin(), candidates.end());
  for (Codeword s : candidates) {
    switch (link_contractibility(facets, s)) {
      case Contractibility::NotContractible: out.faces.push_back(s); break;
      case Contractibility::Indeterminate: out.indeterminate.push_back(s); break;
      case Contractibility::Contractible: break;
    }
  }
  return out;
}

NeuralCode minimal_code(std::span<const Codeword> facets) {
  MandatoryFaces m = mandatory_faces(facets);
  if (!m.indeterminate.empty())
    throw std::runtime_error("minimal code undetermined: link of " + to_string(m.indeterminate.front()) +
                             " is indeterminate");
  return NeuralCode(m.faces);
}

ObstructionCheck local_obstruction(const NeuralCode& code) {
  std::vector<Codeword> facets = maximal_codewords(code);
  ObstructionCheck out;
  for (Codeword s : max_intersection_faces(facets)) {
    if (code.contains(s)) continue;
    Contractibility c = link_contractibility(facets, s);
    if (c == Contractibility::NotContractible) {
      out.obstruction = s;
      break;
    }
    if (c == Contractibility::Indeterminate) out.undecided.push_back(s);
  }
  return out;
}

std::optional<PathOfFacets> path_of_facets(Codeword f1, Codeword f2, Codeword f3) {
  std::array<Codeword, 3> f{f1, f2, f3};
  require_antichain(f);
  bool d12 = ((f1 & f2) - f3).empty();
  bool d13 = ((f1 & f3) - f2).empty();
  bool d23 = ((f2 & f3) - f1).empty();
  if (int(d12) + int(d13) + int(d23) != 1) return std::nullopt;
  if (d13) return PathOfFacets{1, 2, 3};
  if (d12) return PathOfFacets{1, 3, 2};
  return PathOfFacets{2, 1, 3};
}

SimplicialComplex code_nerve(std::span<const Codeword> facets) { return nerve<NeuronTag>(facets); }

}  // namespace ncode
