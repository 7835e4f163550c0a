#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncode/code.hpp"
#include "ncode/decider.hpp"

namespace ncode {

// One facet antichain per orbit under neuron relabeling: K nonempty,
// pairwise incomparable subsets of [n] for some n <= N, with every neuron used.
// Built from neuron counts on the Venn regions of the K facets, taken up to
// permutations of the facets.
std::vector<std::vector<Codeword>> facet_antichain_orbits(int max_neurons, int facet_count);

struct AtlasOptions {
  int max_neurons = 4;
  int facet_count = 3;
  bool minimal_only = false;
  bool unsafe = false;  // lift the size caps
};

inline constexpr int kAtlasNeuronCap = 6;
inline constexpr int kAtlasFacetCap = 4;

struct AtlasRow {
  std::string code;  // canonical, braced
  int neurons = 0;
  int facets = 0;
  std::string nerve_class;
  bool minimal = false;
  Verdict verdict = Verdict::Unknown;
  std::string certificate;
  std::string sprocket;
};

std::vector<AtlasRow> atlas(const AtlasOptions& opts);
std::string atlas_csv(const std::vector<AtlasRow>& rows);
std::map<std::pair<std::string, std::string>, int> atlas_summary(const std::vector<AtlasRow>& rows);

}  // namespace ncode
