#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncode/classify.hpp"
#include "ncode/construct.hpp"
#include "ncode/decider.hpp"
#include "ncode/topology.hpp"

namespace ncode {

struct TriplePoF {
  std::array<int, 3> facets;  // positions in the facet list, 1-based
  std::optional<PathOfFacets> witness;
};

struct Report {
  NeuralCode code;
  std::vector<Codeword> facets;
  std::optional<Classification> nerve;  // only for one to four facets
  MandatoryFaces mandatory;
  std::optional<NeuralCode> minimal;
  std::vector<Codeword> missing_max_intersections;
  std::vector<TriplePoF> path_of_facets;
  std::optional<SprocketCandidate> sprocket;
  bool sprocket_searched = false;
  Decision decision;
  std::optional<Built> realization;
  std::optional<NotCoveredReason> not_covered;
};

struct AnalyzeOptions {
  std::size_t sprocket_budget = kDefaultSprocketBudget;
  bool build = true;
};

Report analyze(const NeuralCode& code, const AnalyzeOptions& opts = {});

std::string report_to_json(const Report& r, int indent = 2);
std::string report_to_text(const Report& r);

// JSON for a single decision: verdict, certificates and checks.
std::string decision_to_json(const Decision& d, int indent = 2);

}  // namespace ncode
