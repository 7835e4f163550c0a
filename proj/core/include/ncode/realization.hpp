#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncode/code.hpp"
#include "ncode/geometry.hpp"

namespace ncode {

using Region = std::variant<Interval, Polygon>;

// Open convex regions in the line or the plane, keyed by neuron.
struct Realization {
  int dimension = 1;
  std::map<int, Region> regions;
  friend bool operator==(const Realization&, const Realization&) = default;
};

struct RegionProblem {
  int neuron;
  std::string reason;
};

std::vector<RegionProblem> validate_realization(const Realization& r);

// Code of the open cover: the set of neurons containing each point of the ambient space.
NeuralCode code_of_realization(const Realization& r, std::optional<int> neurons = std::nullopt);

struct VerifyResult {
  bool ok = false;
  std::vector<Codeword> missing;  // in the target, not generated
  std::vector<Codeword> extra;    // generated, not in the target
  std::vector<RegionProblem> problems;
};
VerifyResult verify_realization(const Realization& r, const NeuralCode& target);

std::string realization_to_json(const Realization& r, int indent = 2);
Realization realization_from_json(const std::string& text);
std::string realization_to_svg(const Realization& r);

}  // namespace ncode
