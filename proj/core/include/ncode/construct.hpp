#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncode/code.hpp"
#include "ncode/realization.hpp"

namespace ncode {

enum class Construction {
  PoFChain1D,
  L18Case1,
  L18Case2,
  L18Case3,
  L21B1,
  L21B2,
  L21B3,
  L22Case2a,
  L22Case2b,
  L22Case3a,
  L22Case3b,
  L22Case4,
  DisconnectedGlue,
};
std::string to_string(Construction c);

struct ConstructionTag {
  Construction kind;
  std::vector<ConstructionTag> parts;  // one per component for DisconnectedGlue
  friend bool operator==(const ConstructionTag&, const ConstructionTag&) = default;
};
std::string to_string(const ConstructionTag& t);

struct Built {
  Realization realization;
  ConstructionTag tag;
};

enum class NotCoveredReason {
  NotMinimal,
  MaxIntersectionCompleteOnly,
  NoConstruction,
};
std::string to_string(NotCoveredReason r);

struct BuildOutcome {
  std::optional<Built> built;
  NotCoveredReason reason = NotCoveredReason::NoConstruction;  // meaningful when nothing was built
};

// Thrown when the code is not decided CONVEX.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Explicit convex realization for the minimal codes whose convexity proofs are constructive.
// Neurons that appear in no codeword get no region.
BuildOutcome build_realization(const NeuralCode& code);

}  // namespace ncode
