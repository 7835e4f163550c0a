#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncode/classify.hpp"
#include "ncode/code.hpp"
#include "ncode/wheels.hpp"

namespace ncode {

enum class Verdict { Convex, NonConvex, Unknown };
std::string to_string(Verdict v);

namespace cert {

struct MaxIntersectionComplete {};
struct LocalObstruction {
  Codeword face;
};
struct Sprocket {
  SprocketCandidate sprocket;
};
// Convexity of every code without local obstructions in this family.
// No class means "at most three maximal codewords".
struct TheoremNoLocalObstruction {
  std::optional<NerveClass> cls;
};
struct L24MinimalPoFConvex {};
struct L24MinimalPoFSprocket {
  SprocketCandidate sprocket;
};
struct NoTwoSimplexNerve {};
// Convex sub-code with the same simplicial complex.
struct Monotonicity {
  NeuralCode base;
};
struct IndeterminateLink {
  std::vector<Codeword> faces;
};
struct ComponentDecision;
struct DisconnectedDecomposition {
  std::vector<ComponentDecision> components;
};

}  // namespace cert

using Certificate =
    std::variant<cert::MaxIntersectionComplete, cert::LocalObstruction, cert::Sprocket, cert::TheoremNoLocalObstruction,
                 cert::L24MinimalPoFConvex, cert::L24MinimalPoFSprocket, cert::NoTwoSimplexNerve, cert::Monotonicity,
                 cert::IndeterminateLink, cert::DisconnectedDecomposition>;

std::string certificate_kind(const Certificate& c);
std::string to_string(const Certificate& c);

struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::vector<Certificate> certificates;
  std::vector<std::string> checks;  // what was tried, in order
};

namespace cert {
struct ComponentDecision {
  NeuralCode code;
  Decision decision;
};
}  // namespace cert

struct DecideOptions {
  std::size_t sprocket_budget = kDefaultSprocketBudget;
};

Decision decide(const NeuralCode& code, const DecideOptions& opts = {});

// Re-runs the operations a certificate cites. True when they confirm it.
bool replay_certificate(const NeuralCode& code, const Certificate& c);

}  // namespace ncode
