#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "ncode/code.hpp"

namespace ncode {

// (sigma1, sigma2, sigma3, tau) together with witnesses (rho1, rho3).
struct SprocketCandidate {
  std::array<Codeword, 4> sigmas;
  std::array<Codeword, 2> rhos;
  friend bool operator==(const SprocketCandidate&, const SprocketCandidate&) = default;
};

std::string to_string(const SprocketCandidate& s);

enum class WheelCondition { P1, P2, P3, S1, S2, S3 };
std::string to_string(WheelCondition c);

struct WheelCheck {
  bool ok = true;
  std::optional<WheelCondition> failed;  // first failing condition
  explicit operator bool() const { return ok; }
};

WheelCheck is_partial_wheel(const NeuralCode& code, const std::array<Codeword, 4>& sigmas);
WheelCheck is_sprocket(const NeuralCode& code, const SprocketCandidate& candidate);

// Requires exactly four maximal codewords whose nerve is L24; otherwise throws.
// Empty when the 2-simplex facets do not form a path of facets.
std::optional<SprocketCandidate> canonical_l24_sprocket(const NeuralCode& code);

struct SprocketSearch {
  std::optional<SprocketCandidate> sprocket;
  std::size_t evaluations = 0;
  bool budget_exhausted = false;
};

inline constexpr std::size_t kDefaultSprocketBudget = 1'000'000;

// Canonical L24 construction, then the cone reduction, then a bounded search.
SprocketSearch find_sprocket(const NeuralCode& code, std::size_t budget = kDefaultSprocketBudget);

}  // namespace ncode
