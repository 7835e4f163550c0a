#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncode/index_set.hpp"

namespace ncode {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A combinatorial neural code: a set of codewords over neurons 1..n that
// always contains the empty codeword. Codewords are kept in canonical order.
class NeuralCode {
 public:
  NeuralCode() : words_{Codeword{}} {}
  explicit NeuralCode(std::vector<Codeword> words, std::optional<int> neurons = std::nullopt);

  int neurons() const { return n_; }
  std::span<const Codeword> codewords() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(Codeword c) const;
  // Union of all codewords.
  Codeword support() const;

  friend bool operator==(const NeuralCode&, const NeuralCode&) = default;

 private:
  std::vector<Codeword> words_;
  int n_ = 0;
};

// Lexicographic comparison of canonical codeword sequences.
bool code_less(const NeuralCode& a, const NeuralCode& b);

NeuralCode parse_code(std::string_view text);

struct FormatOptions {
  bool verbose = false;        // print the empty codeword as {}
  bool force_braces = false;   // braced lists even when n <= 9
  std::string separator = ",";
};
std::string format_code(const NeuralCode& code, const FormatOptions& opts = {});

// Maximal codewords in canonical order.
std::vector<Codeword> maximal_codewords(const NeuralCode& code);
std::vector<Codeword> maximal_sets(std::vector<Codeword> sets);
bool is_antichain(std::span<const Codeword> sets);

std::vector<Codeword> trunk(const NeuralCode& code, Codeword sigma);
// Membership in the simplicial complex generated by the facets.
bool is_face(std::span<const Codeword> facets, Codeword sigma);

// Nonempty intersections of two or more facets, canonical order.
std::vector<Codeword> max_intersection_faces(std::span<const Codeword> facets);

struct MaxIntersectionCheck {
  bool complete = true;
  std::vector<Codeword> missing;
};
MaxIntersectionCheck is_max_intersection_complete(const NeuralCode& code);

// Keys are subsets of facet positions (bit j-1 for facet j) with at least two elements.
using FacetIntersectionTable = std::map<VertexSet, Codeword>;
FacetIntersectionTable facet_intersection_table(std::span<const Codeword> facets);

// permutation[i-1] is the new label of neuron i.
NeuralCode relabel(const NeuralCode& code, std::span<const int> permutation);
Codeword relabel(Codeword c, std::span<const int> permutation);

struct Canonical {
  NeuralCode code;
  std::vector<int> permutation;
  bool exact = true;
};
// Lexicographically least relabeling. Exhaustive for n <= 8, refinement heuristic above.
Canonical canonicalize(const NeuralCode& code);

inline constexpr int kExhaustiveCanonicalLimit = 8;

}  // namespace ncode
