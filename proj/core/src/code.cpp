#include "ncode/code.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace ncode {

NeuralCode::NeuralCode(std::vector<Codeword> words, std::optional<int> neurons) : words_(std::move(words)) {
  words_.push_back(Codeword{});
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  int max_index = 0;
  for (Codeword c : words_) max_index = std::max(max_index, c.max_index());
  if (neurons) {
    if (*neurons < max_index)
      throw std::invalid_argument("declared neuron count " + std::to_string(*neurons) +
                                  " is below the largest index " + std::to_string(max_index));
    if (*neurons > Codeword::kMaxIndex) throw std::invalid_argument("at most 64 neurons are supported");
    n_ = *neurons;
  } else {
    n_ = max_index;
  }
}

bool NeuralCode::contains(Codeword c) const { return std::binary_search(words_.begin(), words_.end(), c); }

Codeword NeuralCode::support() const {
  Codeword s;
  for (Codeword c : words_) s |= c;
  return s;
}

bool code_less(const NeuralCode& a, const NeuralCode& b) {
  auto x = a.codewords();
  auto y = b.codewords();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

namespace {

bool is_separator(char ch) { return ch == ',' || ch == ';' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; }
bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

}  // namespace

NeuralCode parse_code(std::string_view text) {
  std::vector<Codeword> words;
  std::optional<std::size_t> multi_digit_compact;  // position of the first compact token with two or more digits
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (is_separator(ch)) {
      ++i;
      continue;
    }
    if (ch == '{') {
      std::size_t start = i++;
      Codeword word;
      bool seen = false, need_item = false;
      for (;;) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        if (i >= text.size()) throw ParseError("unterminated braced codeword", start);
        if (text[i] == '}') {
          if (need_item) throw ParseError("empty item in braced codeword", i);
          ++i;
          break;
        }
        if (seen && !need_item) {
          if (text[i] != ',') throw ParseError("expected ',' or '}'", i);
          ++i;
          need_item = true;
          continue;
        }
        if (text[i] == ',') throw ParseError("empty item in braced codeword", i);
        if (text[i] == '-') throw ParseError("neuron indices must be positive", i);
        if (!is_digit(text[i])) throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
        std::size_t num_start = i;
        long value = 0;
        while (i < text.size() && is_digit(text[i])) {
          value = value * 10 + (text[i] - '0');
          if (value > Codeword::kMaxIndex) throw ParseError("neuron index exceeds 64", num_start);
          ++i;
        }
        if (value == 0) throw ParseError("neuron indices must be positive", num_start);
        if (word.contains(int(value))) throw ParseError("duplicate neuron in codeword", num_start);
        word.insert(int(value));
        seen = true;
        need_item = false;
      }
      words.push_back(word);
      continue;
    }
    if (ch == '}') throw ParseError("unmatched '}'", i);
    std::size_t start = i;
    Codeword word;
    while (i < text.size() && !is_separator(text[i]) && text[i] != '{' && text[i] != '}') {
      char c = text[i];
      if (c == '-') throw ParseError("neuron indices must be positive", i);
      if (!is_digit(c)) throw ParseError(std::string("unexpected character '") + c + "'", i);
      if (c == '0') throw ParseError("neuron index 0 is not allowed", i);
      if (word.contains(c - '0')) throw ParseError("duplicate neuron in codeword", i);
      word.insert(c - '0');
      ++i;
    }
    if (i - start >= 2 && !multi_digit_compact) multi_digit_compact = start;
    words.push_back(word);
  }
  NeuralCode code(std::move(words));
  if (code.neurons() >= 10 && multi_digit_compact)
    throw ParseError("compact codeword is ambiguous when neurons exceed 9; use braces", *multi_digit_compact);
  return code;
}

std::string format_code(const NeuralCode& code, const FormatOptions& opts) {
  bool braced = opts.force_braces || code.neurons() >= 10;
  std::string out;
  bool first = true;
  for (Codeword c : code.codewords()) {
    if (c.empty() && !opts.verbose) continue;
    if (!first) out += opts.separator;
    out += c.empty() ? std::string("{}") : to_string(c, braced);
    first = false;
  }
  return out;
}

std::vector<Codeword> maximal_sets(std::vector<Codeword> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Codeword> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) continue;
    bool maximal = true;
    // canonical order is by size, so supersets can only come later
    for (std::size_t j = i + 1; j < sets.size() && maximal; ++j)
      if (sets[i].subset_of(sets[j])) maximal = false;
    if (maximal) out.push_back(sets[i]);
  }
  return out;
}

std::vector<Codeword> maximal_codewords(const NeuralCode& code) {
  auto words = code.codewords();
  return maximal_sets(std::vector<Codeword>(words.begin(), words.end()));
}

bool is_antichain(std::span<const Codeword> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) return false;
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && sets[i].subset_of(sets[j])) return false;
  }
  return true;
}

std::vector<Codeword> trunk(const NeuralCode& code, Codeword sigma) {
  std::vector<Codeword> out;
  for (Codeword c : code.codewords())
    if (sigma.subset_of(c)) out.push_back(c);
  return out;
}

bool is_face(std::span<const Codeword> facets, Codeword sigma) {
  if (sigma.empty()) return true;
  return std::any_of(facets.begin(), facets.end(), [&](Codeword f) { return sigma.subset_of(f); });
}

std::vector<Codeword> max_intersection_faces(std::span<const Codeword> facets) {
  std::unordered_set<Codeword> seen;
  std::vector<Codeword> work;
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      Codeword s = facets[i] & facets[j];
      if (!s.empty() && seen.insert(s).second) work.push_back(s);
    }
  // Every deeper intersection is a pairwise one intersected with further facets.
  for (std::size_t k = 0; k < work.size(); ++k)
    for (Codeword f : facets) {
      Codeword s = work[k] & f;
      if (!s.empty() && seen.insert(s).second) work.push_back(s);
    }
  std::sort(work.begin(), work.end());
  return work;
}

MaxIntersectionCheck is_max_intersection_complete(const NeuralCode& code) {
  MaxIntersectionCheck out;
  for (Codeword s : max_intersection_faces(maximal_codewords(code)))
    if (!code.contains(s)) out.missing.push_back(s);
  out.complete = out.missing.empty();
  return out;
}

FacetIntersectionTable facet_intersection_table(std::span<const Codeword> facets) {
  if (facets.size() > 20) throw std::invalid_argument("facet intersection table limited to 20 facets");
  FacetIntersectionTable table;
  std::uint64_t m = facets.size();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    if (std::popcount(s) < 2) continue;
    Codeword acc = Codeword::range(1, 64);
    for (std::uint64_t b = s; b; b &= b - 1) acc &= facets[std::countr_zero(b)];
    table.emplace(VertexSet(s), acc);
  }
  return table;
}

Codeword relabel(Codeword c, std::span<const int> permutation) {
  Codeword out;
  c.for_each([&](int i) {
    if (i > int(permutation.size())) throw std::invalid_argument("permutation too short");
    out.insert(permutation[i - 1]);
  });
  return out;
}

NeuralCode relabel(const NeuralCode& code, std::span<const int> permutation) {
  std::vector<Codeword> words;
  words.reserve(code.size());
  for (Codeword c : code.codewords()) words.push_back(relabel(c, permutation));
  return NeuralCode(std::move(words), code.neurons());
}

namespace {

Canonical canonicalize_heuristic(const NeuralCode& code) {
  int n = code.neurons();
  struct Signature {
    int neuron;
    int count;
    std::vector<int> sizes;
  };
  std::vector<Signature> sig;
  for (int i = 1; i <= n; ++i) {
    Signature s{i, 0, {}};
    for (Codeword c : code.codewords())
      if (c.contains(i)) {
        ++s.count;
        s.sizes.push_back(c.size());
      }
    sig.push_back(std::move(s));
  }
  std::stable_sort(sig.begin(), sig.end(), [](const Signature& a, const Signature& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.sizes < b.sizes;
  });
  std::vector<int> perm(n);
  for (int r = 0; r < n; ++r) perm[sig[r].neuron - 1] = r + 1;
  return {relabel(code, perm), perm, false};
}

}  // namespace

Canonical canonicalize(const NeuralCode& code) {
  int n = code.neurons();
  if (n > kExhaustiveCanonicalLimit) return canonicalize_heuristic(code);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  auto src = code.codewords();
  std::vector<Codeword> best(src.begin(), src.end());
  std::vector<int> best_perm = perm;
  std::vector<Codeword> buf(src.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t k = 0; k < src.size(); ++k) buf[k] = relabel(src[k], perm);
    std::sort(buf.begin(), buf.end());
    if (std::lexicographical_compare(buf.begin(), buf.end(), best.begin(), best.end())) {
      best = buf;
      best_perm = perm;
    }
  }
  return {NeuralCode(std::move(best), n), best_perm, true};
}

}  // namespace ncode
