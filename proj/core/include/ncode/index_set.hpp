#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncode {

// Finite set of positive indices 1..64 packed into a word. Bit i-1 holds index i.
template <class Tag>
class IndexSet {
 public:
  static constexpr int kMaxIndex = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  template <class Range>
  static IndexSet of(const Range& indices) {
    IndexSet s;
    for (int i : indices) s.insert(i);
    return s;
  }

  static constexpr IndexSet range(int first, int last) {
    IndexSet s;
    for (int i = first; i <= last; ++i) s.bits_ |= bit(i);
    return s;
  }

  void insert(int i) {
    if (i < 1 || i > kMaxIndex)
      throw std::out_of_range("index " + std::to_string(i) + " outside 1..64");
    bits_ |= bit(i);
  }
  void erase(int i) {
    if (i >= 1 && i <= kMaxIndex) bits_ &= ~bit(i);
  }

  constexpr bool contains(int i) const {
    return i >= 1 && i <= kMaxIndex && (bits_ & bit(i)) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }

  // 0 when empty
  constexpr int max_index() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }
  constexpr int min_index() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b) + 1);
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  IndexSet& operator|=(IndexSet o) { bits_ |= o.bits_; return *this; }
  IndexSet& operator&=(IndexSet o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;

  // Canonical order: by size, then lexicographically on the ascending index list.
  friend constexpr std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    std::uint64_t d = a.bits_ ^ b.bits_;
    std::uint64_t low = d & (~d + 1);
    return (a.bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << (i - 1); }
  std::uint64_t bits_ = 0;
};

struct NeuronTag;
struct VertexTag;

// Set of neurons.
using Codeword = IndexSet<NeuronTag>;
// Set of abstract vertices of a simplicial complex.
using VertexSet = IndexSet<VertexTag>;

// "134" when every index is a single digit, "{1,3,12}" otherwise or when forced.
template <class Tag>
std::string to_string(IndexSet<Tag> s, bool braced = false) {
  if (!braced && s.max_index() <= 9 && !s.empty()) {
    std::string out;
    s.for_each([&](int i) { out += char('0' + i); });
    return out;
  }
  std::string out = "{";
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

}  // namespace ncode

template <class Tag>
struct std::hash<ncode::IndexSet<Tag>> {
  std::size_t operator()(ncode::IndexSet<Tag> s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
