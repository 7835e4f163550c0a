#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with it beyond the IndexSet container.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "ncode/index_set.hpp"

namespace oracle {

using Word = std::uint64_t;

// Code of open integer intervals (lo, hi): probe every endpoint, every gap
// midpoint and one point past each end. Coordinates are doubled so midpoints stay integral.
inline std::set<Word> intervals_code(const std::vector<std::pair<long, long>>& ivs) {
  std::vector<long> pts;
  for (auto [lo, hi] : ivs) pts.push_back(2 * lo), pts.push_back(2 * hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<long> probes;
  if (!pts.empty()) probes.push_back(pts.front() - 1), probes.push_back(pts.back() + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    probes.push_back(pts[i]);
    if (i + 1 < pts.size()) probes.push_back((pts[i] + pts[i + 1]) / 2);
  }
  std::set<Word> out{0};
  for (long x : probes) {
    Word w = 0;
    for (std::size_t j = 0; j < ivs.size(); ++j)
      if (2 * ivs[j].first < x && x < 2 * ivs[j].second) w |= Word{1} << j;
    out.insert(w);
  }
  return out;
}

// Code of open axis-aligned rectangles {x0, y0, x1, y1} with integer corners,
// sampled on the half-integer grid, which meets every face of the arrangement.
inline std::set<Word> rectangles_code(const std::vector<std::array<int, 4>>& rects) {
  int lo = 0, hi = 0;
  for (const auto& r : rects) lo = std::min({lo, r[0], r[1]}), hi = std::max({hi, r[2], r[3]});
  std::set<Word> out{0};
  for (int x = 2 * lo - 1; x <= 2 * hi + 1; ++x)
    for (int y = 2 * lo - 1; y <= 2 * hi + 1; ++y) {
      Word w = 0;
      for (std::size_t j = 0; j < rects.size(); ++j) {
        const auto& r = rects[j];
        if (2 * r[0] < x && x < 2 * r[2] && 2 * r[1] < y && y < 2 * r[3]) w |= Word{1} << j;
      }
      out.insert(w);
    }
  return out;
}

// All nonempty faces generated by facets given as bitmasks.
inline std::set<Word> faces(const std::vector<Word>& facets) {
  std::set<Word> out;
  for (Word f : facets)
    for (Word s = f; s; s = (s - 1) & f) out.insert(s);
  return out;
}

inline int euler(const std::vector<Word>& facets) {
  int chi = 0;
  for (Word s : faces(facets)) chi += (__builtin_popcountll(s) % 2) ? 1 : -1;
  return chi;
}

// Connectivity of the 1-skeleton by repeated merging.
inline bool connected(const std::vector<Word>& facets) {
  if (facets.empty()) return false;
  Word reach = facets.front();
  bool grew = true;
  while (grew) {
    grew = false;
    for (Word f : facets)
      if ((f & reach) && (f | reach) != reach) reach |= f, grew = true;
  }
  Word all = 0;
  for (Word f : facets) all |= f;
  return reach == all;
}

// Number of the three differences (Fi & Fk) - Fj that are empty.
inline int empty_differences(Word f1, Word f2, Word f3) {
  return int(((f1 & f3) & ~f2) == 0) + int(((f1 & f2) & ~f3) == 0) + int(((f2 & f3) & ~f1) == 0);
}

template <class Tag>
Word word(ncode::IndexSet<Tag> s) {
  return s.bits();
}

}  // namespace oracle
