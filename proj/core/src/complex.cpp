#include "ncode/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ncode {

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<VertexSet> facets) : k_(vertex_count) {
  if (vertex_count < 0 || vertex_count > VertexSet::kMaxIndex)
    throw std::invalid_argument("vertex count outside 0..64");
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  VertexSet all = VertexSet::range(1, vertex_count);
  VertexSet covered;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].empty()) continue;
    if (!facets[i].subset_of(all)) throw std::invalid_argument("facet uses a vertex above the vertex count");
    bool maximal = true;
    for (std::size_t j = i + 1; j < facets.size() && maximal; ++j)
      if (facets[i].subset_of(facets[j])) maximal = false;
    if (maximal) facets_.push_back(facets[i]);
    covered |= facets[i];
  }
  if (covered != all) throw std::invalid_argument("every vertex must lie in some facet");
}

bool SimplicialComplex::has_face(VertexSet s) const {
  if (s.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return s.subset_of(f); });
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet> seen;
  for (VertexSet f : facets_) {
    if (f.size() > 24) throw std::length_error("facet too large to enumerate faces");
    std::vector<int> idx = f.indices();
    std::uint64_t count = std::uint64_t{1} << idx.size();
    for (std::uint64_t s = 1; s < count; ++s) {
      VertexSet face;
      for (std::uint64_t b = s; b; b &= b - 1) face.insert(idx[std::countr_zero(b)]);
      seen.insert(face);
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

int SimplicialComplex::euler_characteristic() const {
  int chi = 0;
  for (VertexSet f : faces()) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

bool SimplicialComplex::connected() const {
  if (k_ == 0) return false;
  std::vector<int> parent(k_ + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (VertexSet f : facets_) {
    int first = f.min_index();
    f.for_each([&](int v) { parent[find(v)] = find(first); });
  }
  int root = find(1);
  for (int v = 2; v <= k_; ++v)
    if (find(v) != root) return false;
  return true;
}

SimplicialComplex SimplicialComplex::relabeled(std::span<const int> permutation) const {
  if (int(permutation.size()) != k_) throw std::invalid_argument("permutation size mismatch");
  std::vector<VertexSet> out;
  for (VertexSet f : facets_) {
    VertexSet g;
    f.for_each([&](int v) { g.insert(permutation[v - 1]); });
    out.push_back(g);
  }
  return SimplicialComplex(k_, std::move(out));
}

template <class Tag>
SimplicialComplex nerve(std::span<const IndexSet<Tag>> sets) {
  int m = int(sets.size());
  if (m > VertexSet::kMaxIndex) throw std::invalid_argument("nerve limited to 64 sets");
  for (auto s : sets)
    if (s.empty()) throw std::invalid_argument("nerve of an empty set is undefined");
  std::vector<VertexSet> facets;
  // Depth-first over faces in increasing vertex order; keep the maximal ones.
  auto rec = [&](auto&& self, int start, VertexSet face, IndexSet<Tag> common) -> void {
    bool extended = false;
    for (int j = start; j < m; ++j) {
      IndexSet<Tag> next = common & sets[j];
      if (next.empty()) continue;
      VertexSet f = face;
      f.insert(j + 1);
      self(self, j + 1, f, next);
      extended = true;
    }
    if (extended) return;
    for (int j = 0; j < m; ++j)
      if (!face.contains(j + 1) && (common & sets[j]).bits() != 0) return;
    facets.push_back(face);
  };
  for (int j = 0; j < m; ++j) {
    VertexSet f;
    f.insert(j + 1);
    rec(rec, j + 1, f, sets[j]);
  }
  return SimplicialComplex(m, std::move(facets));
}

template SimplicialComplex nerve<NeuronTag>(std::span<const Codeword>);
template SimplicialComplex nerve<VertexTag>(std::span<const VertexSet>);

namespace {

struct StateHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : v) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

class CollapseSearch {
 public:
  CollapseSearch(const std::vector<VertexSet>& faces, std::size_t budget) : faces_(faces), budget_(budget) {
    cofaces_.resize(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (std::size_t j = 0; j < faces.size(); ++j)
        if (i != j && faces[i].subset_of(faces[j])) cofaces_[i].push_back(j);
  }

  Collapse run() {
    std::vector<std::uint64_t> state((faces_.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < faces_.size(); ++i) set(state, i);
    bool ok = search(state, faces_.size());
    if (ok) return Collapse::Collapsible;
    return exhausted_ ? Collapse::Undecided : Collapse::NotCollapsible;
  }

 private:
  static bool test(const std::vector<std::uint64_t>& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1; }
  static void set(std::vector<std::uint64_t>& s, std::size_t i) { s[i / 64] |= std::uint64_t{1} << (i % 64); }
  static void clear(std::vector<std::uint64_t>& s, std::size_t i) { s[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  bool search(std::vector<std::uint64_t>& state, std::size_t alive) {
    if (alive == 1) return true;  // a single remaining face is necessarily a vertex
    if (failed_.count(state)) return false;
    if (++visited_ > budget_) {
      exhausted_ = true;
      return false;
    }
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (!test(state, i)) continue;
      std::size_t only = SIZE_MAX;
      int count = 0;
      for (std::size_t j : cofaces_[i])
        if (test(state, j)) {
          only = j;
          if (++count > 1) break;
        }
      if (count != 1) continue;
      clear(state, i);
      clear(state, only);
      bool ok = search(state, alive - 2);
      set(state, i);
      set(state, only);
      if (ok) return true;
      if (exhausted_) return false;
    }
    failed_.insert(state);
    return false;
  }

  const std::vector<VertexSet>& faces_;
  std::vector<std::vector<std::size_t>> cofaces_;
  std::unordered_set<std::vector<std::uint64_t>, StateHash> failed_;
  std::size_t budget_;
  std::size_t visited_ = 0;
  bool exhausted_ = false;
};

}  // namespace

Collapse collapse_to_point(const SimplicialComplex& complex, std::size_t state_budget) {
  if (complex.vertex_count() == 0) return Collapse::NotCollapsible;
  std::vector<VertexSet> faces = complex.faces();
  return CollapseSearch(faces, state_budget).run();
}

}  // namespace ncode
