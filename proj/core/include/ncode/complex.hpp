#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ncode/index_set.hpp"

namespace ncode {

// Abstract simplicial complex on vertices 1..k, stored by its facets.
// Every vertex must lie in some facet.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int vertex_count, std::vector<VertexSet> facets);

  int vertex_count() const { return k_; }
  std::span<const VertexSet> facets() const { return facets_; }
  bool has_face(VertexSet s) const;
  int dimension() const;

  // All nonempty faces in canonical order. Exponential in facet size.
  std::vector<VertexSet> faces() const;
  int euler_characteristic() const;
  bool connected() const;
  SimplicialComplex relabeled(std::span<const int> permutation) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int k_ = 0;
  std::vector<VertexSet> facets_;
};

// Nerve of a family of nonempty sets: vertex j is sets[j-1], faces are the
// index sets with nonempty common intersection.
template <class Tag>
SimplicialComplex nerve(std::span<const IndexSet<Tag>> sets);

enum class Collapse { Collapsible, NotCollapsible, Undecided };

// Exhaustive search for a sequence of elementary collapses down to one vertex.
// Undecided when the state budget runs out.
Collapse collapse_to_point(const SimplicialComplex& complex, std::size_t state_budget = 200000);

}  // namespace ncode
