#include "ncode/construct.hpp"

#include <algorithm>
#include <array>

#include "ncode/classify.hpp"
#include "ncode/decider.hpp"
#include "ncode/topology.hpp"

namespace ncode {

std::string to_string(Construction c) {
  switch (c) {
    case Construction::PoFChain1D: return "PoFChain1D";
    case Construction::L18Case1: return "L18Case1";
    case Construction::L18Case2: return "L18Case2";
    case Construction::L18Case3: return "L18Case3";
    case Construction::L21B1: return "L21B1";
    case Construction::L21B2: return "L21B2";
    case Construction::L21B3: return "L21B3";
    case Construction::L22Case2a: return "L22Case2a";
    case Construction::L22Case2b: return "L22Case2b";
    case Construction::L22Case3a: return "L22Case3a";
    case Construction::L22Case3b: return "L22Case3b";
    case Construction::L22Case4: return "L22Case4";
    case Construction::DisconnectedGlue: return "DisconnectedGlue";
  }
  return "?";
}

std::string to_string(const ConstructionTag& t) {
  std::string out = to_string(t.kind);
  if (!t.parts.empty()) {
    out += "(";
    for (std::size_t i = 0; i < t.parts.size(); ++i) out += (i ? "," : "") + to_string(t.parts[i]);
    out += ")";
  }
  return out;
}

std::string to_string(NotCoveredReason r) {
  switch (r) {
    case NotCoveredReason::NotMinimal: return "code strictly contains its minimal code";
    case NotCoveredReason::MaxIntersectionCompleteOnly: return "convex by max-intersection completeness only";
    case NotCoveredReason::NoConstruction: return "no explicit construction for this family";
  }
  return "?";
}

namespace {

// A labeled piece of the ambient space. Each neuron's region is the union of
// the cells whose label contains it; that union must itself be convex.
struct Cell {
  Codeword label;
  Region shape;
};

struct Layout {
  int dimension = 1;
  std::vector<Cell> cells;
};

Polygon poly(std::initializer_list<std::array<int, 2>> pts) {
  Polygon p;
  for (const auto& [x, y] : pts) p.vertices.push_back({Rational(x), Rational(y)});
  if (twice_area(p) < 0) std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

Polygon rect(int x0, int y0, int x1, int y1) { return poly({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}); }

Layout chain(const std::vector<Codeword>& labels) {
  Layout l;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!labels[i].empty()) l.cells.push_back({labels[i], Interval{Rational(int(i)), Rational(int(i) + 1)}});
  return l;
}

Layout planar(std::vector<std::pair<Codeword, Polygon>> cells) {
  Layout l;
  l.dimension = 2;
  for (auto& [label, p] : cells) l.cells.push_back({label, std::move(p)});
  return l;
}

Realization realize(const Layout& layout) {
  Codeword neurons;
  for (const Cell& c : layout.cells) neurons |= c.label;
  Realization r;
  r.dimension = layout.dimension;
  neurons.for_each([&](int i) {
    if (layout.dimension == 1) {
      Rational lo, hi, total = 0;
      bool first = true;
      for (const Cell& c : layout.cells) {
        if (!c.label.contains(i)) continue;
        const auto& iv = std::get<Interval>(c.shape);
        if (first || iv.lo < lo) lo = iv.lo;
        if (first || iv.hi > hi) hi = iv.hi;
        total += iv.hi - iv.lo;
        first = false;
      }
      if (total != hi - lo) throw std::logic_error("cells of neuron " + std::to_string(i) + " are not contiguous");
      r.regions[i] = Interval{lo, hi};
    } else {
      std::vector<Point> pts;
      Rational total = 0;
      for (const Cell& c : layout.cells) {
        if (!c.label.contains(i)) continue;
        const auto& p = std::get<Polygon>(c.shape);
        pts.insert(pts.end(), p.vertices.begin(), p.vertices.end());
        total += twice_area(p);
      }
      Polygon hull = convex_hull(std::move(pts));
      if (twice_area(hull) != total) throw std::logic_error("cells of neuron " + std::to_string(i) + " are not convex");
      r.regions[i] = std::move(hull);
    }
  });
  return r;
}

Layout glue(const std::vector<Layout>& parts) {
  bool planar_result = std::any_of(parts.begin(), parts.end(), [](const Layout& l) { return l.dimension == 2; });
  Layout out;
  out.dimension = planar_result ? 2 : 1;
  Rational cursor = 0;
  for (const Layout& part : parts) {
    Rational lo, hi;
    bool first = true;
    auto see = [&](const Rational& x) {
      if (first || x < lo) lo = x;
      if (first || x > hi) hi = x;
      first = false;
    };
    for (const Cell& c : part.cells) {
      if (const auto* iv = std::get_if<Interval>(&c.shape)) {
        see(iv->lo), see(iv->hi);
      } else {
        for (const Point& p : std::get<Polygon>(c.shape).vertices) see(p.x);
      }
    }
    Rational shift = cursor - lo;
    for (const Cell& c : part.cells) {
      if (const auto* iv = std::get_if<Interval>(&c.shape)) {
        Rational a = iv->lo + shift, b = iv->hi + shift;
        if (planar_result) {
          Polygon p{{{a, 0}, {b, 0}, {b, 1}, {a, 1}}};
          out.cells.push_back({c.label, std::move(p)});
        } else {
          out.cells.push_back({c.label, Interval{a, b}});
        }
      } else {
        Polygon p = std::get<Polygon>(c.shape);
        for (Point& v : p.vertices) v.x += shift;
        out.cells.push_back({c.label, std::move(p)});
      }
    }
    cursor = hi + shift + 1;
  }
  return out;
}

struct Attempt {
  std::optional<std::pair<Layout, ConstructionTag>> layout;
  NotCoveredReason reason = NotCoveredReason::NoConstruction;
};

Attempt success(Layout l, Construction c) { return {std::make_pair(std::move(l), ConstructionTag{c, {}}), {}}; }
Attempt failure(NotCoveredReason r) { return {std::nullopt, r}; }

std::vector<std::vector<Codeword>> components(const std::vector<Codeword>& facets) {
  std::vector<std::vector<Codeword>> out;
  std::vector<bool> done(facets.size(), false);
  for (std::size_t s = 0; s < facets.size(); ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> stack{s};
    std::vector<Codeword> comp;
    done[s] = true;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(facets[i]);
      for (std::size_t j = 0; j < facets.size(); ++j)
        if (!done[j] && facets[i].intersects(facets[j])) {
          done[j] = true;
          stack.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Attempt mic_or_nothing(const std::vector<Codeword>& facets) {
  return failure(is_max_intersection_complete(minimal_code(facets)).complete ? NotCoveredReason::MaxIntersectionCompleteOnly
                                                                           : NotCoveredReason::NoConstruction);
}

// Chain Fa | Fa&Fb | Fb | Fb&Fc | Fc for a path of facets.
std::vector<Codeword> pof_chain(Codeword fa, Codeword fb, Codeword fc) { return {fa, fa & fb, fb, fb & fc, fc}; }

Attempt three_facets(const std::vector<Codeword>& f) {
  auto w = path_of_facets(f[0], f[1], f[2]);
  if (!w) return mic_or_nothing(f);
  return success(chain(pof_chain(f[w->a - 1], f[w->b - 1], f[w->c - 1])), Construction::PoFChain1D);
}

// R[0..3] hold the facets carrying reference labels 1..4.
Attempt l18(const std::array<Codeword, 4>& R) {
  auto w = path_of_facets(R[0], R[1], R[2]);
  if (!w) return mic_or_nothing({R.begin(), R.end()});
  Codeword fa = R[w->a - 1], fb = R[w->b - 1], fc = R[w->c - 1];
  Codeword f2 = R[1], f4 = R[3];
  if (w->a == 2)
    return success(chain({f4, f2 & f4, f2, f2 & fb, fb, fb & fc, fc}), Construction::L18Case1);
  if (w->c == 2)
    return success(chain({fa, fa & fb, fb, fb & f2, f2, f2 & f4, f4}), Construction::L18Case3);
  // The middle facet carries the pendant: hang F4 below it.
  return success(planar({{fa, rect(0, 0, 1, 1)},
                         {fa & f2, rect(1, 0, 3, 1)},
                         {f2, rect(3, 0, 4, 1)},
                         {f2 & fc, rect(4, 0, 6, 1)},
                         {fc, rect(6, 0, 7, 1)},
                         {f2 & f4, rect(3, -1, 4, 0)},
                         {f4, rect(3, -2, 4, -1)}}),
                 Construction::L18Case2);
}

Attempt l21(const std::array<Codeword, 4>& R) {
  auto w = path_of_facets(R[0], R[1], R[2]);
  if (!w) return mic_or_nothing({R.begin(), R.end()});
  Codeword f1 = R[0], f4 = R[3];
  if (w->b == 1) {
    Codeword f2 = R[1], f3 = R[2];
    return success(planar({{f2, poly({{0, 0}, {4, 0}, {12, 4}, {4, 4}})},
                           {f1 & f2, poly({{4, 0}, {12, 0}, {12, 4}})},
                           {f1, rect(12, 0, 16, 4)},
                           {f1 & f3, poly({{16, 0}, {24, 0}, {16, 4}})},
                           {f3, poly({{16, 4}, {24, 0}, {28, 0}, {24, 4}})},
                           {f2 & f4, poly({{4, 4}, {12, 4}, {14, 5}, {8, 8}})},
                           {f4, poly({{14, 5}, {20, 8}, {8, 8}})},
                           {f3 & f4, poly({{16, 4}, {24, 4}, {20, 8}, {14, 5}})}}),
                   Construction::L21B1);
  }
  // Middle facet and the other end both meet F4; strip F1 | F1&M | M | M&E | E with F4 on top.
  Codeword m = R[w->b - 1], e = w->b == 2 ? R[2] : R[1];
  return success(planar({{f1, poly({{-2, 0}, {0, 1}, {-2, 1}})},
                         {f1 & m, poly({{-2, 0}, {0, 0}, {0, 1}})},
                         {m, poly({{0, 0}, {2, 1}, {0, 1}})},
                         {m & e, poly({{0, 0}, {4, 0}, {2, 1}})},
                         {e, poly({{2, 1}, {4, 0}, {4, 1}})},
                         {m & f4, poly({{0, 1}, {2, 1}, {0, 2}})},
                         {f4, poly({{2, 1}, {4, 2}, {0, 2}})},
                         {e & f4, poly({{2, 1}, {4, 1}, {4, 2}})}}),
                 w->b == 2 ? Construction::L21B2 : Construction::L21B3);
}

// Triangles R1R2R3 and R2R3R4; R1 and R4 are disjoint.
Attempt l22(std::array<Codeword, 4> R) {
  auto middle = [&](int first) -> std::optional<int> {
    auto w = path_of_facets(R[first - 1], R[first], R[first + 1]);
    if (!w) return std::nullopt;
    return first + w->b - 1;
  };
  auto m1 = middle(1), m4 = middle(2);
  if (!m1 && !m4) return mic_or_nothing({R.begin(), R.end()});

  if (m1 && m4) {
    if (*m1 == 2) {
      std::swap(R[1], R[2]);
      m4 = *m4 == 2 ? 3 : 2;
    }
    auto [f1, f2, f3, f4] = R;
    if (*m4 == 2)
      return success(chain({f1, f1 & f3, f3, f2 & f3, f2, f2 & f4, f4}), Construction::L22Case2a);
    return success(planar({{f1, rect(0, 0, 2, 2)},
                           {f1 & f3, rect(2, 0, 6, 2)},
                           {f3, rect(6, 0, 8, 2)},
                           {f2 & f3, poly({{8, 0}, {9, 1}, {9, 2}, {8, 2}})},
                           {f2, poly({{9, 1}, {10, 2}, {9, 2}})},
                           {f3 & f4, poly({{6, -1}, {7, -1}, {8, 0}, {6, 0}})},
                           {f4, poly({{6, -2}, {7, -1}, {6, -1}})}}),
                   Construction::L22Case2b);
  }

  bool mirrored = !m4;
  if (mirrored) {
    std::swap(R[0], R[3]);
    m4 = middle(2);
  }
  if (*m4 == 3) std::swap(R[1], R[2]);
  auto [f1, f2, f3, f4] = R;
  bool gap12 = !((f1 & f2) - f3).empty(), gap13 = !((f1 & f3) - f2).empty();
  if (gap12 != gap13) throw std::logic_error("L22 triangle with exactly one exposed pairwise intersection");
  if (gap12) {
    Attempt a = success(planar({{f3, poly({{-2, -2}, {0, -2}, {2, 0}, {-2, 0}})},
                                {f2 & f3, poly({{0, -2}, {6, -2}, {4, 0}, {2, 0}})},
                                {f2, poly({{6, -2}, {8, -2}, {8, 0}, {4, 0}})},
                                {f2 & f4, rect(8, -2, 10, 0)},
                                {f4, rect(10, -2, 12, 0)},
                                {f1 & f3, poly({{-2, 0}, {2, 0}, {3, 1}, {1, 3}})},
                                {f1 & f2 & f3, poly({{2, 0}, {4, 0}, {3, 1}})},
                                {f1 & f2, poly({{4, 0}, {8, 0}, {5, 3}, {3, 1}})},
                                {f1, poly({{3, 1}, {5, 3}, {3, 5}, {1, 3}})}}),
                        mirrored ? Construction::L22Case4 : Construction::L22Case3a);
    return a;
  }
  return success(planar({{f3, rect(0, 0, 1, 1)},
                         {f2 & f3, rect(1, 0, 3, 1)},
                         {f2, rect(3, 0, 4, 1)},
                         {f2 & f4, rect(4, 0, 6, 1)},
                         {f4, rect(6, 0, 7, 1)},
                         {f1 & f2 & f3, rect(0, -1, 4, 0)},
                         {f1, rect(0, -2, 4, -1)}}),
                 mirrored ? Construction::L22Case4 : Construction::L22Case3b);
}

Attempt connected_layout(const std::vector<Codeword>& f) {
  switch (f.size()) {
    case 1: return success(chain({f[0]}), Construction::PoFChain1D);
    case 2: return success(chain({f[0], f[0] & f[1], f[1]}), Construction::PoFChain1D);
    case 3: return three_facets(f);
    case 4: break;
    default: return failure(NotCoveredReason::NoConstruction);
  }
  Classification cl = classify_small_complex(code_nerve(f));
  std::array<Codeword, 4> R;
  for (int j = 0; j < 4; ++j) R[cl.relabeling[j] - 1] = f[j];
  switch (cl.cls.id) {
    case 18: return l18(R);
    case 21: return l21(R);
    case 22: return l22(R);
    default: return mic_or_nothing(f);
  }
}

Attempt layout_for(const std::vector<Codeword>& facets) {
  auto comps = components(facets);
  if (comps.size() == 1) return connected_layout(facets);
  std::vector<Layout> parts;
  ConstructionTag tag{Construction::DisconnectedGlue, {}};
  for (const auto& comp : comps) {
    Attempt a = connected_layout(comp);
    if (!a.layout) return a;
    parts.push_back(std::move(a.layout->first));
    tag.parts.push_back(std::move(a.layout->second));
  }
  return {std::make_pair(glue(parts), std::move(tag)), {}};
}

}  // namespace

BuildOutcome build_realization(const NeuralCode& code) {
  if (decide(code).verdict != Verdict::Convex) throw PreconditionError("code is not decided CONVEX");
  BuildOutcome out;
  std::vector<Codeword> facets = maximal_codewords(code);
  if (facets.empty()) {
    out.reason = NotCoveredReason::NoConstruction;
    return out;
  }
  NeuralCode base = minimal_code(facets);
  if (std::vector<Codeword>(base.codewords().begin(), base.codewords().end()) !=
      std::vector<Codeword>(code.codewords().begin(), code.codewords().end())) {
    out.reason = NotCoveredReason::NotMinimal;
    return out;
  }
  Attempt a = layout_for(facets);
  if (!a.layout) {
    out.reason = a.reason;
    return out;
  }
  out.built = Built{realize(a.layout->first), std::move(a.layout->second)};
  return out;
}

}  // namespace ncode
