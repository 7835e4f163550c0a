#include "ncode/decider.hpp"

#include <algorithm>

#include "ncode/topology.hpp"

namespace ncode {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Convex: return "CONVEX";
    case Verdict::NonConvex: return "NONCONVEX";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string verdicts_of(const cert::DisconnectedDecomposition& d) {
  std::string out;
  for (const auto& c : d.components) {
    if (!out.empty()) out += ";";
    out += to_string(c.decision.verdict);
  }
  return out;
}

}  // namespace

std::string certificate_kind(const Certificate& c) {
  return std::visit(overloaded{
                        [](const cert::MaxIntersectionComplete&) { return std::string("MaxIntersectionComplete"); },
                        [](const cert::LocalObstruction&) { return std::string("LocalObstruction"); },
                        [](const cert::Sprocket&) { return std::string("Sprocket"); },
                        [](const cert::TheoremNoLocalObstruction&) { return std::string("TheoremNoLocalObstruction"); },
                        [](const cert::L24MinimalPoFConvex&) { return std::string("L24MinimalPoFConvex"); },
                        [](const cert::L24MinimalPoFSprocket&) { return std::string("L24MinimalPoFSprocket"); },
                        [](const cert::NoTwoSimplexNerve&) { return std::string("NoTwoSimplexNerve"); },
                        [](const cert::Monotonicity&) { return std::string("Monotonicity"); },
                        [](const cert::IndeterminateLink&) { return std::string("IndeterminateLink"); },
                        [](const cert::DisconnectedDecomposition&) { return std::string("DisconnectedDecomposition"); },
                    },
                    c);
}

std::string to_string(const Certificate& c) {
  return std::visit(
      overloaded{
          [](const cert::MaxIntersectionComplete&) { return std::string("MaxIntersectionComplete"); },
          [](const cert::LocalObstruction& x) { return "LocalObstruction(" + to_string(x.face) + ")"; },
          [](const cert::Sprocket& x) { return "Sprocket" + to_string(x.sprocket); },
          [](const cert::TheoremNoLocalObstruction& x) {
            return "TheoremNoLocalObstruction(" + (x.cls ? x.cls->name() : std::string("<=3-maximal")) + ")";
          },
          [](const cert::L24MinimalPoFConvex&) { return std::string("L24MinimalPoFConvex"); },
          [](const cert::L24MinimalPoFSprocket& x) { return "L24MinimalPoFSprocket" + to_string(x.sprocket); },
          [](const cert::NoTwoSimplexNerve&) { return std::string("NoTwoSimplexNerve"); },
          [](const cert::Monotonicity& x) { return "Monotonicity(" + format_code(x.base) + ")"; },
          [](const cert::IndeterminateLink& x) {
            std::string out;
            for (Codeword f : x.faces) out += (out.empty() ? "" : ",") + to_string(f);
            return "IndeterminateLink(" + out + ")";
          },
          [](const cert::DisconnectedDecomposition& x) { return "DisconnectedDecomposition(" + verdicts_of(x) + ")"; },
      },
      c);
}

namespace {

// Codewords lying under one of the given facets.
NeuralCode subcode(const NeuralCode& code, const std::vector<Codeword>& facets) {
  std::vector<Codeword> words;
  for (Codeword c : code.codewords())
    if (is_face(facets, c)) words.push_back(c);
  return NeuralCode(std::move(words), code.neurons());
}

std::vector<std::vector<Codeword>> nerve_components(const std::vector<Codeword>& facets) {
  std::vector<int> comp(facets.size(), -1);
  int count = 0;
  for (std::size_t s = 0; s < facets.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < facets.size(); ++j)
        if (comp[j] < 0 && facets[i].intersects(facets[j])) {
          comp[j] = count;
          stack.push_back(j);
        }
    }
    ++count;
  }
  std::vector<std::vector<Codeword>> out(count);
  for (std::size_t i = 0; i < facets.size(); ++i) out[comp[i]].push_back(facets[i]);
  return out;
}

// Minimal code of the facets, over the same neuron count as the code.
NeuralCode minimal_over(const std::vector<Codeword>& facets, int neurons) {
  NeuralCode base = minimal_code(facets);
  return NeuralCode(std::vector<Codeword>(base.codewords().begin(), base.codewords().end()), neurons);
}

void convex_by_theorem(Decision& d, const NeuralCode& code, const std::vector<Codeword>& facets,
                       std::optional<NerveClass> cls) {
  d.verdict = Verdict::Convex;
  d.certificates.push_back(cert::TheoremNoLocalObstruction{cls});
  NeuralCode base = minimal_over(facets, code.neurons());
  if (code != base) d.certificates.push_back(cert::Monotonicity{base});
}

void search_sprocket(Decision& d, const NeuralCode& code, const DecideOptions& opts) {
  d.checks.push_back("sprocket search");
  SprocketSearch s = find_sprocket(code, opts.sprocket_budget);
  if (s.sprocket) {
    d.verdict = Verdict::NonConvex;
    d.certificates.push_back(cert::Sprocket{*s.sprocket});
  } else {
    d.verdict = Verdict::Unknown;
    d.checks.push_back(s.budget_exhausted ? "sprocket search budget exhausted" : "no sprocket in search space");
  }
}

bool same_faces(const NeuralCode& a, const NeuralCode& b) { return maximal_codewords(a) == maximal_codewords(b); }

}  // namespace

Decision decide(const NeuralCode& code, const DecideOptions& opts) {
  Decision d;
  d.checks.push_back("local obstruction");
  ObstructionCheck obs = local_obstruction(code);
  if (obs.obstruction) {
    d.verdict = Verdict::NonConvex;
    d.certificates.push_back(cert::LocalObstruction{*obs.obstruction});
    return d;
  }

  d.checks.push_back("max-intersection completeness");
  if (is_max_intersection_complete(code).complete) {
    d.verdict = Verdict::Convex;
    d.certificates.push_back(cert::MaxIntersectionComplete{});
    return d;
  }

  std::vector<Codeword> facets = maximal_codewords(code);
  std::size_t m = facets.size();

  if (!obs.undecided.empty()) {
    search_sprocket(d, code, opts);
    if (d.verdict == Verdict::Unknown) d.certificates.push_back(cert::IndeterminateLink{obs.undecided});
    return d;
  }

  if (m <= 3) {
    d.checks.push_back("at most three maximal codewords");
    convex_by_theorem(d, code, facets, std::nullopt);
    return d;
  }

  if (m == 4) {
    Classification cl = classify_small_complex(code_nerve(facets));
    d.checks.push_back("nerve class " + cl.cls.name());
    if (cl.cls.id <= 23) {
      convex_by_theorem(d, code, facets, cl.cls);
      return d;
    }
    if (cl.cls.id == 24 && code == minimal_over(facets, code.neurons())) {
      auto s = canonical_l24_sprocket(code);
      if (!s) {
        d.verdict = Verdict::Convex;
        d.certificates.push_back(cert::L24MinimalPoFConvex{});
      } else {
        d.verdict = Verdict::NonConvex;
        d.certificates.push_back(cert::L24MinimalPoFSprocket{*s});
      }
      return d;
    }
    search_sprocket(d, code, opts);
    return d;
  }

  SimplicialComplex n = code_nerve(facets);
  if (n.dimension() < 2) {
    d.verdict = Verdict::Convex;
    d.certificates.push_back(cert::NoTwoSimplexNerve{});
    return d;
  }
  if (!n.connected()) {
    d.checks.push_back("disconnected nerve");
    cert::DisconnectedDecomposition dd;
    bool all_convex = true, any_nonconvex = false;
    for (const auto& comp : nerve_components(facets)) {
      NeuralCode sub = subcode(code, comp);
      Decision sd = decide(sub, opts);
      all_convex = all_convex && sd.verdict == Verdict::Convex;
      any_nonconvex = any_nonconvex || sd.verdict == Verdict::NonConvex;
      dd.components.push_back({sub, std::move(sd)});
    }
    d.verdict = all_convex ? Verdict::Convex : any_nonconvex ? Verdict::NonConvex : Verdict::Unknown;
    d.certificates.push_back(std::move(dd));
    return d;
  }
  search_sprocket(d, code, opts);
  return d;
}

bool replay_certificate(const NeuralCode& code, const Certificate& c) {
  std::vector<Codeword> facets = maximal_codewords(code);
  return std::visit(
      overloaded{
          [&](const cert::MaxIntersectionComplete&) { return is_max_intersection_complete(code).complete; },
          [&](const cert::LocalObstruction& x) {
            return !code.contains(x.face) && is_face(facets, x.face) &&
                   link_contractibility(facets, x.face) == Contractibility::NotContractible;
          },
          [&](const cert::Sprocket& x) { return bool(is_sprocket(code, x.sprocket)); },
          [&](const cert::TheoremNoLocalObstruction& x) {
            if (local_obstruction(code).obstruction) return false;
            if (!x.cls) return facets.size() <= 3;
            if (facets.size() != 4 || x.cls->id > 23) return false;
            return classify_small_complex(code_nerve(facets)).cls == *x.cls;
          },
          [&](const cert::L24MinimalPoFConvex&) {
            if (facets.size() != 4 || classify_small_complex(code_nerve(facets)).cls.id != 24) return false;
            return code == minimal_over(facets, code.neurons()) && !canonical_l24_sprocket(code);
          },
          [&](const cert::L24MinimalPoFSprocket& x) {
            if (facets.size() != 4 || classify_small_complex(code_nerve(facets)).cls.id != 24) return false;
            return bool(is_sprocket(code, x.sprocket));
          },
          [&](const cert::NoTwoSimplexNerve&) {
            return !local_obstruction(code).obstruction && code_nerve(facets).dimension() < 2;
          },
          [&](const cert::Monotonicity& x) {
            for (Codeword w : x.base.codewords())
              if (!code.contains(w)) return false;
            return same_faces(code, x.base) && decide(x.base).verdict == Verdict::Convex;
          },
          [&](const cert::IndeterminateLink& x) {
            return std::all_of(x.faces.begin(), x.faces.end(), [&](Codeword f) {
              return link_contractibility(facets, f) == Contractibility::Indeterminate;
            });
          },
          [&](const cert::DisconnectedDecomposition& x) {
            if (code_nerve(facets).connected()) return false;
            std::size_t total = 0;
            for (const auto& comp : x.components) {
              total += maximal_codewords(comp.code).size();
              for (Codeword w : comp.code.codewords())
                if (!code.contains(w)) return false;
              if (decide(comp.code).verdict != comp.decision.verdict) return false;
            }
            return total == facets.size();
          },
      },
      c);
}

}  // namespace ncode
