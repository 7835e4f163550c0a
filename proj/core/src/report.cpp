#include "ncode/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ncode {

using json = nlohmann::ordered_json;

namespace {

json cw(Codeword c) { return c.indices(); }

json cws(std::span<const Codeword> v) {
  json a = json::array();
  for (Codeword c : v) a.push_back(cw(c));
  return a;
}

json sprocket_json(const SprocketCandidate& s) {
  return json{{"sigma", {cw(s.sigmas[0]), cw(s.sigmas[1]), cw(s.sigmas[2])}},
              {"tau", cw(s.sigmas[3])},
              {"rho", {cw(s.rhos[0]), cw(s.rhos[1])}}};
}

json decision_json(const Decision& d);

json certificate_json(const Certificate& c) {
  json j{{"kind", certificate_kind(c)}};
  if (const auto* x = std::get_if<cert::LocalObstruction>(&c)) j["face"] = cw(x->face);
  if (const auto* x = std::get_if<cert::Sprocket>(&c)) j["sprocket"] = sprocket_json(x->sprocket);
  if (const auto* x = std::get_if<cert::L24MinimalPoFSprocket>(&c)) j["sprocket"] = sprocket_json(x->sprocket);
  if (const auto* x = std::get_if<cert::TheoremNoLocalObstruction>(&c))
    j["class"] = x->cls ? x->cls->name() : std::string("<=3-maximal");
  if (const auto* x = std::get_if<cert::Monotonicity>(&c)) j["base"] = cws(x->base.codewords());
  if (const auto* x = std::get_if<cert::IndeterminateLink>(&c)) j["faces"] = cws(x->faces);
  if (const auto* x = std::get_if<cert::DisconnectedDecomposition>(&c)) {
    j["components"] = json::array();
    for (const auto& comp : x->components) {
      json e = decision_json(comp.decision);
      e["codewords"] = cws(comp.code.codewords());
      j["components"].push_back(e);
    }
  }
  return j;
}

json decision_json(const Decision& d) {
  json j{{"verdict", to_string(d.verdict)}, {"certificates", json::array()}, {"checks", d.checks}};
  for (const auto& c : d.certificates) j["certificates"].push_back(certificate_json(c));
  return j;
}

}  // namespace

Report analyze(const NeuralCode& code, const AnalyzeOptions& opts) {
  Report r;
  r.code = code;
  r.facets = maximal_codewords(code);
  if (!r.facets.empty() && r.facets.size() <= 4) r.nerve = classify_small_complex(code_nerve(r.facets));
  if (!r.facets.empty()) {
    r.mandatory = mandatory_faces(r.facets);
    if (r.mandatory.indeterminate.empty()) r.minimal = minimal_code(r.facets);
  } else {
    r.minimal = NeuralCode();
  }
  r.missing_max_intersections = is_max_intersection_complete(code).missing;
  for (std::size_t i = 0; i < r.facets.size(); ++i)
    for (std::size_t j = i + 1; j < r.facets.size(); ++j)
      for (std::size_t k = j + 1; k < r.facets.size(); ++k)
        r.path_of_facets.push_back({{int(i + 1), int(j + 1), int(k + 1)},
                                    path_of_facets(r.facets[i], r.facets[j], r.facets[k])});
  r.decision = decide(code, {opts.sprocket_budget});
  for (const auto& c : r.decision.certificates) {
    if (const auto* x = std::get_if<cert::Sprocket>(&c)) r.sprocket = x->sprocket;
    if (const auto* x = std::get_if<cert::L24MinimalPoFSprocket>(&c)) r.sprocket = x->sprocket;
  }
  if (!r.sprocket && r.decision.verdict != Verdict::Convex && r.facets.size() >= 3) {
    r.sprocket = find_sprocket(code, opts.sprocket_budget).sprocket;
  }
  r.sprocket_searched = r.facets.size() >= 3 && r.decision.verdict != Verdict::Convex;
  if (opts.build && r.decision.verdict == Verdict::Convex) {
    BuildOutcome b = build_realization(code);
    if (b.built)
      r.realization = std::move(b.built);
    else
      r.not_covered = b.reason;
  }
  return r;
}

std::string decision_to_json(const Decision& d, int indent) { return decision_json(d).dump(indent); }

std::string report_to_json(const Report& r, int indent) {
  json j;
  j["neurons"] = r.code.neurons();
  j["codewords"] = cws(r.code.codewords());
  j["facets"] = cws(r.facets);
  j["nerve_class"] = r.nerve ? json(r.nerve->cls.name()) : json(nullptr);
  j["nerve_relabeling"] = r.nerve ? json(r.nerve->relabeling) : json(nullptr);
  j["mandatory_faces"] = cws(r.mandatory.faces);
  if (!r.mandatory.indeterminate.empty()) j["indeterminate_faces"] = cws(r.mandatory.indeterminate);
  j["minimal_code"] = r.minimal ? cws(r.minimal->codewords()) : json(nullptr);
  j["missing_max_intersections"] = cws(r.missing_max_intersections);
  j["path_of_facets"] = json::array();
  for (const auto& t : r.path_of_facets) {
    json w = t.witness ? json{t.witness->a, t.witness->b, t.witness->c} : json(nullptr);
    j["path_of_facets"].push_back(json{{"facets", t.facets}, {"witness", w}});
  }
  j["sprocket"] = r.sprocket ? sprocket_json(*r.sprocket) : json(nullptr);
  json d = decision_json(r.decision);
  j["verdict"] = d["verdict"];
  j["certificates"] = d["certificates"];
  j["checks"] = d["checks"];
  if (r.realization) {
    json real = json::parse(realization_to_json(r.realization->realization));
    json out{{"construction", to_string(r.realization->tag)}};
    out["dimension"] = real["dimension"];
    out["regions"] = real["regions"];
    j["realization"] = out;
  } else {
    j["realization"] = nullptr;
  }
  if (r.not_covered) j["realization_status"] = to_string(*r.not_covered);
  return j.dump(indent);
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "code: " << format_code(r.code) << "\n";
  out << "neurons: " << r.code.neurons() << "\n";
  out << "facets:";
  for (Codeword f : r.facets) out << " " << to_string(f, r.code.neurons() >= 10);
  out << "\n";
  if (r.nerve) {
    out << "nerve: " << r.nerve->cls.name() << " relabeling";
    for (int v : r.nerve->relabeling) out << " " << v;
    out << (r.nerve->contractible ? " (contractible)" : " (not contractible)") << "\n";
  }
  out << "mandatory faces:";
  for (Codeword f : r.mandatory.faces) out << " " << to_string(f, r.code.neurons() >= 10);
  out << "\n";
  if (r.minimal) out << "minimal code: " << format_code(*r.minimal) << "\n";
  out << "missing max-intersections:";
  for (Codeword f : r.missing_max_intersections) out << " " << to_string(f, r.code.neurons() >= 10);
  out << "\n";
  for (const auto& t : r.path_of_facets) {
    out << "path of facets (" << t.facets[0] << "," << t.facets[1] << "," << t.facets[2] << "): ";
    if (t.witness)
      out << "(" << t.witness->a << "," << t.witness->b << "," << t.witness->c << ")\n";
    else
      out << "none\n";
  }
  if (r.sprocket) out << "sprocket: " << to_string(*r.sprocket) << "\n";
  out << "verdict: " << to_string(r.decision.verdict) << "\n";
  for (const auto& c : r.decision.certificates) out << "certificate: " << to_string(c) << "\n";
  if (r.realization)
    out << "realization: " << to_string(r.realization->tag) << " in dimension " << r.realization->realization.dimension
        << "\n";
  else if (r.not_covered)
    out << "realization: not covered (" << to_string(*r.not_covered) << ")\n";
  return out.str();
}

}  // namespace ncode
