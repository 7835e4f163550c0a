#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncode/ncode.hpp"

namespace {

// Exit statuses shared by all subcommands.
enum Exit : int {
  kConvex = 0,
  kNonConvex = 1,
  kUnknown = 2,
  kNotCovered = 3,
  kVerificationFailed = 4,
  kPrecondition = 5,
  kInputError = 64,
};

int verdict_exit(ncode::Verdict v) {
  switch (v) {
    case ncode::Verdict::Convex: return kConvex;
    case ncode::Verdict::NonConvex: return kNonConvex;
    default: return kUnknown;
  }
}

ncode::NeuralCode read_code(const std::string& arg) {
  if (arg == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return ncode::parse_code(text);
  }
  return ncode::parse_code(arg);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << body;
}

int cmd_decide(const std::string& text, bool as_json, std::size_t budget) {
  auto code = read_code(text);
  if (as_json) {
    auto r = ncode::analyze(code, {budget, false});
    std::cout << ncode::report_to_json(r) << "\n";
    return verdict_exit(r.decision.verdict);
  }
  auto d = ncode::decide(code, {budget});
  {
    std::cout << ncode::to_string(d.verdict) << "\n";
    for (const auto& c : d.certificates) std::cout << "  " << ncode::to_string(c) << "\n";
    if (d.verdict == ncode::Verdict::Unknown)
      for (const auto& c : d.checks) std::cout << "  checked: " << c << "\n";
  }
  return verdict_exit(d.verdict);
}

int cmd_analyze(const std::string& text, bool as_json, std::size_t budget) {
  auto code = read_code(text);
  auto r = ncode::analyze(code, {budget, true});
  std::cout << (as_json ? ncode::report_to_json(r) + "\n" : ncode::report_to_text(r));
  return verdict_exit(r.decision.verdict);
}

int cmd_realize(const std::string& text, const std::string& out_format, const std::string& svg_path) {
  auto code = read_code(text);
  ncode::BuildOutcome b;
  try {
    b = ncode::build_realization(code);
  } catch (const ncode::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  if (!b.built) {
    for (const auto& c : ncode::decide(code).certificates) std::cout << ncode::to_string(c) << "\n";
    std::cerr << "not covered: " << ncode::to_string(b.reason) << "\n";
    return kNotCovered;
  }
  const auto& r = b.built->realization;
  auto v = ncode::verify_realization(r, code);
  if (!v.ok) {
    std::cerr << "internal error: constructed realization does not reproduce the code\n";
    return kVerificationFailed;
  }
  if (!svg_path.empty()) write_file(svg_path, ncode::realization_to_svg(r));
  if (out_format == "svg") {
    std::cout << ncode::realization_to_svg(r);
  } else {
    auto j = nlohmann::ordered_json::parse(ncode::realization_to_json(r));
    nlohmann::ordered_json out{{"construction", ncode::to_string(b.built->tag)}};
    out["dimension"] = j["dimension"];
    out["regions"] = j["regions"];
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& text, const std::string& realization_path) {
  auto code = read_code(text);
  auto r = ncode::realization_from_json(realization_path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                                                : slurp(realization_path));
  auto v = ncode::verify_realization(r, code);
  bool braced = code.neurons() >= 10;
  for (const auto& p : v.problems) std::cout << "region " << p.neuron << ": " << p.reason << "\n";
  for (auto c : v.missing) std::cout << "missing " << (c.empty() ? "{}" : ncode::to_string(c, braced)) << "\n";
  for (auto c : v.extra) std::cout << "extra " << (c.empty() ? "{}" : ncode::to_string(c, braced)) << "\n";
  std::cout << (v.ok ? "OK" : "MISMATCH") << "\n";
  return v.ok ? 0 : 1;
}

int cmd_nerve(const std::string& text, bool as_json) {
  auto code = read_code(text);
  auto facets = ncode::maximal_codewords(code);
  if (facets.empty()) {
    std::cout << (as_json ? "{\"facets\":[],\"nerve\":[]}\n" : "empty code: no facets\n");
    return 0;
  }
  auto n = ncode::code_nerve(facets);
  std::optional<ncode::Classification> cl;
  if (facets.size() <= 4) cl = ncode::classify_small_complex(n);
  if (as_json) {
    nlohmann::ordered_json j;
    j["facets"] = nlohmann::ordered_json::array();
    for (auto f : facets) j["facets"].push_back(f.indices());
    j["nerve"] = nlohmann::ordered_json::array();
    for (auto f : n.facets()) j["nerve"].push_back(f.indices());
    j["class"] = cl ? nlohmann::ordered_json(cl->cls.name()) : nlohmann::ordered_json(nullptr);
    j["relabeling"] = cl ? nlohmann::ordered_json(cl->relabeling) : nlohmann::ordered_json(nullptr);
    j["contractible"] = cl ? nlohmann::ordered_json(cl->contractible) : nlohmann::ordered_json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  bool braced = code.neurons() >= 10;
  for (std::size_t i = 0; i < facets.size(); ++i)
    std::cout << "F" << i + 1 << " = " << ncode::to_string(facets[i], braced) << "\n";
  std::cout << "nerve facets:";
  for (auto f : n.facets()) {
    std::cout << " {";
    bool first = true;
    f.for_each([&](int v) {
      std::cout << (first ? "" : ",") << "F" << v;
      first = false;
    });
    std::cout << "}";
  }
  std::cout << "\n";
  if (cl) {
    std::cout << "class: " << cl->cls.name() << (cl->contractible ? " (contractible)" : " (not contractible)") << "\n";
    std::cout << "relabeling:";
    for (std::size_t i = 0; i < cl->relabeling.size(); ++i) std::cout << " F" << i + 1 << "->" << cl->relabeling[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_atlas(int neurons, int facets, bool minimal_only, bool unsafe, bool meta) {
  auto rows = ncode::atlas({neurons, facets, minimal_only, unsafe});
  if (meta) {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    std::cout << "# ncode atlas N=" << neurons << " K=" << facets << (minimal_only ? " minimal-only" : "")
              << " generated " << stamp << "\n";
  }
  std::cout << ncode::atlas_csv(rows);
  std::cerr << "summary (class, verdict, count):\n";
  for (const auto& [key, count] : ncode::atlas_summary(rows))
    std::cerr << "  " << key.first << " " << key.second << " " << count << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convexity of combinatorial neural codes"};
  app.require_subcommand(1);

  std::string code_text;
  bool as_json = false;
  std::size_t budget = ncode::kDefaultSprocketBudget;

  auto* decide = app.add_subcommand("decide", "Decide convexity and print certificates");
  decide->add_option("code", code_text, "Code text, or - for stdin")->required();
  decide->add_flag("--json", as_json, "Emit JSON");
  decide->add_option("--budget", budget, "Sprocket search budget");

  auto* analyze = app.add_subcommand("analyze", "Full report: nerve, mandatory faces, verdict, realization");
  analyze->add_option("code", code_text, "Code text, or - for stdin")->required();
  analyze->add_flag("--json", as_json, "Emit JSON");
  analyze->add_option("--budget", budget, "Sprocket search budget");

  std::string out_format = "json", svg_path;
  auto* realize = app.add_subcommand("realize", "Build and verify an explicit convex realization");
  realize->add_option("code", code_text, "Code text, or - for stdin")->required();
  realize->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"json", "svg"}));
  realize->add_option("--svg", svg_path, "Also write an SVG drawing to this path");

  std::string realization_path;
  auto* verify = app.add_subcommand("verify", "Check a realization JSON against a code");
  verify->add_option("code", code_text, "Code text")->required();
  verify->add_option("realization", realization_path, "Realization JSON file, or - for stdin")->required();

  auto* nerve = app.add_subcommand("nerve", "Nerve of the maximal codewords and its class");
  nerve->add_option("code", code_text, "Code text, or - for stdin")->required();
  nerve->add_flag("--json", as_json, "Emit JSON");

  int neurons = 4, facets = 3;
  bool minimal_only = false, unsafe = false, meta = false;
  auto* atlas = app.add_subcommand("atlas", "Enumerate codes up to relabeling as CSV");
  atlas->add_option("--neurons,-N", neurons, "Largest neuron count")->check(CLI::PositiveNumber);
  atlas->add_option("--facets,-K", facets, "Number of maximal codewords")->check(CLI::PositiveNumber);
  atlas->add_flag("--minimal-only", minimal_only, "Only minimal codes");
  atlas->add_flag("--unsafe", unsafe, "Allow N > 6 or K > 4");
  atlas->add_flag("--meta", meta, "Prepend a commented provenance line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*decide) return cmd_decide(code_text, as_json, budget);
    if (*analyze) return cmd_analyze(code_text, as_json, budget);
    if (*realize) return cmd_realize(code_text, out_format, svg_path);
    if (*verify) return cmd_verify(code_text, realization_path);
    if (*nerve) return cmd_nerve(code_text, as_json);
    if (*atlas) return cmd_atlas(neurons, facets, minimal_only, unsafe, meta);
  } catch (const ncode::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
