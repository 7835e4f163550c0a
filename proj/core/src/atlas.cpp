#include "ncode/atlas.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ncode/topology.hpp"

namespace ncode {

std::vector<std::vector<Codeword>> facet_antichain_orbits(int max_neurons, int facet_count) {
  if (facet_count < 1 || facet_count > 6) throw std::invalid_argument("facet count must be 1..6");
  if (max_neurons < 1 || max_neurons > Codeword::kMaxIndex) throw std::invalid_argument("neuron bound must be 1..64");
  const int regions = (1 << facet_count) - 1;  // region r (1-based) = set of facets containing the neuron

  std::vector<std::vector<int>> perms;
  std::vector<int> p(facet_count);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> region_maps;
  for (const auto& q : perms) {
    std::vector<int> map(regions + 1, 0);
    for (int r = 1; r <= regions; ++r) {
      int t = 0;
      for (int j = 0; j < facet_count; ++j)
        if (r & (1 << j)) t |= 1 << q[j];
      map[r] = t;
    }
    region_maps.push_back(std::move(map));
  }

  std::vector<std::vector<Codeword>> out;
  std::vector<int> counts(regions + 1, 0);
  std::vector<int> image(regions + 1, 0);

  auto emit = [&]() {
    // keep the lexicographically least vector of each orbit
    for (const auto& map : region_maps) {
      for (int r = 1; r <= regions; ++r) image[map[r]] = counts[r];
      if (std::lexicographical_compare(image.begin() + 1, image.end(), counts.begin() + 1, counts.end())) return;
    }
    std::vector<Codeword> facets(facet_count);
    int neuron = 0;
    for (int r = 1; r <= regions; ++r)
      for (int c = 0; c < counts[r]; ++c) {
        ++neuron;
        for (int j = 0; j < facet_count; ++j)
          if (r & (1 << j)) facets[j].insert(neuron);
      }
    std::sort(facets.begin(), facets.end());
    if (std::adjacent_find(facets.begin(), facets.end()) != facets.end()) return;
    if (!is_antichain(facets)) return;
    out.push_back(std::move(facets));
  };

  auto rec = [&](auto&& self, int r, int left) -> void {
    if (r > regions) {
      if (left < max_neurons) emit();
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[r] = c;
      self(self, r + 1, left - c);
    }
    counts[r] = 0;
  };
  rec(rec, 1, max_neurons);
  return out;
}

std::vector<AtlasRow> atlas(const AtlasOptions& opts) {
  if (!opts.unsafe && (opts.max_neurons > kAtlasNeuronCap || opts.facet_count > kAtlasFacetCap))
    throw std::invalid_argument("atlas limited to N <= 6 and K <= 4 without --unsafe");
  std::vector<AtlasRow> rows;
  for (const auto& facets : facet_antichain_orbits(opts.max_neurons, opts.facet_count)) {
    NeuralCode base = minimal_code(facets);
    std::vector<Codeword> optional;
    for (Codeword s : max_intersection_faces(facets))
      if (!base.contains(s)) optional.push_back(s);
    std::size_t variants = opts.minimal_only ? 1 : std::size_t{1} << optional.size();
    std::string nerve_class =
        facets.size() <= 4 ? classify_small_complex(code_nerve(facets)).cls.name() : std::string("-");
    std::set<std::string> seen;
    for (std::size_t s = 0; s < variants; ++s) {
      std::vector<Codeword> words(base.codewords().begin(), base.codewords().end());
      for (std::size_t b = 0; b < optional.size(); ++b)
        if (s & (std::size_t{1} << b)) words.push_back(optional[b]);
      NeuralCode code(std::move(words));
      std::string text = format_code(canonicalize(code).code, {.force_braces = true});
      if (!seen.insert(text).second) continue;
      Decision d = decide(code);
      AtlasRow row;
      row.code = text;
      row.neurons = code.neurons();
      row.facets = int(facets.size());
      row.nerve_class = nerve_class;
      row.minimal = s == 0;
      row.verdict = d.verdict;
      row.certificate = d.certificates.empty() ? std::string() : certificate_kind(d.certificates.front());
      for (const auto& c : d.certificates) {
        if (const auto* x = std::get_if<cert::Sprocket>(&c)) row.sprocket = to_string(x->sprocket);
        if (const auto* x = std::get_if<cert::L24MinimalPoFSprocket>(&c)) row.sprocket = to_string(x->sprocket);
      }
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const AtlasRow& a, const AtlasRow& b) {
    if (a.neurons != b.neurons) return a.neurons < b.neurons;
    return a.code < b.code;
  });
  return rows;
}

namespace {

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string atlas_csv(const std::vector<AtlasRow>& rows) {
  std::string out = "code,n,facets,nerve_class,minimal,verdict,certificate,sprocket\n";
  for (const auto& r : rows) {
    out += quoted(r.code) + "," + std::to_string(r.neurons) + "," + std::to_string(r.facets) + "," + r.nerve_class +
           "," + (r.minimal ? "yes" : "no") + "," + to_string(r.verdict) + "," + r.certificate + "," +
           quoted(r.sprocket) + "\n";
  }
  return out;
}

std::map<std::pair<std::string, std::string>, int> atlas_summary(const std::vector<AtlasRow>& rows) {
  std::map<std::pair<std::string, std::string>, int> out;
  for (const auto& r : rows) ++out[{r.nerve_class, to_string(r.verdict)}];
  return out;
}

}  // namespace ncode
