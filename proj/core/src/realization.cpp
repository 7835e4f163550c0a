#include "ncode/realization.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ncode {

std::vector<RegionProblem> validate_realization(const Realization& r) {
  std::vector<RegionProblem> out;
  if (r.dimension != 1 && r.dimension != 2) out.push_back({0, "dimension must be 1 or 2"});
  for (const auto& [neuron, region] : r.regions) {
    if (neuron < 1 || neuron > Codeword::kMaxIndex) {
      out.push_back({neuron, "neuron index outside 1..64"});
      continue;
    }
    if (const auto* iv = std::get_if<Interval>(&region)) {
      if (r.dimension != 1) out.push_back({neuron, "interval in a planar realization"});
      if (!(iv->lo < iv->hi)) out.push_back({neuron, "empty interval"});
    } else {
      const auto& pg = std::get<Polygon>(region);
      if (r.dimension != 2) out.push_back({neuron, "polygon in a one-dimensional realization"});
      if (auto d = polygon_defect(pg)) out.push_back({neuron, *d});
    }
  }
  return out;
}

namespace {

std::vector<Codeword> code_1d(const Realization& r) {
  std::map<Rational, std::pair<Codeword, Codeword>> events;  // opens, closes
  for (const auto& [neuron, region] : r.regions) {
    const auto& iv = std::get<Interval>(region);
    if (!(iv.lo < iv.hi)) continue;
    events[iv.lo].first.insert(neuron);
    events[iv.hi].second.insert(neuron);
  }
  std::vector<Codeword> words{Codeword{}};
  Codeword active;
  for (const auto& [x, ev] : events) {
    words.push_back(active - ev.second);
    active = (active - ev.second) | ev.first;
    words.push_back(active);
  }
  return words;
}

struct Line {
  // a*x + b*y = c with (b == 1) or (a == 1 and b == 0)
  Rational a, b, c;
  bool vertical() const { return b == 0; }
  bool operator<(const Line& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

Line line_through(const Point& p, const Point& q) {
  Rational a = q.y - p.y, b = p.x - q.x;
  Rational c = a * p.x + b * p.y;
  if (b != 0) return {a / b, 1, c / b};
  return {1, 0, c / a};
}

std::vector<Rational> samples(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.empty()) return {Rational(0)};
  std::vector<Rational> out;
  out.push_back(v.front() - 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
    if (i + 1 < v.size()) out.push_back((v[i] + v[i + 1]) / 2);
  }
  out.push_back(v.back() + 1);
  return out;
}

std::vector<Codeword> code_2d(const Realization& r) {
  struct Box {
    int neuron;
    const Polygon* poly;
    Rational x0, x1, y0, y1;
  };
  std::vector<Box> boxes;
  std::set<Line> lines;
  for (const auto& [neuron, region] : r.regions) {
    const auto& pg = std::get<Polygon>(region);
    if (pg.vertices.size() < 3) continue;
    Box b{neuron, &pg, pg.vertices[0].x, pg.vertices[0].x, pg.vertices[0].y, pg.vertices[0].y};
    for (std::size_t i = 0; i < pg.vertices.size(); ++i) {
      const Point& p = pg.vertices[i];
      const Point& q = pg.vertices[(i + 1) % pg.vertices.size()];
      b.x0 = std::min(b.x0, p.x), b.x1 = std::max(b.x1, p.x);
      b.y0 = std::min(b.y0, p.y), b.y1 = std::max(b.y1, p.y);
      if (!(p == q)) lines.insert(line_through(p, q));
    }
    boxes.push_back(std::move(b));
  }
  std::vector<Line> slanted;
  std::vector<Rational> xs;
  for (const Line& l : lines) {
    if (l.vertical())
      xs.push_back(l.c);
    else
      slanted.push_back(l);
  }
  // y = c - a*x on slanted lines
  for (std::size_t i = 0; i < slanted.size(); ++i)
    for (std::size_t j = i + 1; j < slanted.size(); ++j)
      if (slanted[i].a != slanted[j].a) xs.push_back((slanted[i].c - slanted[j].c) / (slanted[i].a - slanted[j].a));

  std::set<Codeword> words{Codeword{}};
  for (const Rational& x : samples(std::move(xs))) {
    std::vector<Rational> ys;
    for (const Line& l : slanted) ys.push_back(l.c - l.a * x);
    for (const Rational& y : samples(std::move(ys))) {
      Point q{x, y};
      Codeword w;
      for (const Box& b : boxes)
        if (b.x0 < x && x < b.x1 && b.y0 < y && y < b.y1 && strictly_inside(*b.poly, q)) w.insert(b.neuron);
      words.insert(w);
    }
  }
  return {words.begin(), words.end()};
}

}  // namespace

NeuralCode code_of_realization(const Realization& r, std::optional<int> neurons) {
  for (const auto& [neuron, region] : r.regions) {
    bool is_interval = std::holds_alternative<Interval>(region);
    if (is_interval != (r.dimension == 1)) throw std::invalid_argument("region type does not match dimension");
  }
  std::vector<Codeword> words = r.dimension == 1 ? code_1d(r) : code_2d(r);
  int max_neuron = r.regions.empty() ? 0 : r.regions.rbegin()->first;
  return NeuralCode(std::move(words), std::max(neurons.value_or(0), max_neuron));
}

VerifyResult verify_realization(const Realization& r, const NeuralCode& target) {
  VerifyResult out;
  out.problems = validate_realization(r);
  // a neuron that never fires may be left out: its region is empty
  target.support().for_each([&](int i) {
    if (!r.regions.count(i)) out.problems.push_back({i, "no region"});
  });
  for (const auto& [neuron, region] : r.regions)
    if (neuron > target.neurons()) out.problems.push_back({neuron, "neuron not in the target code"});
  bool structural = std::any_of(out.problems.begin(), out.problems.end(), [](const RegionProblem& p) {
    return p.reason.find("dimension") != std::string::npos || p.reason.find("in a") != std::string::npos;
  });
  if (!structural) {
    NeuralCode got = code_of_realization(r);
    for (Codeword c : target.codewords())
      if (!got.contains(c)) out.missing.push_back(c);
    for (Codeword c : got.codewords())
      if (!target.contains(c)) out.extra.push_back(c);
  }
  out.ok = out.problems.empty() && out.missing.empty() && out.extra.empty();
  return out;
}

std::string realization_to_json(const Realization& r, int indent) {
  nlohmann::ordered_json j;
  j["dimension"] = r.dimension;
  j["regions"] = nlohmann::ordered_json::array();
  for (const auto& [neuron, region] : r.regions) {
    nlohmann::ordered_json e;
    e["neuron"] = neuron;
    if (const auto* iv = std::get_if<Interval>(&region)) {
      e["interval"] = {to_string(iv->lo), to_string(iv->hi)};
    } else {
      auto poly = nlohmann::ordered_json::array();
      for (const Point& p : std::get<Polygon>(region).vertices) poly.push_back({to_string(p.x), to_string(p.y)});
      e["polygon"] = poly;
    }
    j["regions"].push_back(e);
  }
  return j.dump(indent);
}

namespace {

Rational rational_of(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument("coordinates must be rational strings or integers");
}

}  // namespace

Realization realization_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("realization JSON: ") + e.what());
  }
  try {
    Realization r;
    r.dimension = j.at("dimension").get<int>();
    for (const auto& e : j.at("regions")) {
      int neuron = e.at("neuron").get<int>();
      if (r.regions.count(neuron)) throw std::invalid_argument("duplicate region for neuron " + std::to_string(neuron));
      if (e.contains("interval")) {
        const auto& iv = e.at("interval");
        if (iv.size() != 2) throw std::invalid_argument("interval needs two endpoints");
        r.regions[neuron] = Interval{rational_of(iv[0]), rational_of(iv[1])};
      } else {
        Polygon p;
        for (const auto& v : e.at("polygon")) {
          if (v.size() != 2) throw std::invalid_argument("polygon vertex needs two coordinates");
          p.vertices.push_back({rational_of(v[0]), rational_of(v[1])});
        }
        r.regions[neuron] = std::move(p);
      }
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("realization JSON: ") + e.what());
  }
}

std::string realization_to_svg(const Realization& r) {
  static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  const double width = 640, pad = 24;
  std::ostringstream out;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool first = true;
  auto extend = [&](double x, double y) {
    if (first) x0 = x1 = x, y0 = y1 = y, first = false;
    x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
  };
  int row = 0;
  for (const auto& [neuron, region] : r.regions) {
    if (const auto* iv = std::get_if<Interval>(&region)) {
      extend(iv->lo.get_d(), 0);
      extend(iv->hi.get_d(), 0);
    } else {
      for (const Point& p : std::get<Polygon>(region).vertices) extend(p.x.get_d(), p.y.get_d());
    }
  }
  double scale = (width - 2 * pad) / std::max(x1 - x0, 1e-9);
  double height = r.dimension == 1 ? 2 * pad + 18.0 * r.regions.size() : 2 * pad + (y1 - y0) * scale;
  auto sx = [&](double x) { return pad + (x - x0) * scale; };
  auto sy = [&](double y) { return height - pad - (y - y0) * scale; };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (const auto& [neuron, region] : r.regions) {
    const char* color = kPalette[(neuron - 1) % 10];
    if (const auto* iv = std::get_if<Interval>(&region)) {
      double y = pad + 18.0 * row++;
      out << "  <rect x=\"" << sx(iv->lo.get_d()) << "\" y=\"" << y << "\" width=\""
          << Rational(iv->hi - iv->lo).get_d() * scale << "\" height=\"12\" fill=\"" << color << "\" fill-opacity=\"0.5\"/>\n";
      out << "  <text x=\"" << sx(iv->lo.get_d()) + 3 << "\" y=\"" << y + 10 << "\" font-size=\"10\">" << neuron
          << "</text>\n";
    } else {
      const auto& v = std::get<Polygon>(region).vertices;
      double cx = 0, cy = 0;
      out << "  <polygon points=\"";
      for (const Point& p : v) {
        out << sx(p.x.get_d()) << "," << sy(p.y.get_d()) << " ";
        cx += p.x.get_d() / v.size();
        cy += p.y.get_d() / v.size();
      }
      out << "\" fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\"" << color << "\"/>\n";
      out << "  <text x=\"" << sx(cx) << "\" y=\"" << sy(cy) << "\" font-size=\"12\">" << neuron << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ncode
