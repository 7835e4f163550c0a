#include "ncode/wheels.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "ncode/topology.hpp"

namespace ncode {

std::string to_string(const SprocketCandidate& s) {
  auto w = [](Codeword c) { return c.empty() ? std::string("{}") : to_string(c); };
  return "((" + w(s.sigmas[0]) + "," + w(s.sigmas[1]) + "," + w(s.sigmas[2]) + "," + w(s.sigmas[3]) + "),(" +
         w(s.rhos[0]) + "," + w(s.rhos[1]) + "))";
}

std::string to_string(WheelCondition c) {
  switch (c) {
    case WheelCondition::P1: return "P(i)";
    case WheelCondition::P2: return "P(ii)";
    case WheelCondition::P3: return "P(iii)";
    case WheelCondition::S1: return "S(1)";
    case WheelCondition::S2: return "S(2)";
    case WheelCondition::S3: return "S(3)";
  }
  return "?";
}

namespace {

// Trunks as bitsets over codeword positions.
class Trunks {
 public:
  using Bits = std::vector<std::uint64_t>;

  explicit Trunks(const NeuralCode& code)
      : words_(code.codewords().begin(), code.codewords().end()), facets_(maximal_codewords(code)) {}

  const Bits& of(Codeword s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    Bits b((words_.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (s.subset_of(words_[i])) b[i / 64] |= std::uint64_t{1} << (i % 64);
    return cache_.emplace(s, std::move(b)).first->second;
  }

  bool face(Codeword s) const { return is_face(facets_, s); }
  const std::vector<Codeword>& facets() const { return facets_; }

  static bool subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] & ~b[i]) return false;
    return true;
  }
  static bool subset_of_union(const Bits& a, const Bits& b, const Bits& c) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] & ~(b[i] | c[i])) return false;
    return true;
  }

 private:
  std::vector<Codeword> words_;
  std::vector<Codeword> facets_;
  std::unordered_map<Codeword, Bits> cache_;
};

WheelCheck fail(WheelCondition c) { return WheelCheck{false, c}; }

WheelCheck partial_wheel(Trunks& tk, const std::array<Codeword, 4>& s) {
  auto [s1, s2, s3, tau] = s;
  Codeword u = s1 | s2 | s3;
  if (!tk.face(u)) return fail(WheelCondition::P1);
  const auto& tu = tk.of(u);
  if (tk.of(s1 | s2) != tu || tk.of(s1 | s3) != tu || tk.of(s2 | s3) != tu) return fail(WheelCondition::P1);
  if (tk.face(u | tau)) return fail(WheelCondition::P2);
  if (!tk.face(s1 | tau) || !tk.face(s2 | tau) || !tk.face(s3 | tau)) return fail(WheelCondition::P3);
  return {};
}

WheelCheck sprocket_extra(Trunks& tk, const SprocketCandidate& c) {
  auto [s1, s2, s3, tau] = c.sigmas;
  auto [r1, r3] = c.rhos;
  if (!Trunks::subset(tk.of(s1 | tau), tk.of(r1)) || !Trunks::subset(tk.of(s3 | tau), tk.of(r3)))
    return fail(WheelCondition::S1);
  if (!Trunks::subset_of_union(tk.of(tau), tk.of(r1), tk.of(r3))) return fail(WheelCondition::S2);
  if (!Trunks::subset(tk.of(r1 | r3 | tau), tk.of(s2))) return fail(WheelCondition::S3);
  return {};
}

}  // namespace

WheelCheck is_partial_wheel(const NeuralCode& code, const std::array<Codeword, 4>& sigmas) {
  Trunks tk(code);
  return partial_wheel(tk, sigmas);
}

WheelCheck is_sprocket(const NeuralCode& code, const SprocketCandidate& candidate) {
  Trunks tk(code);
  WheelCheck w = partial_wheel(tk, candidate.sigmas);
  if (!w) return w;
  return sprocket_extra(tk, candidate);
}

std::optional<SprocketCandidate> canonical_l24_sprocket(const NeuralCode& code) {
  std::vector<Codeword> f = maximal_codewords(code);
  if (f.size() != 4) throw std::invalid_argument("canonical sprocket needs exactly four maximal codewords");
  Classification cl = classify_small_complex(code_nerve(f));
  if (cl.cls.id != 24) throw std::invalid_argument("canonical sprocket needs an L24 nerve, got " + cl.cls.name());
  std::vector<Codeword> tri;
  Codeword outside;
  for (int j = 0; j < 4; ++j) {
    if (cl.relabeling[j] == 4)
      outside = f[j];
    else
      tri.push_back(f[j]);
  }
  auto pof = path_of_facets(tri[0], tri[1], tri[2]);
  if (!pof) return std::nullopt;
  Codeword f1 = tri[pof->a - 1], f2 = tri[pof->b - 1], f3 = tri[pof->c - 1];
  SprocketCandidate s;
  s.sigmas = {f1 & outside, f2 & outside, f3 & outside, f1 & f2 & f3};
  s.rhos = {f1 & f2, f3 & f2};
  return s;
}

namespace {

void bounded_search(const NeuralCode& code, std::size_t budget, SprocketSearch& out) {
  Trunks tk(code);
  const auto& facets = tk.facets();
  std::vector<Codeword> pool(facets.begin(), facets.end());
  for (Codeword s : max_intersection_faces(facets)) pool.push_back(s);
  Codeword support;
  for (Codeword f : facets) support |= f;
  std::vector<int> idx = support.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    pool.push_back(Codeword{idx[i]});
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      Codeword pair{idx[i], idx[j]};
      if (tk.face(pair)) pool.push_back(pair);
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  auto spend = [&]() {
    if (++out.evaluations > budget) {
      out.budget_exhausted = true;
      return false;
    }
    return true;
  };

  for (Codeword tau : pool) {
    std::vector<Codeword> with_tau;
    for (Codeword s : pool)
      if (tk.face(s | tau)) with_tau.push_back(s);
    for (Codeword s1 : with_tau)
      for (Codeword s2 : with_tau) {
        if (!tk.face(s1 | s2)) continue;
        for (Codeword s3 : with_tau) {
          if (s3 < s1) continue;  // sigma1 and sigma3 play symmetric roles
          if (!spend()) return;
          std::array<Codeword, 4> sig{s1, s2, s3, tau};
          if (!partial_wheel(tk, sig)) continue;
          const auto& t1 = tk.of(s1 | tau);
          const auto& t3 = tk.of(s3 | tau);
          for (Codeword r1 : pool) {
            if (!Trunks::subset(t1, tk.of(r1))) continue;
            for (Codeword r3 : pool) {
              if (!spend()) return;
              if (!Trunks::subset(t3, tk.of(r3))) continue;
              SprocketCandidate c{sig, {r1, r3}};
              if (sprocket_extra(tk, c)) {
                out.sprocket = c;
                return;
              }
            }
          }
        }
      }
  }
}

}  // namespace

SprocketSearch find_sprocket(const NeuralCode& code, std::size_t budget) {
  SprocketSearch out;
  std::vector<Codeword> facets = maximal_codewords(code);
  if (facets.size() < 3) return out;

  if (facets.size() == 4) {
    ++out.evaluations;
    if (classify_small_complex(code_nerve(facets)).cls.id == 24) {
      auto c = canonical_l24_sprocket(code);
      if (c && is_sprocket(code, *c)) {
        out.sprocket = c;
        return out;
      }
    }
  }

  // Neurons shared by every nonempty codeword form a cone point; strip them.
  Codeword common = Codeword::range(1, 64);
  for (Codeword c : code.codewords())
    if (!c.empty()) common &= c;
  if (!common.empty()) {
    std::vector<Codeword> stripped;
    for (Codeword c : code.codewords()) stripped.push_back(c - common);
    SprocketSearch inner = find_sprocket(NeuralCode(stripped, code.neurons()), budget);
    out.evaluations += inner.evaluations;
    if (inner.sprocket && is_sprocket(code, *inner.sprocket)) {
      out.sprocket = inner.sprocket;
      return out;
    }
    if (out.evaluations >= budget) {
      out.budget_exhausted = true;
      return out;
    }
  }

  std::size_t remaining = budget > out.evaluations ? budget - out.evaluations : 0;
  SprocketSearch generic;
  bounded_search(code, remaining, generic);
  out.evaluations += generic.evaluations;
  out.budget_exhausted = generic.budget_exhausted;
  out.sprocket = generic.sprocket;
  return out;
}

}  // namespace ncode
