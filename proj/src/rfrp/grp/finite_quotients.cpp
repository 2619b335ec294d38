#include "rfrp/grp/finite_quotients.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "rfrp/errors.hpp"

namespace rfrp::grp {

Perm perm_identity(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm perm_eval(const Word& w, const std::vector<Perm>& images, std::size_t degree) {
  Perm r = perm_identity(degree);
  for (Letter l : w.letters()) {
    const Perm& g = images.at(static_cast<std::size_t>(std::abs(l) - 1));
    r = perm_mul(r, l > 0 ? g : perm_inverse(g));
  }
  return r;
}

std::vector<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{perm_identity(degree)};
  std::vector<Perm> frontier{perm_identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Perm h = perm_mul(e, g);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

PermGroup make_group(std::string name, std::size_t degree, const std::vector<Perm>& gens) {
  PermGroup g;
  g.name = std::move(name);
  g.degree = degree;
  g.elements = perm_closure(gens, degree);
  std::set<Perm> covered;
  for (const auto& e : g.elements) {
    if (covered.count(e)) continue;
    g.class_reps.push_back(e);
    for (const auto& c : g.elements) covered.insert(perm_mul(perm_mul(perm_inverse(c), e), c));
  }
  return g;
}

Perm cycle(std::size_t degree, std::vector<int> pts) {
  Perm p = perm_identity(degree);
  for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = static_cast<std::uint8_t>(pts[(i + 1) % pts.size()]);
  return p;
}

}  // namespace

PermGroup symmetric_group(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return make_group("S" + std::to_string(n), n, {cycle(n, all), cycle(n, {0, 1})});
}

PermGroup alternating_group(int n) {
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) gens.push_back(cycle(n, {0, 1, k}));
  return make_group("A" + std::to_string(n), n, gens);
}

PermGroup dihedral_group(int n) {
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint8_t>((i + 1) % n);
    s[i] = static_cast<std::uint8_t>((n - i) % n);
  }
  return make_group("D" + std::to_string(n), n, {r, s});
}

const std::vector<PermGroup>& quotient_sweep_targets() {
  static const std::vector<PermGroup> targets = [] {
    std::vector<PermGroup> v{symmetric_group(3)};
    for (int n = 4; n <= 12; ++n) v.push_back(dihedral_group(n));
    v.push_back(alternating_group(4));
    v.push_back(symmetric_group(4));
    v.push_back(alternating_group(5));
    return v;
  }();
  return targets;
}

namespace {

bool nonabelian(const std::vector<Perm>& images) {
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (perm_mul(images[i], images[j]) != perm_mul(images[j], images[i])) return true;
  return false;
}

}  // namespace

std::optional<QuotientWitness> find_nonabelian_quotient(const Presentation& g, const PermGroup& target,
                                                        std::size_t node_budget) {
  const std::size_t n = static_cast<std::size_t>(g.n_generators());
  if (n < 2) return std::nullopt;
  // Relators checked as soon as their last generator is assigned.
  std::vector<std::vector<const Word*>> due(n);
  for (const auto& r : g.relators()) due[static_cast<std::size_t>(r.max_generator() - 1)].push_back(&r);
  std::vector<Perm> images(n, perm_identity(target.degree));
  std::size_t nodes = 0;
  std::optional<QuotientWitness> found;
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) {
      if (!nonabelian(images)) return false;
      found = QuotientWitness{target.name, target.degree, images, perm_closure(images, target.degree).size()};
      return true;
    }
    // Conjugating a homomorphism keeps its image type, so x1 ranges over class representatives.
    const auto& choices = k == 0 ? target.class_reps : target.elements;
    for (const auto& e : choices) {
      if (++nodes > node_budget) throw ResourceLimit("quotient search: node budget exceeded for " + target.name);
      images[k] = e;
      bool ok = true;
      for (const Word* r : due[k])
        if (perm_eval(*r, images, target.degree) != perm_identity(target.degree)) {
          ok = false;
          break;
        }
      if (ok && self(self, k + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

std::optional<QuotientWitness> sweep_nonabelian_quotients(const Presentation& g) {
  for (const auto& t : quotient_sweep_targets())
    if (auto w = find_nonabelian_quotient(g, t)) return w;
  return std::nullopt;
}

bool verify_witness(const Presentation& g, const QuotientWitness& w, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (w.images.size() != static_cast<std::size_t>(g.n_generators())) return fail("wrong number of images");
  for (const auto& p : w.images) {
    if (p.size() != w.degree) return fail("image of wrong degree");
    Perm sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != perm_identity(w.degree)) return fail("image is not a permutation");
  }
  for (const auto& r : g.relators())
    if (perm_eval(r, w.images, w.degree) != perm_identity(w.degree)) return fail("relator " + g.format(r) + " is not killed");
  if (!nonabelian(w.images)) return fail("image is abelian");
  if (perm_closure(w.images, w.degree).size() != w.image_order) return fail("image order differs");
  return true;
}

nlohmann::json witness_to_json(const QuotientWitness& w) {
  nlohmann::json imgs = nlohmann::json::array();
  for (const auto& p : w.images) imgs.push_back(std::vector<int>(p.begin(), p.end()));
  return {{"target", w.target}, {"degree", w.degree}, {"images", imgs}, {"image_order", w.image_order}};
}

QuotientWitness witness_from_json(const nlohmann::json& j) {
  QuotientWitness w;
  w.target = j.at("target").get<std::string>();
  w.degree = j.at("degree").get<std::size_t>();
  w.image_order = j.at("image_order").get<std::size_t>();
  for (const auto& img : j.at("images")) {
    Perm p;
    for (int v : img.get<std::vector<int>>()) {
      if (v < 0 || v > 255) throw InputError("witness: point out of range");
      p.push_back(static_cast<std::uint8_t>(v));
    }
    w.images.push_back(std::move(p));
  }
  return w;
}

}  // namespace rfrp::grp
