#include "rfrp/covers/reidemeister_schreier.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

#include "rfrp/errors.hpp"

namespace rfrp::covers {
namespace {

// Lexicographically least rotation of w or w^-1; both define the same normal closure.
grp::Word canonical_relator(const grp::Word& w) {
  grp::Word best = w;
  for (const grp::Word& base : {w, w.inverse()}) {
    const auto& l = base.letters();
    for (std::size_t k = 0; k < l.size(); ++k) {
      std::vector<grp::Letter> rot(l.begin() + static_cast<std::ptrdiff_t>(k), l.end());
      rot.insert(rot.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k));
      grp::Word r = grp::Word::reduce(rot);
      if (r.letters() < best.letters()) best = r;
    }
  }
  return best;
}

// Generator status during simplification: alive, killed, or an alias of a letter.
struct Resolver {
  std::vector<grp::Letter> alias;  // 0 = alive, else letter; killed uses `dead`
  std::vector<bool> dead;

  explicit Resolver(int n) : alias(static_cast<std::size_t>(n) + 1, 0), dead(static_cast<std::size_t>(n) + 1, false) {}

  // Resolved letter, or 0 when it is trivial.
  grp::Letter resolve(grp::Letter l) {
    std::size_t g = static_cast<std::size_t>(std::abs(l));
    if (dead[g]) return 0;
    if (alias[g] == 0) return l;
    grp::Letter r = resolve(alias[g]);
    if (r == 0) {
      dead[g] = true;
      alias[g] = 0;
    } else {
      alias[g] = r;  // path compression
    }
    return l > 0 ? r : -r;
  }

  grp::Word apply(const grp::Word& w) {
    std::vector<grp::Letter> raw;
    raw.reserve(w.length());
    for (grp::Letter l : w.letters()) {
      grp::Letter r = resolve(l);
      if (r != 0) raw.push_back(r);
    }
    return grp::Word::reduce(raw).cyclically_reduced();
  }
};

}  // namespace

Simplified simplify(int generators, const std::vector<grp::Word>& relators) {
  Resolver res(generators);
  std::vector<grp::Word> current = relators;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<grp::Word> next;
    next.reserve(current.size());
    for (const auto& r0 : current) {
      grp::Word r = res.apply(r0);
      if (r.empty()) continue;
      if (r.length() == 1) {
        res.dead[static_cast<std::size_t>(std::abs(r[0]))] = true;
        changed = true;
        continue;
      }
      if (r.length() == 2 && std::abs(r[0]) != std::abs(r[1])) {
        // a^e b^d = 1: eliminate the larger generator index.
        grp::Letter a = r[0], b = r[1];
        if (std::abs(a) < std::abs(b)) std::swap(a, b);
        // a = b^-1 up to the sign of a
        grp::Letter value = a > 0 ? -b : b;
        res.alias[static_cast<std::size_t>(std::abs(a))] = value;
        changed = true;
        continue;
      }
      next.push_back(std::move(r));
    }
    current = std::move(next);
  }

  std::vector<int> renumber(static_cast<std::size_t>(generators) + 1, 0);
  int alive = 0;
  for (int g = 1; g <= generators; ++g)
    if (res.resolve(g) == g) renumber[static_cast<std::size_t>(g)] = ++alive;

  auto renumbered = [&](const grp::Word& w) {
    std::vector<grp::Letter> raw;
    for (grp::Letter l : w.letters()) {
      int m = renumber[static_cast<std::size_t>(std::abs(l))];
      raw.push_back(l > 0 ? m : -m);
    }
    return grp::Word::reduce(raw);
  };

  Simplified out;
  out.generators = alive;
  std::set<std::vector<grp::Letter>> seen;
  for (const auto& r0 : current) {
    grp::Word r = canonical_relator(renumbered(res.apply(r0)));
    if (r.empty()) continue;
    if (seen.insert(r.letters()).second) out.relators.push_back(std::move(r));
  }
  std::sort(out.relators.begin(), out.relators.end());
  out.substitution.reserve(static_cast<std::size_t>(generators));
  for (int g = 1; g <= generators; ++g) {
    grp::Letter r = res.resolve(g);
    out.substitution.push_back(r == 0 ? grp::Word() : renumbered(grp::Word::generator(r)));
  }
  return out;
}

grp::Word Rewriter::schreier_word(const grp::Word& w, const CosetTable& t, std::uint32_t start,
                                  std::uint32_t* end) const {
  std::vector<grp::Letter> raw;
  std::uint32_t c = start;
  for (grp::Letter l : w.letters()) {
    std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
    if (l > 0) {
      std::int32_t s = schreier[g][c];
      if (s >= 0) raw.push_back(s + 1);
      c = t.action[g][c];
    } else {
      c = t.inverse[g][c];
      std::int32_t s = schreier[g][c];
      if (s >= 0) raw.push_back(-(s + 1));
    }
  }
  if (end) *end = c;
  return grp::Word::reduce(raw);
}

grp::Word Rewriter::rewrite(const grp::Word& w, const CosetTable& t) const {
  std::uint32_t end = 0;
  grp::Word s = schreier_word(w, t, 0, &end);
  if (end != 0) throw InputError("rewrite: word is not in the subgroup");
  grp::Word out;
  for (grp::Letter l : s.letters()) {
    const auto& sub = substitution[static_cast<std::size_t>(std::abs(l) - 1)];
    out *= l > 0 ? sub : sub.inverse();
  }
  return out;
}

CosetTable quotient_table(const grp::Presentation& g, const grp::AbelianHom& h, const Bounds& bounds) {
  if (!h.finite_target()) throw InputError("quotient table needs a finite abelian target");
  const grp::SmallHom s = grp::SmallHom::from(h);
  const std::size_t n = static_cast<std::size_t>(g.n_generators());
  std::map<std::vector<std::int64_t>, std::uint32_t> ids;
  std::vector<std::vector<std::int64_t>> elems;
  std::vector<std::vector<std::uint32_t>> action(n);
  elems.emplace_back(s.moduli.size(), 0);
  ids[elems[0]] = 0;
  for (std::size_t c = 0; c < elems.size(); ++c) {
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::int64_t> e = elems[c];
      s.accumulate(e, static_cast<grp::Letter>(x + 1));
      auto [it, fresh] = ids.emplace(e, static_cast<std::uint32_t>(elems.size()));
      if (fresh) {
        if (elems.size() + 1 > bounds.index)
          throw ResourceLimit("subgroup index exceeds bound " + std::to_string(bounds.index));
        elems.push_back(std::move(e));
      }
      action[x].push_back(it->second);
    }
  }
  CosetTable t;
  t.index = elems.size();
  t.action = std::move(action);
  t.finish();
  return t;
}

SubgroupPresentation reidemeister_schreier(const grp::Presentation& g, const CosetTable& t, const Bounds& bounds) {
  const std::size_t n = static_cast<std::size_t>(g.n_generators());
  const std::size_t N = t.index;
  if (N > bounds.index) throw ResourceLimit("subgroup index exceeds bound " + std::to_string(bounds.index));
  const std::size_t S = N * n - (N - 1);
  if (n == 0) throw InputError("reidemeister_schreier: group without generators");
  if (S > bounds.generators)
    throw ResourceLimit("Schreier generator count " + std::to_string(S) + " exceeds bound " +
                        std::to_string(bounds.generators));

  SubgroupPresentation out;
  out.table = t;
  out.rewriter.schreier.assign(n, std::vector<std::int32_t>(N, -1));
  std::vector<grp::Word> schreier_ambient;
  std::int32_t next = 0;
  for (std::uint32_t c = 0; c < N; ++c)
    for (std::size_t x = 0; x < n; ++x) {
      if (t.tree_edge(c, static_cast<int>(x + 1))) continue;
      out.rewriter.schreier[x][c] = next++;
      schreier_ambient.push_back(t.coset_reps[c] * grp::Word::generator(static_cast<grp::Letter>(x + 1)) *
                                 t.coset_reps[t.action[x][c]].inverse());
    }
  if (static_cast<std::size_t>(next) != S) throw Error("reidemeister_schreier: transversal is not a spanning tree");
  out.schreier_generators = S;

  std::vector<grp::Word> rels;
  rels.reserve(N * g.relators().size());
  for (std::uint32_t c = 0; c < N; ++c)
    for (const auto& r : g.relators()) {
      std::uint32_t end = 0;
      grp::Word w = out.rewriter.schreier_word(r, t, c, &end);
      if (end != c) throw InputError("reidemeister_schreier: relator does not act trivially on cosets");
      rels.push_back(std::move(w));
    }

  Simplified simp = simplify(static_cast<int>(S), rels);
  out.rewriter.substitution = std::move(simp.substitution);
  out.generator_words.assign(static_cast<std::size_t>(simp.generators), grp::Word());
  for (std::size_t s = 0; s < S; ++s) {
    const auto& sub = out.rewriter.substitution[s];
    if (sub.length() == 1 && sub[0] > 0 && out.generator_words[static_cast<std::size_t>(sub[0] - 1)].empty())
      out.generator_words[static_cast<std::size_t>(sub[0] - 1)] = schreier_ambient[s];
  }
  out.presentation = grp::Presentation(simp.generators, std::move(simp.relators),
                                       grp::Presentation::default_names(simp.generators, "s"));
  return out;
}

SubgroupPresentation reidemeister_schreier(const grp::Presentation& g, const grp::AbelianHom& h,
                                           const Bounds& bounds) {
  return reidemeister_schreier(g, quotient_table(g, h, bounds), bounds);
}

}  // namespace rfrp::covers
