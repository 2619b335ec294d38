#include "rfrp/filtration/filtration.hpp"

#include <cstdlib>

#include "rfrp/errors.hpp"

namespace rfrp::filtration {
namespace {

linalg::AbelianStructure elementary(std::size_t rank, int p) {
  linalg::AbelianStructure a;
  a.ambient = rank;
  a.divisors.assign(rank, BigInt(p));
  a.projection = linalg::IntMatrix::identity(rank);
  a.basis_map = linalg::IntMatrix::identity(rank);
  return a;
}

grp::Word substitute(const grp::Word& w, const std::vector<grp::Word>& images) {
  grp::Word out;
  for (grp::Letter l : w.letters()) {
    const auto& im = images[static_cast<std::size_t>(std::abs(l) - 1)];
    out *= l > 0 ? im : im.inverse();
  }
  return out;
}

}  // namespace

Filtration::Filtration(grp::Presentation g, int p, covers::Bounds bounds)
    : g_(std::move(g)), p_(p), bounds_(bounds) {
  if (!linalg::is_prime(static_cast<std::uint64_t>(p_))) throw InputError("filtration: p must be prime");
  if (g_.n_generators() < 1) throw InputError("filtration: group needs at least one generator");
  FiltrationLevel k1;
  k1.depth = 1;
  k1.presentation = g_;
  k1.table = covers::CosetTable::trivial(g_.n_generators());
  for (int x = 1; x <= g_.n_generators(); ++x) {
    k1.transfer.push_back({grp::Word::generator(x)});
    k1.generator_words.push_back(grp::Word::generator(x));
  }
  push_level(std::move(k1));
}

void Filtration::push_level(FiltrationLevel lv) {
  lv.h1 = linalg::abelianization(lv.presentation);
  lv.to_layer = linalg::tf_mod_q_hom(lv.presentation, lv.h1, static_cast<std::uint64_t>(p_));
  lv.to_layer_small = grp::SmallHom::from(lv.to_layer);
  lv.layer = elementary(lv.h1.rank, p_);

  LevelChecks c;
  for (const auto& d : lv.layer.divisors) c.layer_elementary = c.layer_elementary && d == p_;
  if (!levels_.empty()) {
    const int i = lv.depth;
    levels_.push_back(std::move(lv));
    const auto& cur = levels_.back();
    // Generators of K_i lie in K_{i-1}, and conjugates by G stay in K_i.
    for (const auto& w : cur.generator_words) {
      c.nested = c.nested && coset(w, i - 1) == 0;
      for (int x = 1; x <= g_.n_generators(); ++x) {
        const auto gx = grp::Word::generator(x);
        c.normal = c.normal && coset(gx * w * gx.inverse(), i) == 0 && coset(gx.inverse() * w * gx, i) == 0;
      }
    }
    checks_.push_back(c);
    if (!c.nested || !c.normal) throw Error("filtration: nesting or normality check failed at depth " + std::to_string(i));
    return;
  }
  levels_.push_back(std::move(lv));
  checks_.push_back(c);
}

grp::Word Filtration::rewrite_from(const FiltrationLevel& lv, const grp::Word& w, std::uint32_t start,
                                   std::uint32_t* end) const {
  grp::Word out;
  std::uint32_t c = start;
  for (grp::Letter l : w.letters()) {
    if (std::abs(l) > g_.n_generators()) throw InputError("filtration: letter out of range");
    std::size_t x = static_cast<std::size_t>(std::abs(l) - 1);
    if (l > 0) {
      out *= lv.transfer[x][c];
      c = lv.table.action[x][c];
    } else {
      c = lv.table.inverse[x][c];
      out *= lv.transfer[x][c].inverse();
    }
  }
  if (end) *end = c;
  return out;
}

grp::Word Filtration::rewrite(const grp::Word& w, int i) const {
  std::uint32_t end = 0;
  grp::Word out = rewrite_from(level(i), w, 0, &end);
  if (end != 0) throw InputError("filtration: word does not lie in K_" + std::to_string(i));
  return out;
}

std::uint32_t Filtration::coset(const grp::Word& w, int i) const { return covers::membership(w, level(i).table); }

bool Filtration::contains(const grp::Word& w, int i) const {
  if (i <= depth()) return coset(w, i) == 0;
  if (i != depth() + 1) throw InputError("filtration: level not computed");
  if (coset(w, i - 1) != 0) return false;
  for (auto v : layer_image(w, i - 1))
    if (v != 0) return false;
  return true;
}

std::vector<std::int64_t> Filtration::layer_image(const grp::Word& w, int i) const {
  return level(i).to_layer_small.apply(rewrite(w, i));
}

BigInt Filtration::quotient_order(int i) const {
  if (i <= depth()) return BigInt(static_cast<unsigned long>(level(i).index()));
  if (i != depth() + 1) throw InputError("filtration: level not computed");
  BigInt o = static_cast<unsigned long>(levels_.back().index());
  BigInt pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(levels_.back().layer_rank()));
  return o * pk;
}

void Filtration::extend_to(int target) {
  while (depth() < target) {
    const FiltrationLevel& cur = levels_.back();
    const std::size_t n = static_cast<std::size_t>(g_.n_generators());
    FiltrationLevel next;
    next.depth = cur.depth + 1;

    if (cur.layer_rank() == 0) {
      // TF H1 vanishes: the filtration stabilizes.
      next.presentation = cur.presentation;
      next.table = cur.table;
      next.transfer = cur.transfer;
      next.generator_words = cur.generator_words;
      push_level(std::move(next));
      continue;
    }

    const std::uint64_t layer_order = [&] {
      std::uint64_t o = 1;
      for (std::size_t k = 0; k < cur.layer_rank(); ++k) {
        if (o > bounds_.index / static_cast<std::uint64_t>(p_)) return bounds_.index + 1;
        o *= static_cast<std::uint64_t>(p_);
      }
      return o;
    }();
    const std::size_t N = cur.index();
    if (layer_order > bounds_.index || N * layer_order > bounds_.index)
      throw ResourceLimit("filtration: index of K_" + std::to_string(next.depth) + " exceeds bound " +
                          std::to_string(bounds_.index));

    covers::SubgroupPresentation rs = covers::reidemeister_schreier(cur.presentation, cur.to_layer, bounds_);
    const std::size_t M = rs.table.index;
    if (M != layer_order) throw Error("filtration: layer map is not onto");

    // Composite table on pairs (c, a) encoded as c + N a.
    covers::CosetTable t;
    t.index = N * M;
    t.action.assign(n, std::vector<std::uint32_t>(t.index));
    for (std::size_t x = 0; x < n; ++x)
      for (std::uint32_t c = 0; c < N; ++c) {
        const grp::Word& tw = cur.transfer[x][c];
        const std::uint32_t c2 = cur.table.action[x][c];
        for (std::uint32_t a = 0; a < M; ++a) {
          std::uint32_t a2 = a;
          for (grp::Letter l : tw.letters()) a2 = rs.table.act(a2, l);
          t.action[x][c + N * a] = static_cast<std::uint32_t>(c2 + N * a2);
        }
      }
    t.finish();

    next.transfer.assign(n, std::vector<grp::Word>(t.index));
    for (std::size_t x = 0; x < n; ++x)
      for (std::uint32_t C = 0; C < t.index; ++C) {
        const grp::Word u = t.coset_reps[C] * grp::Word::generator(static_cast<grp::Letter>(x + 1)) *
                            t.coset_reps[t.action[x][C]].inverse();
        std::uint32_t end = 0;
        grp::Word v = rewrite_from(cur, u, 0, &end);
        if (end != 0) throw Error("filtration: transfer word escaped K_" + std::to_string(cur.depth));
        next.transfer[x][C] = rs.rewriter.rewrite(v, rs.table);
      }
    next.table = std::move(t);
    for (const auto& w : rs.generator_words) next.generator_words.push_back(substitute(w, cur.generator_words));
    next.presentation = std::move(rs.presentation);
    push_level(std::move(next));
  }
}

Filtration filtrate(const grp::Presentation& g, int p, int depth, covers::Bounds bounds) {
  if (depth < 1) throw InputError("filtrate: depth must be at least 1");
  Filtration f(g, p, bounds);
  f.extend_to(depth);
  return f;
}

}  // namespace rfrp::filtration
