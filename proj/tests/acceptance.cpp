// Acceptance run: one PASS/FAIL line per criterion, each with a wall-clock limit.
// Usage: acceptance [criterion numbers...]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rfrp/arr/arrangement.hpp"
#include "rfrp/arr/group_fixtures.hpp"
#include "rfrp/covers/homology_tower.hpp"
#include "rfrp/covers/reidemeister_schreier.hpp"
#include "rfrp/errors.hpp"
#include "rfrp/filtration/battery.hpp"
#include "rfrp/filtration/separation.hpp"
#include "rfrp/grp/finite_quotients.hpp"
#include "rfrp/jump/jump_loci.hpp"
#include "rfrp/linalg/abelian.hpp"
#include "rfrp/linalg/smith.hpp"
#include "rfrp/mfd/class_x.hpp"

using namespace rfrp;
using linalg::BigInt;
using linalg::IntMatrix;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  int failures = 0;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures++ < 5) detail << (failures > 1 ? "; " : "") << what;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

const grp::Presentation& fx(const char* n) { return arr::find_group_fixture(n)->presentation; }

// 1. Random integer matrices: U A V = D, divisor chain, unimodular U and V.
void snf_suite(Outcome& out) {
  std::mt19937_64 rng(0xacce0001);
  std::uniform_int_distribution<int> dim(1, 30), entry(-50, 50), zero(0, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    IntMatrix a(r, c);
    // Every fifth matrix is sparse, which exercises rank deficiency.
    bool sparse = trial % 5 == 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = (sparse && zero(rng) != 0) ? 0 : entry(rng);
    auto s = linalg::smith_normal_form(a);
    IntMatrix d(r, c);
    for (std::size_t k = 0; k < s.d.size(); ++k) d(k, k) = s.d[k];
    std::string tag = "matrix " + std::to_string(trial);
    out.require(s.u * a * s.v == d, tag + ": U A V != D");
    for (std::size_t k = 0; k + 1 < s.d.size(); ++k) {
      out.require(s.d[k] >= 0, tag + ": negative divisor");
      if (s.d[k] == 0) out.require(s.d[k + 1] == 0, tag + ": zero before nonzero");
      else out.require(s.d[k + 1] % s.d[k] == 0, tag + ": chain broken");
    }
    out.require(abs(linalg::determinant(s.u)) == 1, tag + ": U not unimodular");
    out.require(abs(linalg::determinant(s.v)) == 1, tag + ": V not unimodular");
    out.require(s.v * s.v_inverse == IntMatrix::identity(c), tag + ": V^-1 wrong");
  }
  out.detail << (out.ok ? "500 matrices" : "");
}

// 2. Every index-p normal subgroup of F2 with cyclic quotient is free of rank p + 1.
void nielsen_schreier(Outcome& out) {
  const auto& f2 = fx("f2");
  int kernels = 0;
  for (int p : {2, 3, 5})
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        grp::AbelianHom h(f2, {BigInt(p)}, {{BigInt(a)}, {BigInt(b)}});
        auto sub = covers::reidemeister_schreier(f2, h);
        auto h1 = linalg::abelianization(sub.presentation);
        std::string tag = "p=" + std::to_string(p) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        out.require(sub.table.index == static_cast<std::size_t>(p), tag + ": index");
        out.require(h1.rank == static_cast<std::size_t>(p + 1), tag + ": b1 = " + std::to_string(h1.rank));
        out.require(h1.divisors.empty(), tag + ": torsion in H1");
        out.require(sub.schreier_generators == static_cast<std::size_t>(p + 1), tag + ": Schreier generator count");
        ++kernels;
      }
  out.detail << kernels << " kernels, b1 = p+1, H1 torsion-free";
}

std::vector<grp::Word> reduced_words(int rank, int max_length) {
  std::vector<grp::Word> all, frontier{grp::Word()};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<grp::Word> next;
    for (const auto& w : frontier)
      for (int g = 1; g <= rank; ++g)
        for (int s : {1, -1}) {
          grp::Letter l = static_cast<grp::Letter>(s * g);
          if (!w.letters().empty() && w.letters().back() == -l) continue;
          auto v = w.letters();
          v.push_back(l);
          next.push_back(grp::Word::reduce(v));
        }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

// 3. Girth of the homology tower over the wedge of two circles, and separation of short words.
void girth_tower(Outcome& out) {
  auto words = reduced_words(2, 6);
  std::map<int, int> depth_hist;
  for (int p : {2, 3}) {
    covers::HomologyTower tower(covers::StallingsGraph::wedge(2), p, 5);
    for (int i = 1; i <= 5; ++i) {
      auto g = tower.girth(i, static_cast<std::size_t>(i) - 1);
      out.require(!g.has_value(), "p=" + std::to_string(p) + ": X_" + std::to_string(i) + " has a cycle shorter than " +
                                      std::to_string(i));
    }
    for (const auto& w : words) {
      auto r = filtration::separate_in_free_group(2, w, p, 6);
      out.require(r.separated && r.depth <= 6, "p=" + std::to_string(p) + ": " + fx("f2").format(w) + " not certified");
      if (r.separated) ++depth_hist[r.depth];
    }
  }
  out.detail << words.size() << " words x 2 primes, certificate depths";
  for (auto [d, n] : depth_hist) out.detail << " " << d << ":" << n;
}

// 4. Heisenberg: the center stays inside every level; x separates immediately.
void heisenberg(Outcome& out) {
  const auto& h = fx("heisenberg");
  for (int p : {2, 3}) {
    std::string tag = "p=" + std::to_string(p);
    auto z = filtration::separate(h, h.parse("z"), p, 3);
    out.require(!z.separated && z.depth == 3, tag + ": z not INCONCLUSIVE(3)");
    out.require(z.evidence.size() == 3, tag + ": z evidence missing");
    for (const auto& e : z.evidence) out.require(e.torsion, tag + ": z has a free H1 image at depth " + std::to_string(e.depth));
    auto x = filtration::separate(h, h.parse("x"), p, 3);
    out.require(x.separated && x.depth <= 2, tag + ": x not certified by depth 2");
    out.require(filtration::replay(filtration::to_json(x, h)).ok, tag + ": x certificate fails replay");
  }
  out.detail << "z INCONCLUSIVE(3) with torsion images, x certified at depth 1";
}

// 5. Trefoil: nonabelian quotient with b1 = 1, commutator deep in the filtration.
void trefoil(Outcome& out) {
  const auto& t = fx("trefoil");
  auto rep = filtration::obstruction_battery(t);
  out.require(rep.fires("B1_TOO_SMALL"), "B1_TOO_SMALL did not fire");
  auto j = filtration::to_json(rep);
  for (const auto& f : j.at("fired"))
    if (f.at("rule") == "B1_TOO_SMALL") {
      auto w = grp::witness_from_json(f.at("evidence").at("quotient"));
      std::string why;
      out.require(w.target == "S3", "witness target " + w.target);
      out.require(grp::verify_witness(t, w, &why), "witness rejected: " + why);
    }
  out.require(filtration::verify_report(t, j), "report fails verification");
  for (int p : {2, 3}) {
    auto r = filtration::separate(t, t.parse("[x,y]"), p, 3);
    out.require(!r.separated && r.depth == 3, "[x,y] not INCONCLUSIVE(3) at p=" + std::to_string(p));
  }
  out.detail << "S3 witness verified, [x,y] INCONCLUSIVE(3) at p = 2, 3";
}

// 6. G_3: b1 = 1 with Z/3 torsion, the lattice separates at 3 and not at 2.
void g3(Outcome& out) {
  const auto& g = fx("g3");
  auto h1 = linalg::abelianization(g);
  out.require(h1.rank == 1, "b1 = " + std::to_string(h1.rank));
  out.require(h1.divisors == std::vector<BigInt>{BigInt(3)}, "torsion is " + linalg::describe(h1));
  for (const char* a : {"a", "b"}) {
    auto r3 = filtration::separate(g, g.parse(a), 3, 3);
    out.require(r3.separated && r3.depth <= 3, std::string(a) + " not certified at p=3");
    out.require(filtration::replay(filtration::to_json(r3, g)).ok, std::string(a) + " certificate fails replay");
    auto r2 = filtration::separate(g, g.parse(a), 2, 3);
    out.require(!r2.separated && r2.depth == 3, std::string(a) + " not INCONCLUSIVE(3) at p=2");
    out.require(r2.evidence.size() == 3, std::string(a) + " evidence missing at p=2");
    for (const auto& e : r2.evidence) out.require(e.torsion, std::string(a) + " has a free image at p=2");
  }
  out.detail << "H1 = " << linalg::describe(h1) << ", A certified at 3, INCONCLUSIVE(3) at 2";
}

// 7. Predicted and directly computed b1 of cyclic covers agree exactly.
void b1cover(Outcome& out) {
  int cases = 0;
  for (const char* name : {"f2", "surface2", "z2", "trefoil"})
    for (int n : {2, 3, 5}) {
      const auto& g = fx(name);
      auto h = jump::named_quotient("z" + std::to_string(n), g);
      auto predicted = jump::predicted_cover_b1(g, h, 2);
      auto oracle = jump::oracle_cover_b1(g, h);
      out.require(predicted == oracle, std::string(name) + " z" + std::to_string(n) + ": " + std::to_string(predicted) +
                                           " != " + std::to_string(oracle));
      ++cases;
    }
  out.detail << cases << " covers agree";
}

struct Corpus {
  std::vector<std::pair<std::string, mfd::ClassXGraph>> graphs;
};

const Corpus& class_x_corpus() {
  static const Corpus corpus = [] {
    Corpus c;
    for (int n = 2; n <= 5; ++n) {
      c.graphs.emplace_back("pencil" + std::to_string(n), arr::boundary_manifold(arr::pencil(n)));
      c.graphs.emplace_back("generic" + std::to_string(n), arr::boundary_manifold(arr::generic_lines(n)));
      if (n >= 3)
        c.graphs.emplace_back("near-pencil-affine" + std::to_string(n), arr::boundary_manifold(arr::near_pencil_affine(n)));
    }
    std::mt19937_64 rng(0xacce0008);
    for (int k = 0; k < 50; ++k) c.graphs.emplace_back("random" + std::to_string(k), mfd::random_class_x_graph(rng, 12));
    return c;
  }();
  return corpus;
}

// 8. H1 from Mayer-Vietoris agrees with the abelianized graph-of-groups presentation.
void class_x_dual_path(Outcome& out) {
  for (const auto& [name, g] : class_x_corpus().graphs) {
    auto v = mfd::validate_class_x(g);
    out.require(v.ok(), name + ": invalid (" + v.summary() + ")");
    if (!v.ok()) continue;
    if (name.rfind("random", 0) == 0) {
      auto gi = mfd::graph_girth(g);
      out.require(g.vertices.size() <= 12 && (gi == 0 || gi >= 6), name + ": outside the random corpus bounds");
    }
    auto mv = mfd::mv_h1(g).h1;
    auto direct = linalg::abelianization(mfd::pi1_presentation(g));
    out.require(mv.same_type(direct), name + ": MV " + linalg::describe(mv) + " vs pi1 " + linalg::describe(direct));
  }
  auto gen3 = mfd::mv_h1(arr::boundary_manifold(arr::generic_lines(3))).h1;
  auto pen3 = mfd::mv_h1(arr::boundary_manifold(arr::pencil(3))).h1;
  out.require(gen3.rank == 4 && gen3.divisors.empty(), "generic3 gives " + linalg::describe(gen3));
  out.require(pen3.rank == 3 && pen3.divisors.empty(), "pencil3 gives " + linalg::describe(pen3));
  out.detail << class_x_corpus().graphs.size() << " graphs agree; generic3 " << linalg::describe(gen3) << ", pencil3 "
             << linalg::describe(pen3);
}

// 9. Vertex inclusions are split injections when the girth is at least 6.
void injectivity(Outcome& out) {
  int checked = 0, vertices = 0;
  for (const auto& [name, g] : class_x_corpus().graphs) {
    auto gi = mfd::graph_girth(g);
    if (gi != 0 && gi < 6) continue;
    auto mv = mfd::mv_h1(g);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      auto r = mfd::vertex_inclusion(g, mv, v);
      bool ones = r.diagonal.size() >= r.source_rank;
      for (std::size_t k = 0; ones && k < r.source_rank; ++k) ones = r.diagonal[k] == 1;
      out.require(r.injective && r.split && ones, name + ": vertex " + std::to_string(g.vertices[v].id) +
                                                      " inclusion not a split injection");
      ++vertices;
    }
    ++checked;
  }
  out.detail << checked << " graphs, " << vertices << " vertex inclusions split";
}

// 10. Torus knot gluing: perfect, and the battery fires.
void torus_knot(Outcome& out) {
  const auto& g = fx("torus-knot-gluing");
  auto h1 = linalg::abelianization(g);
  out.require(h1.trivial(), "H1 = " + linalg::describe(h1));
  auto rep = filtration::obstruction_battery(g);
  out.require(!rep.fired.empty(), "no rule fired");
  out.require(filtration::verify_report(g, filtration::to_json(rep)), "report fails verification");
  out.detail << "H1 = 0, fired";
  for (const auto& f : rep.fired) out.detail << " " << f.id;
}

// 11. Verdict table for the eight geometries.
void verdicts(Outcome& out) {
  const std::map<std::string, bool> virtually_all_primes = {
      {"S3", true},  {"S2xR", true}, {"R3", true},       {"H2xR", true},
      {"H3", true},  {"Nil", false}, {"Sol", false},     {"PSLtilde", false}};
  out.require(filtration::geometry_labels().size() == 8, "label count");
  for (const auto& [label, good] : virtually_all_primes) {
    auto v = filtration::geometry_verdict(label);
    auto want = good ? filtration::Verdict::VirtuallyRfrpAllPrimes : filtration::Verdict::NotRfrpAnyPrimeEvenVirtually;
    out.require(v == want, label + " -> " + filtration::verdict_name(v));
  }
  out.detail << "8 labels";
}

// 12. RAAG on the path a-b-c: [a,c] survives in a 2-quotient.
void raag(Outcome& out) {
  const auto& g = fx("raag-path");
  auto r = filtration::separate(g, g.parse("[a,c]"), 2, 3);
  out.require(r.separated && r.depth <= 2, "[a,c] not certified by depth 2");
  out.require(filtration::replay(filtration::to_json(r, g)).ok, "certificate fails replay");
  out.detail << "[a,c] certified at depth " << r.depth << ", |Q| = " << r.quotient_order.get_str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "snf-suite", 10, snf_suite},
      {2, "nielsen-schreier", 5, nielsen_schreier},
      {3, "free-girth-tower", 60, girth_tower},
      {4, "heisenberg", 60, heisenberg},
      {5, "trefoil", 30, trefoil},
      {6, "g3", 120, g3},
      {7, "b1cover-dual-oracle", 120, b1cover},
      {8, "class-x-dual-path", 120, class_x_dual_path},
      {9, "split-injection", 60, injectivity},
      {10, "torus-knot-gluing", 5, torus_knot},
      {11, "geometric-verdicts", 1, verdicts},
      {12, "raag-path", 30, raag},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_seconds;
    bool pass = out.ok && in_time;
    failed += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << (c.id < 10 ? " " : "") << c.id << " " << c.name << "  (" << timing
              << ")  " << out.detail.str() << (in_time ? "" : "; over the time limit") << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
