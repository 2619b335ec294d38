#include "rfrp/filtration/closure.hpp"

#include <cstdlib>

#include "rfrp/arr/group_fixtures.hpp"
#include "rfrp/errors.hpp"

namespace rfrp::filtration {

bool InducedTopologyReport::all_witnessed() const {
  for (const auto& l : levels)
    if (!l.witnessed) return false;
  return true;
}

namespace {

std::uint32_t act_word(const covers::CosetTable& t, std::uint32_t c, const grp::Word& w) {
  for (grp::Letter l : w.letters()) c = t.act(c, l);
  return c;
}

// Schreier generators of the stabilizer of coset 0 under the H-action on G/G_i,
// written in H's generators.
std::vector<grp::Word> trace_generators(const covers::CosetTable& t, const SubgroupEmbedding& sub,
                                        std::size_t* orbit_size) {
  const std::size_t n = sub.images.size();
  std::vector<long> seen(t.index, -1);
  std::vector<grp::Word> rep(t.index);
  std::vector<std::uint32_t> order{0};
  seen[0] = 0;
  for (std::size_t q = 0; q < order.size(); ++q) {
    const std::uint32_t c = order[q];
    for (std::size_t k = 0; k < n; ++k)
      for (int sign : {1, -1}) {
        const grp::Word img = sign > 0 ? sub.images[k] : sub.images[k].inverse();
        const std::uint32_t d = act_word(t, c, img);
        if (seen[d] >= 0) continue;
        seen[d] = 1;
        rep[d] = rep[c] * grp::Word::generator(sign * static_cast<int>(k + 1));
        order.push_back(d);
      }
  }
  *orbit_size = order.size();
  std::vector<grp::Word> gens;
  for (std::uint32_t c : order)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint32_t d = act_word(t, c, sub.images[k]);
      grp::Word s = rep[c] * grp::Word::generator(static_cast<int>(k + 1)) * rep[d].inverse();
      if (!s.empty()) gens.push_back(s);
    }
  return gens;
}

}  // namespace

InducedTopologyReport induced_topology_report(const grp::Presentation& g, const SubgroupEmbedding& sub, int p,
                                              int depth, covers::Bounds bounds) {
  if (depth < 1) throw InputError("induced topology: depth must be at least 1");
  if (sub.images.size() != static_cast<std::size_t>(sub.h.n_generators()))
    throw InputError("induced topology: one image word per subgroup generator is required");
  for (const auto& w : sub.images)
    if (w.max_generator() > g.n_generators()) throw InputError("induced topology: image word out of range");
  Filtration fg(g, p, bounds), fh(sub.h, p, bounds);
  fg.extend_to(depth);
  fh.extend_to(depth);

  InducedTopologyReport rep;
  rep.p = p;
  rep.depth = depth;
  std::vector<std::vector<grp::Word>> gens(static_cast<std::size_t>(depth));
  for (int i = 1; i <= depth; ++i) {
    const auto& t = fg.level(i).table;
    // Relators of H must act trivially, otherwise the images do not define a homomorphism.
    for (const auto& r : sub.h.relators()) {
      grp::Word img;
      for (grp::Letter l : r.letters()) img *= l > 0 ? sub.images[l - 1] : sub.images[-l - 1].inverse();
      for (std::uint32_t c = 0; c < t.index; ++c)
        if (act_word(t, c, img) != c) throw InputError("induced topology: relator " + sub.h.format(r) + " does not map to 1");
    }
    std::size_t orbit = 0;
    gens[static_cast<std::size_t>(i - 1)] = trace_generators(t, sub, &orbit);
    rep.trace_index.push_back(orbit);
  }
  for (int j = 1; j <= depth; ++j) {
    InducedLevel lv;
    lv.j = j;
    lv.h_index = fh.level(j).index();
    for (int i = 1; i <= depth && !lv.witnessed; ++i) {
      bool inside = true;
      for (const auto& s : gens[static_cast<std::size_t>(i - 1)])
        if (!fh.contains(s, j)) {
          inside = false;
          break;
        }
      if (inside) {
        lv.witnessed = true;
        lv.witness_depth = i;
      }
    }
    rep.levels.push_back(lv);
  }
  return rep;
}

nlohmann::json to_json(const InducedTopologyReport& r) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : r.levels)
    levels.push_back({{"j", l.j}, {"h_index", l.h_index}, {"witnessed", l.witnessed}, {"witness_depth", l.witness_depth}});
  return {{"kind", "induced-topology"}, {"p", r.p}, {"depth", r.depth}, {"trace_index", r.trace_index},
          {"levels", levels}, {"all_witnessed", r.all_witnessed()}};
}

std::string status_name(EdgeClosureStatus s) {
  switch (s) {
    case EdgeClosureStatus::Certified: return "CERTIFIED";
    case EdgeClosureStatus::Inconclusive: return "INCONCLUSIVE";
    case EdgeClosureStatus::NotSeparableInput: return "NOT_SEPARABLE_INPUT";
  }
  return "?";
}

EdgeClosureResult edge_closure_check(int x_index, const grp::Word& w, int p, int max_depth, int free_rank,
                                     covers::Bounds bounds) {
  if (free_rank < 1) throw InputError("edge closure: free rank must be positive");
  if (x_index < 2 || x_index > free_rank + 1) throw InputError("edge closure: x must be a free generator (index 2.." + std::to_string(free_rank + 1) + ")");
  if (w.max_generator() > free_rank + 1) throw InputError("edge closure: letter out of range");
  EdgeClosureResult r;
  r.ambient = arr::z_times_free(free_rank);
  // t is central, so dropping it changes neither membership in <t,x> nor [x, w].
  std::vector<grp::Letter> fiberless;
  for (grp::Letter l : w.letters())
    if (std::abs(l) != 1) fiberless.push_back(l);
  const grp::Word y = grp::Word::reduce(fiberless);
  bool in_subgroup = true;
  for (grp::Letter l : y.letters()) in_subgroup = in_subgroup && std::abs(l) == x_index;
  if (in_subgroup) {
    r.status = EdgeClosureStatus::NotSeparableInput;
    return r;
  }
  r.commutator = grp::commutator(grp::Word::generator(x_index), y);
  r.separation = separate(r.ambient, r.commutator, p, max_depth, bounds, Method::ReidemeisterSchreier);
  r.status = r.separation->separated ? EdgeClosureStatus::Certified : EdgeClosureStatus::Inconclusive;
  return r;
}

nlohmann::json to_json(const EdgeClosureResult& r) {
  nlohmann::json j{{"kind", "edge-closure"}, {"status", status_name(r.status)}};
  if (r.status != EdgeClosureStatus::NotSeparableInput) {
    j["commutator"] = r.ambient.format(r.commutator);
    j["separation"] = to_json(*r.separation, r.ambient);
  }
  return j;
}

}  // namespace rfrp::filtration
