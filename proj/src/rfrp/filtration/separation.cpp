#include "rfrp/filtration/separation.hpp"

#include <cstdlib>

#include "rfrp/errors.hpp"

namespace rfrp::filtration {
namespace {

BigInt layer_index(const std::vector<std::int64_t>& v, int p) {
  BigInt idx = 0, place = 1;
  for (auto x : v) {
    idx += place * BigInt(static_cast<long>(x));
    place *= p;
  }
  return idx;
}

BigInt pow_ui(int p, std::size_t k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

bool nonzero(const std::vector<std::int64_t>& v) {
  for (auto x : v)
    if (x != 0) return true;
  return false;
}

LevelEvidence evidence_at(const Filtration& f, const grp::Word& w, int i) {
  const auto& lv = f.level(i);
  grp::Word u = f.rewrite(w, i);
  LevelEvidence e;
  e.depth = i;
  e.h1_image = lv.h1.coordinates(u);
  e.torsion_coordinates = lv.h1.torsion_count();
  e.divisors = lv.h1.divisors;
  for (std::size_t k = e.torsion_coordinates; k < e.h1_image.size(); ++k) e.torsion = e.torsion && e.h1_image[k] == 0;
  e.layer_image = lv.to_layer_small.apply(u);
  return e;
}

nlohmann::json table_replay_data(const Filtration& f, int d) {
  const auto& lv = f.level(d);
  nlohmann::json t;
  t["index"] = lv.table.index;
  t["action"] = lv.table.action;
  nlohmann::json deltas = nlohmann::json::array();
  for (const auto& per_gen : lv.transfer) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& tw : per_gen) {
      auto v = lv.to_layer_small.apply(tw);
      nlohmann::json sparse = nlohmann::json::array();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) sparse.push_back({k, v[k]});
      row.push_back(sparse);
    }
    deltas.push_back(row);
  }
  nlohmann::json out;
  out["table"] = t;
  out["layer_rank"] = lv.layer_rank();
  out["deltas"] = deltas;
  return out;
}

}  // namespace

SeparationResult separate(const Filtration& f, const grp::Word& w, int max_depth) {
  if (w.empty()) throw InputError("separate: the identity cannot be separated");
  if (max_depth < 1) throw InputError("separate: depth must be at least 1");
  if (f.depth() < max_depth) throw InputError("separate: filtration not computed to the requested depth");
  SeparationResult r;
  r.word = w;
  r.p = f.p();
  r.max_depth = max_depth;
  r.method = "coset-table";
  for (int i = 1; i <= max_depth; ++i) {
    r.evidence.push_back(evidence_at(f, w, i));
    const auto& layer = r.evidence.back().layer_image;
    if (nonzero(layer)) {
      r.separated = true;
      r.depth = i;
      r.quotient_order = f.quotient_order(i + 1);
      r.image = BigInt(static_cast<unsigned long>(f.level(i).index())) * layer_index(layer, f.p());
      r.replay = table_replay_data(f, i);
      return r;
    }
  }
  r.depth = max_depth;
  r.quotient_order = f.quotient_order(max_depth + 1);
  r.image = 0;
  return r;
}

SeparationResult separate_in_free_group(int rank, const grp::Word& w, int p, int max_depth) {
  if (w.empty()) throw InputError("separate: the identity cannot be separated");
  if (w.max_generator() > rank) throw InputError("separate: letter out of range");
  covers::HomologyTower tower(covers::StallingsGraph::wedge(rank), p, max_depth);
  auto end = tower.trace(w);
  SeparationResult r;
  r.word = w;
  r.p = p;
  r.max_depth = max_depth;
  r.method = "homology-tower";
  auto d = tower.separation_depth(w);
  if (d) {
    r.separated = true;
    r.depth = *d;
    const auto& chain = tower.chain(*d - 1, end.chain[static_cast<std::size_t>(*d - 1)]);
    r.image = static_cast<unsigned long>(chain.size());
    r.replay["layer_support"] = chain.size();
  } else {
    r.depth = max_depth;
    r.image = 0;
  }
  r.replay["free_rank"] = rank;
  // The quotient orders grow too quickly to be worth reporting; zero marks "not computed".
  r.quotient_order = 0;
  return r;
}

SeparationResult separate(const grp::Presentation& g, const grp::Word& w, int p, int max_depth,
                          covers::Bounds bounds, Method method) {
  if (w.max_generator() > g.n_generators()) throw InputError("separate: letter out of range");
  if (method == Method::HomologyTower || (method == Method::Automatic && g.relators().empty())) {
    if (!g.relators().empty()) throw InputError("separate: the homology tower needs a free group");
    return separate_in_free_group(g.n_generators(), w, p, max_depth);
  }
  if (w.empty()) throw InputError("separate: the identity cannot be separated");
  Filtration f(g, p, bounds);
  for (int i = 1; i <= max_depth; ++i) {
    f.extend_to(i);
    auto u = f.rewrite(w, i);
    if (nonzero(f.level(i).to_layer_small.apply(u))) return separate(f, w, i);
  }
  return separate(f, w, max_depth);
}

nlohmann::json to_json(const SeparationResult& r, const grp::Presentation& g) {
  nlohmann::json j;
  j["kind"] = "separation";
  j["status"] = r.separated ? "CERTIFIED" : "INCONCLUSIVE";
  j["method"] = r.method;
  j["group"] = grp::presentation_to_json(g);
  j["p"] = r.p;
  j["word"] = g.format(r.word);
  j["word_letters"] = r.word.letters();
  j["depth"] = r.depth;
  j["max_depth"] = r.max_depth;
  if (r.separated) {
    j["quotient_level"] = r.depth + 1;
    j["image"] = r.image.get_str();
  } else {
    j["member_of_level"] = r.max_depth + 1;
  }
  if (r.quotient_order != 0) j["quotient_order"] = r.quotient_order.get_str();
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : r.evidence) {
    nlohmann::json x;
    x["depth"] = e.depth;
    std::vector<std::string> h1, div;
    for (const auto& c : e.h1_image) h1.push_back(c.get_str());
    for (const auto& d : e.divisors) div.push_back(d.get_str());
    x["h1_image"] = h1;
    x["h1_divisors"] = div;
    x["torsion_image"] = e.torsion;
    x["layer_image"] = e.layer_image;
    ev.push_back(x);
  }
  j["evidence"] = ev;
  if (!r.replay.is_null())
    for (auto it = r.replay.begin(); it != r.replay.end(); ++it) j[it.key()] = it.value();
  return j;
}

ReplayOutcome replay(const nlohmann::json& c) {
  ReplayOutcome out;
  try {
    if (c.value("kind", "") != "separation") return {false, "not a separation certificate"};
    if (c.value("status", "") != "CERTIFIED") return {false, "certificate does not claim separation"};
    const grp::Presentation g = grp::presentation_from_json(c.at("group"));
    const int p = c.at("p").get<int>();
    const grp::Word w = grp::Word::reduce(c.at("word_letters").get<std::vector<int>>());
    const int depth = c.at("depth").get<int>();
    if (w.empty()) return {false, "empty word"};
    const std::string method = c.at("method").get<std::string>();

    if (method == "homology-tower") {
      if (!g.relators().empty()) return {false, "tower certificates apply to free groups only"};
      auto r = separate_in_free_group(g.n_generators(), w, p, depth);
      if (!r.separated || r.depth != depth) return {false, "recomputed depth differs"};
      if (r.image.get_str() != c.at("image").get<std::string>()) return {false, "recomputed layer support differs"};
      return {true, "recomputed: word lies in K_" + std::to_string(depth) + " but not in K_" + std::to_string(depth + 1)};
    }
    if (method != "coset-table") return {false, "unknown method " + method};

    const auto& t = c.at("table");
    const std::size_t N = t.at("index").get<std::size_t>();
    const auto action = t.at("action").get<std::vector<std::vector<std::uint32_t>>>();
    const std::size_t r = c.at("layer_rank").get<std::size_t>();
    const auto& deltas_json = c.at("deltas");
    const std::size_t n = static_cast<std::size_t>(g.n_generators());
    if (action.size() != n || deltas_json.size() != n) return {false, "table shape differs from the group"};
    std::vector<std::vector<std::uint32_t>> inverse(n, std::vector<std::uint32_t>(N));
    std::vector<std::vector<std::vector<std::int64_t>>> delta(n, std::vector<std::vector<std::int64_t>>(N));
    for (std::size_t x = 0; x < n; ++x) {
      if (action[x].size() != N || deltas_json[x].size() != N) return {false, "table shape differs from its index"};
      std::vector<bool> hit(N, false);
      for (std::uint32_t cset = 0; cset < N; ++cset) {
        auto d = action[x][cset];
        if (d >= N || hit[d]) return {false, "action is not a permutation"};
        hit[d] = true;
        inverse[x][d] = cset;
        delta[x][cset].assign(r, 0);
        for (const auto& kv : deltas_json[x][cset]) {
          auto k = kv.at(0).get<std::size_t>();
          if (k >= r) return {false, "delta coordinate out of range"};
          delta[x][cset][k] = ((kv.at(1).get<std::int64_t>() % p) + p) % p;
        }
      }
    }
    auto trace = [&](const grp::Word& word, std::uint32_t start, std::vector<std::int64_t>& acc) {
      std::uint32_t cur = start;
      for (grp::Letter l : word.letters()) {
        std::size_t x = static_cast<std::size_t>(std::abs(l) - 1);
        if (l > 0) {
          for (std::size_t k = 0; k < r; ++k) acc[k] = (acc[k] + delta[x][cur][k]) % p;
          cur = action[x][cur];
        } else {
          cur = inverse[x][cur];
          for (std::size_t k = 0; k < r; ++k) acc[k] = (acc[k] + p - delta[x][cur][k]) % p;
        }
      }
      return cur;
    };
    // The stored data must define an action of G: every relator acts trivially.
    for (const auto& rel : g.relators())
      for (std::uint32_t cset = 0; cset < N; ++cset) {
        std::vector<std::int64_t> acc(r, 0);
        if (trace(rel, cset, acc) != cset || nonzero(acc)) return {false, "a relator acts nontrivially"};
      }
    std::vector<std::int64_t> acc(r, 0);
    std::uint32_t end = trace(w, 0, acc);
    if (end == 0 && !nonzero(acc)) return {false, "the word acts trivially"};
    BigInt image = BigInt(static_cast<unsigned long>(end)) + BigInt(static_cast<unsigned long>(N)) * layer_index(acc, p);
    if (image.get_str() != c.at("image").get<std::string>()) return {false, "image differs from the stored value"};
    BigInt order = BigInt(static_cast<unsigned long>(N)) * pow_ui(p, r);
    if (c.contains("quotient_order") && order.get_str() != c.at("quotient_order").get<std::string>())
      return {false, "quotient order differs"};
    return {true, "word acts nontrivially on " + order.get_str() + " cosets"};
  } catch (const std::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  }
}

}  // namespace rfrp::filtration
