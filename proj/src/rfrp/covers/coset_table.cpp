#include "rfrp/covers/coset_table.hpp"

#include <cstdlib>
#include <deque>

#include "rfrp/errors.hpp"

namespace rfrp::covers {

bool CosetTable::tree_edge(std::uint32_t c, int x) const {
  std::uint32_t d = action[static_cast<std::size_t>(x - 1)][c];
  if (d != 0 && tree_letter[d] == x && parent[d] == c) return true;
  return c != 0 && tree_letter[c] == -x && parent[c] == d;
}

void CosetTable::finish() {
  const std::size_t n = action.size();
  inverse.assign(n, std::vector<std::uint32_t>(index));
  for (std::size_t g = 0; g < n; ++g)
    for (std::uint32_t c = 0; c < index; ++c) inverse[g][action[g][c]] = c;
  coset_reps.assign(index, grp::Word());
  tree_letter.assign(index, 0);
  parent.assign(index, 0);
  std::vector<bool> seen(index, false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::uint32_t c = queue.front();
    queue.pop_front();
    for (int g = 1; g <= static_cast<int>(n); ++g)
      for (int l : {g, -g}) {
        std::uint32_t d = act(c, l);
        if (seen[d]) continue;
        seen[d] = true;
        ++reached;
        coset_reps[d] = coset_reps[c] * grp::Word::generator(l);
        tree_letter[d] = l;
        parent[d] = c;
        queue.push_back(d);
      }
  }
  if (reached != index) throw Error("coset table: action is not transitive");
}

CosetTable CosetTable::trivial(int generators) {
  CosetTable t;
  t.index = 1;
  t.action.assign(static_cast<std::size_t>(generators), std::vector<std::uint32_t>{0});
  t.finish();
  return t;
}

bool CosetTable::valid() const {
  if (coset_reps.size() != index || !coset_reps[0].empty()) return false;
  for (const auto& perm : action) {
    if (perm.size() != index) return false;
    std::vector<bool> hit(index, false);
    for (auto d : perm) {
      if (d >= index || hit[d]) return false;
      hit[d] = true;
    }
  }
  for (std::uint32_t c = 0; c < index; ++c) {
    const auto& rep = coset_reps[c];
    if (membership(rep, *this) != c) return false;
    if (!rep.empty()) {
      auto prefix = grp::Word::reduce({rep.letters().begin(), rep.letters().end() - 1});
      bool found = false;
      for (std::uint32_t d = 0; d < index && !found; ++d) found = coset_reps[d] == prefix;
      if (!found) return false;
    }
  }
  return true;
}

std::uint32_t membership(const grp::Word& w, const CosetTable& t) {
  std::uint32_t c = 0;
  for (grp::Letter l : w.letters()) {
    if (std::abs(l) > t.generators()) throw InputError("membership: letter out of range");
    c = t.act(c, l);
  }
  return c;
}

}  // namespace rfrp::covers
