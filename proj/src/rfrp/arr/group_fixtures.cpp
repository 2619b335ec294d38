#include "rfrp/arr/group_fixtures.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <regex>

#include "rfrp/errors.hpp"
#include "rfrp/linalg/abelian.hpp"

namespace rfrp::arr {
namespace {

std::string letter_name(int i) { return std::string(1, static_cast<char>('a' + i)); }

}  // namespace

grp::Presentation make_presentation(const std::vector<std::string>& names, const std::vector<std::string>& relators) {
  std::vector<grp::Word> rels;
  for (const auto& r : relators) rels.push_back(grp::parse_word(r, names));
  return grp::Presentation(static_cast<int>(names.size()), std::move(rels), names);
}

grp::Presentation free_group(int n) {
  if (n < 1) throw InputError("free group needs at least one generator");
  std::vector<std::string> names;
  if (n <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (int i = 0; i < n; ++i) names.push_back(xyz[i]);
  } else {
    names = grp::Presentation::default_names(n);
  }
  return grp::Presentation(n, {}, names);
}

grp::Presentation free_abelian(int n) {
  grp::Presentation f = free_group(n);
  std::vector<grp::Word> rels;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) rels.push_back(grp::commutator(grp::Word::generator(i), grp::Word::generator(j)));
  return grp::Presentation(n, std::move(rels), f.names());
}

grp::Presentation z_times_free(int n) {
  grp::Presentation f = free_group(n);
  std::vector<std::string> names{"t"};
  for (const auto& s : f.names()) names.push_back(s);
  std::vector<grp::Word> rels;
  for (int i = 2; i <= n + 1; ++i) rels.push_back(grp::commutator(grp::Word::generator(1), grp::Word::generator(i)));
  return grp::Presentation(n + 1, std::move(rels), names);
}

grp::Presentation surface_group(int genus) {
  if (genus < 1 || genus > 13) throw InputError("surface group genus must lie in 1..13");
  std::vector<std::string> names;
  for (int i = 0; i < 2 * genus; ++i) names.push_back(letter_name(i));
  grp::Word r;
  for (int i = 0; i < genus; ++i)
    r *= grp::commutator(grp::Word::generator(2 * i + 1), grp::Word::generator(2 * i + 2));
  return grp::Presentation(2 * genus, {r}, names);
}

grp::Presentation cyclic_shift_extension(int p) {
  if (p < 2 || p > 19 || !linalg::is_prime(static_cast<std::uint64_t>(p)))
    throw InputError("cyclic shift extension needs a prime p <= 19");
  // Lattice Z[t]/(1 + t + ... + t^{p-1}) with basis a_0..a_{p-2}; s acts by t.
  const int r = p - 1;
  std::vector<std::string> names;
  for (int i = 0; i < r; ++i) names.push_back(letter_name(i));
  names.push_back("s");
  const grp::Word s = grp::Word::generator(r + 1);
  auto a = [](int i) { return grp::Word::generator(i + 1); };
  std::vector<grp::Word> rels;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) rels.push_back(grp::commutator(a(i), a(j)));
  for (int i = 0; i + 1 < r; ++i) rels.push_back(s * a(i) * s.inverse() * a(i + 1).inverse());
  grp::Word all;
  for (int i = 0; i < r; ++i) all *= a(i);
  rels.push_back(s * a(r - 1) * s.inverse() * all);
  return grp::Presentation(r + 1, std::move(rels), names);
}

grp::Presentation torus_knot_gluing() {
  // Two trefoil groups <a,b | a^2 b^-3> and <c,d | c^2 d^-3>; meridian m = a b^-1,
  // longitude l = a^2 m^-6. Meridian of each side is glued to the other's longitude.
  return make_presentation({"a", "b", "c", "d"},
                           {"a^2b^-3", "c^2d^-3", "(aB)(c^2(cD)^-6)^-1", "(a^2(aB)^-6)(cD)^-1"});
}

const std::vector<GroupFixture>& group_fixtures() {
  static const std::vector<GroupFixture> all = [] {
    std::vector<GroupFixture> v;
    v.push_back({"f2", "free group of rank 2", "SEPARATES_EVERYTHING", free_group(2)});
    v.push_back({"f3", "free group of rank 3", "SEPARATES_EVERYTHING", free_group(3)});
    v.push_back({"z2", "free abelian group of rank 2", "SEPARATES_EVERYTHING", free_abelian(2)});
    v.push_back({"z3", "free abelian group of rank 3", "SEPARATES_EVERYTHING", free_abelian(3)});
    v.push_back({"heisenberg", "integral Heisenberg group; boundary of a smooth conic and a transverse line",
                 "RADICAL_NONTRIVIAL_EVIDENCE",
                 make_presentation({"x", "y", "z"}, {"[x,y]Z", "[x,z]", "[y,z]"})});
    v.push_back({"trefoil", "trefoil knot group", "B1_TOO_SMALL", make_presentation({"x", "y"}, {"x^2y^-3"})});
    v.push_back({"surface2", "closed orientable surface group of genus 2", "SEPARATES_EVERYTHING", surface_group(2)});
    v.push_back({"g2", "Z extended by Z with the order-2 shift action", "RFRP_ONLY_AT_2", cyclic_shift_extension(2)});
    v.push_back({"g3", "Z^2 extended by Z with the order-3 shift action", "RFRP_ONLY_AT_3", cyclic_shift_extension(3)});
    v.push_back({"g5", "Z^4 extended by Z with the order-5 shift action", "RFRP_ONLY_AT_5", cyclic_shift_extension(5)});
    v.push_back({"raag-path", "right-angled Artin group on the path a-b-c", "SEPARATES_EVERYTHING",
                 make_presentation({"a", "b", "c"}, {"[a,b]", "[b,c]"})});
    v.push_back({"zxf2", "product of Z = <t> with the free group <x,y>", "SEPARATES_EVERYTHING",
                 make_presentation({"t", "x", "y"}, {"[t,x]", "[t,y]"})});
    v.push_back({"torus-knot-gluing", "two trefoil complements glued meridian to longitude; trivial H1",
                 "B1_TOO_SMALL", torus_knot_gluing()});
    return v;
  }();
  return all;
}

const GroupFixture* find_group_fixture(const std::string& name) {
  for (const auto& f : group_fixtures())
    if (f.name == name) return &f;
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<GroupFixture>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second.get();
  static const std::regex pattern("(f|z|surface|g)([0-9]+)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) return nullptr;
  int k = std::stoi(m[2]);
  if (k < 1 || k > 26) return nullptr;
  auto f = std::make_unique<GroupFixture>();
  f->name = name;
  const std::string kind = m[1];
  try {
    if (kind == "f") {
      f->presentation = free_group(k);
      f->description = "free group of rank " + std::to_string(k);
    } else if (kind == "z") {
      f->presentation = free_abelian(k);
      f->description = "free abelian group of rank " + std::to_string(k);
    } else if (kind == "surface") {
      f->presentation = surface_group(k);
      f->description = "closed orientable surface group of genus " + std::to_string(k);
    } else {
      f->presentation = cyclic_shift_extension(k);
      f->description = "sum-zero lattice extended by Z with the order-" + std::to_string(k) + " shift action";
    }
  } catch (const InputError&) {
    return nullptr;
  }
  return cache.emplace(name, std::move(f)).first->second.get();
}

}  // namespace rfrp::arr
