#include "rfrp/arr/arrangement.hpp"

#include <map>
#include <set>

#include "rfrp/arr/group_fixtures.hpp"
#include "rfrp/errors.hpp"

namespace rfrp::arr {
namespace {

using Line = std::array<Rational, 3>;

bool same_line(const Line& l, const Line& m) {
  // Proportional coefficient vectors: all 2x2 minors vanish.
  return l[0] * m[1] == l[1] * m[0] && l[0] * m[2] == l[2] * m[0] && l[1] * m[2] == l[2] * m[1];
}

Rational parse_rational(const nlohmann::json& v) {
  try {
    Rational q(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>()));
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("arrangement: not a rational number: " + v.dump());
  }
}

long binomial2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

AffineArrangement lines_arrangement(const std::vector<Line>& lines) {
  AffineArrangement a;
  for (const auto& l : lines) a.components.push_back({1, l, true, true});
  return a;
}

IncidenceData incidence(const AffineArrangement& a) {
  const std::size_t n = a.components.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = a.components[i];
    if (c.degree < 1) throw InputError("arrangement: component degree must be positive");
    if (c.line) {
      if (c.degree != 1) throw InputError("arrangement: coefficient-given components are lines");
      if ((*c.line)[0] == 0 && (*c.line)[1] == 0) throw InputError("arrangement: degenerate line " + std::to_string(i));
      for (std::size_t j = 0; j < i; ++j)
        if (a.components[j].line && same_line(*a.components[j].line, *c.line))
          throw InputError("arrangement: lines " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    }
  }
  std::map<std::array<Rational, 2>, std::set<std::size_t>> at;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!a.components[i].line || !a.components[j].line) continue;
      const auto& l = *a.components[i].line;
      const auto& m = *a.components[j].line;
      const Rational det = l[0] * m[1] - m[0] * l[1];
      if (det == 0) continue;  // parallel
      std::array<Rational, 2> p{(l[1] * m[2] - m[1] * l[2]) / det, (l[2] * m[0] - m[2] * l[0]) / det};
      at[p].insert(i);
      at[p].insert(j);
    }
  IncidenceData inc;
  for (auto& [p, cs] : at) inc.points.push_back({{cs.begin(), cs.end()}, p});
  for (const auto& d : a.declared_points) {
    std::set<std::size_t> cs(d.begin(), d.end());
    if (cs.size() < 2) throw InputError("arrangement: a multiple point needs two distinct components");
    for (auto c : cs)
      if (c >= n) throw InputError("arrangement: declared point names an unknown component");
    inc.points.push_back({{cs.begin(), cs.end()}, std::nullopt});
  }
  // Connectivity of the incidence graph through union-find on components.
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : inc.points)
    for (auto c : p.components) parent[find(c)] = find(p.components[0]);
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
  inc.connected = n > 0 && roots.size() == 1;
  return inc;
}

IncidenceData incidence_from_lines(const std::vector<Line>& lines) { return incidence(lines_arrangement(lines)); }

mfd::ClassXGraph boundary_manifold(const AffineArrangement& a, const IncidenceData& inc) {
  const std::size_t n = a.components.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.components[i].smooth) throw InputError("boundary manifold: component " + std::to_string(i) + " is not smooth");
    if (!a.components[i].transverse_at_infinity)
      throw InputError("boundary manifold: component " + std::to_string(i) + " is not transverse to the line at infinity");
  }
  if (!a.singularities_type_a) throw InputError("boundary manifold: singular points must be of type A");
  if (n == 1 && inc.points.empty())
    throw InputError("boundary manifold: a single component has no multiple points (a single projective line bounds S^3); no graph is built");
  if (!inc.connected) throw InputError("boundary manifold: the incidence graph is not connected");
  mfd::ClassXGraph g;
  std::vector<std::size_t> deg(n, 0);
  for (const auto& p : inc.points)
    for (auto c : p.components) ++deg[c];
  for (std::size_t i = 0; i < n; ++i) {
    const int d = a.components[i].degree;
    g.vertices.push_back({static_cast<int>(i), mfd::Color::L, static_cast<int>(binomial2(d - 1)),
                          static_cast<int>(deg[i]) + d, 0});
  }
  std::vector<int> next_slot(n + inc.points.size(), 0);
  for (std::size_t k = 0; k < inc.points.size(); ++k) {
    const std::size_t pv = n + k;
    g.vertices.push_back({static_cast<int>(pv), mfd::Color::P, 0, static_cast<int>(inc.points[k].components.size()), 1});
    for (auto c : inc.points[k].components) g.edges.push_back({c, pv, next_slot[c]++, next_slot[pv]++});
  }
  auto r = mfd::validate_class_x(g);
  if (!r.ok()) throw InputError("boundary manifold: construction is not in class X: " + r.summary());
  return g;
}

mfd::ClassXGraph boundary_manifold(const AffineArrangement& a) { return boundary_manifold(a, incidence(a)); }

AffineArrangement arrangement_from_json(const nlohmann::json& j) {
  AffineArrangement a;
  if (j.contains("lines"))
    for (const auto& l : j.at("lines")) {
      if (l.size() != 3) throw InputError("arrangement: a line has three coefficients");
      a.components.push_back({1, Line{parse_rational(l[0]), parse_rational(l[1]), parse_rational(l[2])}, true, true});
    }
  if (j.contains("curves"))
    for (const auto& c : j.at("curves"))
      a.components.push_back({c.at("degree").get<int>(), std::nullopt, c.value("smooth", true), c.value("transverse_at_infinity", true)});
  if (j.contains("points")) a.declared_points = j.at("points").get<std::vector<std::vector<std::size_t>>>();
  a.singularities_type_a = j.value("type_a", true);
  if (a.components.empty()) throw InputError("arrangement: no components");
  return a;
}

nlohmann::json arrangement_to_json(const AffineArrangement& a) {
  nlohmann::json lines = nlohmann::json::array(), curves = nlohmann::json::array();
  for (const auto& c : a.components) {
    if (c.line)
      lines.push_back({(*c.line)[0].get_str(), (*c.line)[1].get_str(), (*c.line)[2].get_str()});
    else
      curves.push_back({{"degree", c.degree}, {"smooth", c.smooth}, {"transverse_at_infinity", c.transverse_at_infinity}});
  }
  nlohmann::json j{{"lines", lines}};
  if (!curves.empty()) j["curves"] = curves;
  if (!a.declared_points.empty()) j["points"] = a.declared_points;
  return j;
}

nlohmann::json to_json(const IncidenceData& inc) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : inc.points) {
    nlohmann::json x{{"components", p.components}, {"multiplicity", p.components.size()}};
    if (p.coordinates) x["coordinates"] = {(*p.coordinates)[0].get_str(), (*p.coordinates)[1].get_str()};
    pts.push_back(x);
  }
  return {{"points", pts}, {"connected", inc.connected}};
}

AffineArrangement pencil(int n) {
  if (n < 1) throw InputError("pencil: need at least one line");
  std::vector<Line> lines{{1, 0, 0}};
  for (int k = 0; k + 1 < n; ++k) lines.push_back({Rational(k), -1, 0});
  return lines_arrangement(lines);
}

AffineArrangement generic_lines(int n) {
  if (n < 1) throw InputError("generic arrangement: need at least one line");
  // y = k x + k^2 and y = j x + j^2 meet at (-(k + j), -k j), distinct for distinct pairs.
  std::vector<Line> lines;
  for (int k = 1; k <= n; ++k) lines.push_back({Rational(k), -1, Rational(k * k)});
  return lines_arrangement(lines);
}

AffineArrangement near_pencil_affine(int n) {
  if (n < 3) throw InputError("near-pencil: need at least three lines");
  auto a = pencil(n - 1);
  // y = n x + 1 misses the origin and meets every pencil line once.
  a.components.push_back({1, Line{Rational(n), -1, 1}, true, true});
  return a;
}

grp::Presentation circle_bundle_presentation(int genus, long euler) {
  if (genus < 0) throw InputError("circle bundle: negative genus");
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  names.push_back("t");
  const int t = 2 * genus + 1;
  std::vector<grp::Word> rels;
  grp::Word prod;
  for (int i = 0; i < genus; ++i) prod *= grp::commutator(grp::Word::generator(2 * i + 1), grp::Word::generator(2 * i + 2));
  prod *= grp::Word::generator(t).power(-euler);
  if (!prod.empty()) rels.push_back(prod);
  for (int i = 1; i < t; ++i) rels.push_back(grp::commutator(grp::Word::generator(i), grp::Word::generator(t)));
  return grp::Presentation(t, std::move(rels), names);
}

SmoothCurveRecord smooth_curve(int degree) {
  if (degree < 1 || degree > 12) throw InputError("smooth curve: degree must lie in 1..12");
  SmoothCurveRecord r;
  r.degree = degree;
  r.hint = {static_cast<int>(binomial2(degree - 1)), static_cast<long>(degree) * degree};
  r.presentation = circle_bundle_presentation(r.hint.genus, r.hint.euler);
  // Over the sphere the bundle is a lens space (degree 1 gives S^3).
  r.expected = r.hint.genus >= 1 ? "NONZERO_EULER_CENTRAL_EXT" : degree >= 2 ? "TORSION_IN_INPUT_DATA" : "";
  return r;
}

std::vector<GalleryEntry> gallery() {
  std::vector<GalleryEntry> v{
      {"pencil<n>", "class-x", "n affine lines through one point; star graph, H1 = Z^n", "VALID_CLASS_X"},
      {"pencil1", "note", "a single line: no multiple points, the projective boundary manifold is S^3", "NO_GRAPH"},
      {"generic<n>", "class-x", "n affine lines in general position; only double points", "VALID_CLASS_X"},
      {"near-pencil-affine<n>", "class-x", "n-1 concurrent affine lines plus one generic line", "VALID_CLASS_X"},
      {"smooth-curve<d>", "circle-bundle", "boundary of a smooth degree d curve: circle bundle, genus C(d-1,2), e = d^2",
       "NONZERO_EULER_CENTRAL_EXT for d >= 3; TORSION_IN_INPUT_DATA for d = 2"},
  };
  for (const auto& f : group_fixtures()) v.push_back({f.name, "presentation", f.description, f.expected});
  return v;
}

std::optional<AffineArrangement> find_arrangement_fixture(const std::string& name) {
  auto take = [&](const std::string& stem) -> std::optional<int> {
    if (name.size() <= stem.size() || name.compare(0, stem.size(), stem) != 0) return std::nullopt;
    const std::string rest = name.substr(stem.size());
    if (rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 3) return std::nullopt;
    return std::stoi(rest);
  };
  if (auto n = take("near-pencil-affine")) return near_pencil_affine(*n);
  if (auto n = take("pencil")) return pencil(*n);
  if (auto n = take("generic")) return generic_lines(*n);
  return std::nullopt;
}

}  // namespace rfrp::arr
