#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "rfrp/filtration/battery.hpp"
#include "rfrp/mfd/class_x.hpp"

namespace rfrp::arr {

using Rational = mpq_class;

// A line a x + b y + c = 0, or a curve of the given degree known only through
// declared incidences.
struct Component {
  int degree = 1;
  std::optional<std::array<Rational, 3>> line;
  bool smooth = true;
  bool transverse_at_infinity = true;
};

struct AffineArrangement {
  std::vector<Component> components;
  // Multiple points involving curves, as component index lists.
  std::vector<std::vector<std::size_t>> declared_points;
  bool singularities_type_a = true;
};

struct MultiplePoint {
  std::vector<std::size_t> components;  // sorted
  std::optional<std::array<Rational, 2>> coordinates;
};

struct IncidenceData {
  std::vector<MultiplePoint> points;
  bool connected = false;  // incidence graph
};

AffineArrangement lines_arrangement(const std::vector<std::array<Rational, 3>>& lines);

// Exact pairwise intersections of the coefficient-given lines, merged by
// coordinates, plus the declared points. Throws InputError on duplicate lines.
IncidenceData incidence(const AffineArrangement& a);
IncidenceData incidence_from_lines(const std::vector<std::array<Rational, 3>>& lines);

// L vertex per component (genus C(d-1,2), d extra boundary circles, e = 0) and a
// P vertex per multiple point (genus 0, e = 1). Component k gets id k, point k
// gets id components + k. Throws InputError naming the unmet hypothesis.
mfd::ClassXGraph boundary_manifold(const AffineArrangement& a, const IncidenceData& inc);
mfd::ClassXGraph boundary_manifold(const AffineArrangement& a);

// {"lines": [["1","0","0"], ...]} or {"curves": [{"degree":2}], "points": [[0,1]], ...}.
AffineArrangement arrangement_from_json(const nlohmann::json& j);
nlohmann::json arrangement_to_json(const AffineArrangement& a);
nlohmann::json to_json(const IncidenceData& inc);

AffineArrangement pencil(int n);              // n lines through the origin
AffineArrangement generic_lines(int n);       // n lines, only double points
AffineArrangement near_pencil_affine(int n);  // n-1 concurrent lines and one generic line

// Circle bundle over the genus-g surface with Euler number e:
// <a_i, b_i, t | prod [a_i, b_i] = t^e, t central>, or <t | t^e> for g = 0.
grp::Presentation circle_bundle_presentation(int genus, long euler);

struct SmoothCurveRecord {
  int degree = 1;
  filtration::CircleBundleHint hint;  // genus C(d-1,2), e = d^2
  grp::Presentation presentation;
  std::string expected;  // rule expected to fire, or empty
};
SmoothCurveRecord smooth_curve(int degree);

struct GalleryEntry {
  std::string name;
  std::string kind;  // class-x, presentation, circle-bundle, note
  std::string description;
  std::string expected;
};
// Families are listed once with a parameter placeholder.
std::vector<GalleryEntry> gallery();

// "pencil3", "generic5", "near-pencil-affine4"; nullopt for unknown names.
std::optional<AffineArrangement> find_arrangement_fixture(const std::string& name);

}  // namespace rfrp::arr
