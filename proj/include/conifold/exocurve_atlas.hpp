#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "conifold/polynomial.hpp"
#include "conifold/scalar.hpp"

namespace conifold {

enum class ChartName { Up, Us, Uq, UpTilde };
enum class AtlasModel { APlus, AMinus, P151, CompactifiedAPlus };
enum class GlobalType { C1, C1ModZ5, P1 };

std::string_view to_string(ChartName name);
std::string_view to_string(AtlasModel model);
std::string_view to_string(GlobalType type);
// Chart coordinate symbol: u_p, u_s, u_q or w_p.
std::string_view coordinate_of(ChartName name);

struct Chart {
  ChartName name = ChartName::Us;
  bool proper = true;  // contains its limit point; otherwise punctured
  int orbifold_order = 1;

  bool punctured() const { return !proper; }
};

// Gluing on the overlap: coordinate(to) = coordinate(from)^exponent.
struct Transition {
  ChartName from = ChartName::Up;
  ChartName to = ChartName::Us;
  int exponent = 5;
};

struct OrbifoldPoint {
  ChartName chart = ChartName::UpTilde;
  int order = 5;
};

struct Atlas {
  AtlasModel model = AtlasModel::APlus;
  std::vector<Chart> charts;
  std::vector<Transition> transitions;
  GlobalType global_type = GlobalType::C1;
  std::vector<OrbifoldPoint> orbifold_points;

  bool compact() const;
  const Chart& chart(ChartName name) const;
  int proper_chart_count() const;
};

// Exocurve P^1_[-5,1] over a singular ray in the given sheet.
Atlas build_exocurve(Sheet sheet);
// The compact comparison space P^1_[5,1] with charts U_q, U_s.
Atlas build_weighted_p151();
// One-point compactification of A^+: U_s glued to (U~_p / Z5).
Atlas compactify(const Atlas& atlas);

// Applies the monomial gluing map leaving chart `from`.
Scalar transition(const Atlas& atlas, ChartName from, const Scalar& value);

// Euler characteristic by inclusion-exclusion over charts: C^1 and C^1/Zm
// contribute 1, punctured charts and the C^* overlaps contribute 0.
int euler_characteristic(const Atlas& atlas);

// (1 - 1/m) * 2, the deficit angle in units of pi.
Rational deficit_angle(const Chart& chart);
std::string format_pi_multiple(const Rational& coefficient);

}  // namespace conifold
