#include "conifold/exocurve_atlas.hpp"

#include <algorithm>

#include "conifold/error.hpp"

namespace conifold {

std::string_view to_string(ChartName name) {
  switch (name) {
    case ChartName::Up: return "U_p";
    case ChartName::Us: return "U_s";
    case ChartName::Uq: return "U_q";
    case ChartName::UpTilde: return "U~_p";
  }
  return "U_s";
}

std::string_view coordinate_of(ChartName name) {
  switch (name) {
    case ChartName::Up: return "u_p";
    case ChartName::Us: return "u_s";
    case ChartName::Uq: return "u_q";
    case ChartName::UpTilde: return "w_p";
  }
  return "u_s";
}

std::string_view to_string(AtlasModel model) {
  switch (model) {
    case AtlasModel::APlus: return "A_plus";
    case AtlasModel::AMinus: return "A_minus";
    case AtlasModel::P151: return "P151";
    case AtlasModel::CompactifiedAPlus: return "CompactifiedA_plus";
  }
  return "A_plus";
}

std::string_view to_string(GlobalType type) {
  switch (type) {
    case GlobalType::C1: return "C^1";
    case GlobalType::C1ModZ5: return "C^1/Z5";
    case GlobalType::P1: return "P^1";
  }
  return "C^1";
}

bool Atlas::compact() const { return global_type == GlobalType::P1; }

const Chart& Atlas::chart(ChartName name) const {
  auto it = std::find_if(charts.begin(), charts.end(), [name](const Chart& c) { return c.name == name; });
  if (it == charts.end()) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(to_string(model)) + " has no chart " + std::string(to_string(name)));
  }
  return *it;
}

int Atlas::proper_chart_count() const {
  return static_cast<int>(std::count_if(charts.begin(), charts.end(), [](const Chart& c) { return c.proper; }));
}

Atlas build_exocurve(Sheet sheet) {
  Atlas a;
  if (sheet == Sheet::Positive) {
    // |s|^2 >= r > 0 keeps u_s -> 0 but excludes u_p -> 0.
    a.model = AtlasModel::APlus;
    a.charts = {{ChartName::Us, true, 1}, {ChartName::Up, false, 1}};
    a.global_type = GlobalType::C1;
  } else {
    // |p|^2 >= |r|/5 > 0: now U_p is proper and 5-fold redundant.
    a.model = AtlasModel::AMinus;
    a.charts = {{ChartName::Up, true, 5}, {ChartName::Us, false, 1}};
    a.global_type = GlobalType::C1ModZ5;
    a.orbifold_points.push_back({ChartName::Up, 5});
  }
  a.transitions = {{ChartName::Up, ChartName::Us, 5}};
  return a;
}

Atlas build_weighted_p151() {
  Atlas a;
  a.model = AtlasModel::P151;
  a.charts = {{ChartName::Us, true, 1}, {ChartName::Uq, true, 5}};
  a.transitions = {{ChartName::Uq, ChartName::Us, -5}};
  a.global_type = GlobalType::P1;
  a.orbifold_points.push_back({ChartName::Uq, 5});
  return a;
}

Atlas compactify(const Atlas& atlas) {
  if (atlas.model != AtlasModel::APlus) {
    throw Error(ErrorKind::WrongModel, "compactify expects A_plus, got " +
                                           std::string(to_string(atlas.model)));
  }
  Atlas a;
  a.model = AtlasModel::CompactifiedAPlus;
  a.charts = {{ChartName::Us, true, 1}, {ChartName::UpTilde, true, 5}};
  a.transitions = {{ChartName::UpTilde, ChartName::Us, -5}};
  a.global_type = GlobalType::P1;
  a.orbifold_points.push_back({ChartName::UpTilde, 5});
  return a;
}

Scalar transition(const Atlas& atlas, ChartName from, const Scalar& value) {
  atlas.chart(from);
  auto it = std::find_if(atlas.transitions.begin(), atlas.transitions.end(),
                         [from](const Transition& t) { return t.from == from; });
  if (it == atlas.transitions.end()) {
    throw Error(ErrorKind::InvalidArgument,
                "gluing out of " + std::string(to_string(from)) + " is 1-to-5 multivalued");
  }
  // The gluing is defined on the C^* overlap only; 0 is the branch point.
  if (value.is_zero()) {
    throw Error(ErrorKind::BranchPoint, std::string(coordinate_of(from)) +
                                            " = 0 is the branch point of the gluing map");
  }
  return value.pow(it->exponent);
}

int euler_characteristic(const Atlas& atlas) {
  int chi = 0;
  for (const auto& c : atlas.charts) chi += c.proper ? 1 : 0;
  // Each transition identifies a C^* overlap, whose Euler characteristic is 0.
  return chi;
}

Rational deficit_angle(const Chart& chart) {
  if (chart.orbifold_order < 1) {
    throw Error(ErrorKind::InvalidArgument, "orbifold order must be >= 1");
  }
  Rational angle(2 * (chart.orbifold_order - 1), chart.orbifold_order);
  angle.canonicalize();
  return angle;
}

std::string format_pi_multiple(const Rational& coefficient) {
  if (coefficient == 0) return "0";
  Rational c = coefficient;
  c.canonicalize();
  std::string num = c.get_num() == 1 ? "" : c.get_num().get_str();
  if (c.get_num() == -1) num = "-";
  std::string out = num + "pi";
  if (c.get_den() != 1) out += "/" + c.get_den().get_str();
  return out;
}

}  // namespace conifold
