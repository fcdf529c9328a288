#include "conifold/stratifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "conifold/error.hpp"

namespace conifold {

std::string_view to_string(StratumKind kind) {
  switch (kind) {
    case StratumKind::MainConifold: return "MainConifold";
    case StratumKind::SmoothCY: return "SmoothCY";
    case StratumKind::Exocurve: return "Exocurve";
    case StratumKind::NodePoint: return "NodePoint";
    case StratumKind::FuzzyPoint: return "FuzzyPoint";
  }
  return "SmoothCY";
}

std::string Stratum::label() const {
  std::string out(to_string(kind));
  if (index > 0) out += "(" + std::to_string(index) + ")";
  return out;
}

bool StratifiedVariety::attached(std::size_t a, std::size_t b) const {
  return std::any_of(attachments.begin(), attachments.end(), [&](const Attachment& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

std::size_t StratifiedVariety::count(StratumKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(strata.begin(), strata.end(), [kind](const Stratum& s) { return s.kind == kind; }));
}

std::vector<int> StratifiedVariety::dimension_sequence() const {
  std::vector<int> out;
  for (const auto& s : strata) out.push_back(s.complex_dimension);
  return out;
}

int count_components(std::size_t vertices, const std::vector<Attachment>& edges) {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = static_cast<int>(vertices);
  for (const auto& e : edges) {
    std::size_t a = find(e.first);
    std::size_t b = find(e.second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

namespace {

Stratum fuzzy_point() {
  return {StratumKind::FuzzyPoint, 0, 0, true, 5, "|p|^2 = |r|/5, s = 0"};
}

std::string node_label(std::size_t j) { return "x#_" + std::to_string(j); }

}  // namespace

StratifiedVariety build_ground_state_variety(const TransversalityReport& report, Sheet sheet) {
  if (!report.complete) {
    throw Error(ErrorKind::IncompleteReport,
                "singular-ray search is not certified complete; refusing to stratify");
  }
  StratifiedVariety v;
  v.sheet = sheet;
  const std::size_t n = report.rays.size();

  if (n == 0) {
    if (sheet == Sheet::Positive) {
      v.strata.push_back({StratumKind::SmoothCY, 0, 3, true, 1, "|s|^2 = r, p = 0"});
    } else {
      v.strata.push_back(fuzzy_point());
    }
  } else if (sheet == Sheet::Positive) {
    // M# U (A_j attached at x#_j): strata ordered by decreasing dimension.
    v.strata.push_back({StratumKind::MainConifold, 0, 3, true, 1, "|s|^2 = r, p = 0"});
    for (std::size_t j = 1; j <= n; ++j) {
      v.strata.push_back({StratumKind::Exocurve, static_cast<int>(j), 1, false, 1,
                          "|s#_j|^2 = r_+ = 5|p|^2 + |r|"});
    }
    for (std::size_t j = 1; j <= n; ++j) {
      v.strata.push_back({StratumKind::NodePoint, static_cast<int>(j), 0, true, 1, "|s#_j|^2 = r"});
    }
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t curve = j;
      const std::size_t node = n + j;
      v.attachments.push_back({0, node, node_label(j)});
      v.attachments.push_back({node, curve, node_label(j)});
    }
  } else {
    // The exocurves A^-_j ~ C/Z5 all meet at the Landau-Ginzburg point.
    for (std::size_t j = 1; j <= n; ++j) {
      v.strata.push_back({StratumKind::Exocurve, static_cast<int>(j), 1, false, 5,
                          "|s|^2 = r_- = |s#_j|^2 + |r|"});
    }
    v.strata.push_back(fuzzy_point());
    for (std::size_t j = 0; j < n; ++j) v.attachments.push_back({j, n, "fuzzy point"});
  }
  v.connected_components = count_components(v.strata.size(), v.attachments);
  return v;
}

std::string strata_report(const StratifiedVariety& v) {
  std::ostringstream os;
  const std::size_t exocurves = v.count(StratumKind::Exocurve);
  const bool nodal = exocurves > 0;
  if (!nodal && v.sheet == Sheet::Positive) {
    os << "1 stratum, dim 3, smooth";
  } else if (!nodal) {
    os << "1 stratum, dim 0, fuzzy point (Z5)";
  } else if (v.sheet == Sheet::Positive) {
    os << v.strata.size() << " strata, dim sequence {";
    auto dims = v.dimension_sequence();
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    os << "}, " << exocurves << (exocurves == 1 ? " exocurve" : " exocurves")
       << " attached at nodes";
  } else {
    os << exocurves << (exocurves == 1 ? " exocurve" : " exocurves") << " meeting at fuzzy point";
  }
  os << "\nsheet: " << (v.sheet == Sheet::Positive ? "r>0" : "r<0") << "\n";
  os << "connected components: " << v.connected_components << "\n";
  os << "strata:\n";
  for (std::size_t i = 0; i < v.strata.size(); ++i) {
    const auto& s = v.strata[i];
    os << "  [" << i << "] " << s.label() << "  dim " << s.complex_dimension
       << (s.compact ? "  compact" : "  non-compact");
    if (s.orbifold_order > 1) os << "  Z" << s.orbifold_order;
    os << "  (" << s.radius << ")\n";
  }
  if (!v.attachments.empty()) {
    os << "attachments:\n";
    for (const auto& a : v.attachments) {
      os << "  " << v.strata[a.first].label() << " -- " << v.strata[a.second].label() << " at "
         << a.point << "\n";
    }
  }
  return os.str();
}

}  // namespace conifold
