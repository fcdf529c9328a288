// Acceptance suite: one PASS/FAIL line per criterion.
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "conifold/cohomology.hpp"
#include "conifold/error.hpp"
#include "conifold/exocurve_atlas.hpp"
#include "conifold/resolution_graph.hpp"
#include "conifold/singular_locus.hpp"
#include "conifold/stratifier.hpp"
#include "support.hpp"

using namespace conifold;

namespace {

const char* kFermat = "s0^5+s1^5+s2^5+s3^5+s4^5";
const char* kDwork = "s0^5+s1^5+s2^5+s3^5+s4^5-5*s0*s1*s2*s3*s4";

struct Outcome {
  bool passed = true;
  std::string detail;
};

#define REQUIRE(cond, msg)            \
  do {                                \
    if (!(cond)) return {false, msg}; \
  } while (0)

Polynomial parse5(const std::string& text) {
  ParseOptions opts;
  opts.zeta_order = 5;
  return parse_polynomial(text, opts);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- AC1 -------------------------------------------------------------------

Outcome transversal_case() {
  auto t0 = std::chrono::steady_clock::now();
  auto r = verify_transversal(parse5(kFermat), CandidateSource::ansatz());
  REQUIRE(r.transversal == std::optional<bool>(true) && r.rays.empty() && r.complete, "Fermat not certified transversal");
  auto pos = build_ground_state_variety(r, Sheet::Positive);
  REQUIRE(pos.strata.size() == 1 && pos.strata[0].kind == StratumKind::SmoothCY, "r>0 is not {SmoothCY}");
  auto neg = build_ground_state_variety(r, Sheet::Negative);
  REQUIRE(neg.strata.size() == 1 && neg.strata[0].kind == StratumKind::FuzzyPoint &&
              neg.strata[0].orbifold_order == 5,
          "r<0 is not {FuzzyPoint Z5}");
  const double t = seconds_since(t0);
  REQUIRE(t < 1.0, "took " + std::to_string(t) + " s");
  return {true, "transversal; {SmoothCY} / {FuzzyPoint Z5}; " + std::to_string(t) + " s"};
}

// --- AC2 -------------------------------------------------------------------

using Cyc = std::array<long long, 5>;  // Z[x]/(x^5 - 1)

Cyc cyc_mul(const Cyc& a, const Cyc& b) {
  Cyc out{};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) out[(i + j) % 5] += a[i] * b[j];
  }
  return out;
}

Cyc cyc_x(int a) {
  Cyc c{};
  if (a >= 0) c[static_cast<std::size_t>(a)] = 1;
  return c;
}

std::set<std::array<int, 5>> dwork_brute_force() {
  std::set<std::array<int, 5>> out;
  for (int code = 0; code < 7776; ++code) {
    std::array<int, 5> e{};
    int c = code;
    for (auto& v : e) {
      v = c % 6 - 1;
      c /= 6;
    }
    auto first = std::find_if(e.begin(), e.end(), [](int v) { return v >= 0; });
    if (first == e.end() || *first != 0) continue;
    bool singular = true;
    for (std::size_t i = 0; i < 5 && singular; ++i) {
      Cyc q = cyc_x(e[i]);
      q = cyc_mul(cyc_mul(q, q), cyc_mul(q, q));
      Cyc prod = cyc_x(0);
      for (std::size_t j = 0; j < 5; ++j) {
        if (j != i) prod = cyc_mul(prod, cyc_x(e[j]));
      }
      Cyc d{};
      for (std::size_t k = 0; k < 5; ++k) d[k] = 5 * q[k] - 5 * prod[k];
      singular = std::all_of(d.begin(), d.end(), [&](long long v) { return v == d[0]; });
    }
    if (singular) out.insert(e);
  }
  return out;
}

Outcome node_detection() {
  auto t0 = std::chrono::steady_clock::now();
  auto g = parse5(kDwork);
  auto rays = find_singular_rays(g, CandidateSource::ansatz());
  auto oracle = dwork_brute_force();
  REQUIRE(oracle.size() == 125, "oracle found " + std::to_string(oracle.size()));
  REQUIRE(rays.size() == 125, "found " + std::to_string(rays.size()) + " rays");
  auto f = CyclotomicField::get(5);
  std::set<std::array<int, 5>> found;
  for (const auto& ray : rays) {
    REQUIRE(ray.classification == SingularityClass::Node && ray.corank == 0, "a ray is not a node");
    std::array<int, 5> e{};
    for (std::size_t i = 0; i < 5; ++i) {
      e[i] = ray.representative[i].is_zero() ? -1 : -2;
      for (int a = 0; a < 5; ++a) {
        if (ray.representative[i] == Scalar::zeta_power(f, a)) e[i] = a;
      }
    }
    found.insert(e);
  }
  REQUIRE(found == oracle, "rays differ from the brute-force oracle");
  const double t = seconds_since(t0);
  REQUIRE(t < 60.0, "took " + std::to_string(t) + " s");
  return {true, "125 node rays = brute-force oracle; " + std::to_string(t) + " s"};
}

// --- AC3 -------------------------------------------------------------------

TransversalityReport synthetic_report(std::size_t n) {
  TransversalityReport r;
  r.transversal = false;
  r.complete = true;
  r.isolated = true;
  for (std::size_t j = 0; j < n; ++j) {
    SingularRay ray;
    ray.representative = {1, static_cast<long>(j + 2), 0, 0, 0};
    ray.classification = SingularityClass::Node;
    r.rays.push_back(ray);
  }
  return r;
}

std::optional<std::string> check_lemma_structure(const TransversalityReport& r) {
  const std::size_t n = r.rays.size();
  auto pos = build_ground_state_variety(r, Sheet::Positive);
  if (pos.strata.size() != 1 + 2 * n) return "r>0 has " + std::to_string(pos.strata.size()) + " strata";
  if (pos.attachments.size() != 2 * n || pos.connected_components != 1) return "r>0 attachment forest wrong";
  std::size_t main = pos.strata.size();
  for (std::size_t i = 0; i < pos.strata.size(); ++i) {
    if (pos.strata[i].kind == StratumKind::MainConifold) main = i;
  }
  if (main == pos.strata.size()) return "no main stratum";
  for (std::size_t i = 0; i < pos.strata.size(); ++i) {
    if (pos.strata[i].kind != StratumKind::Exocurve) continue;
    for (std::size_t k = 0; k < pos.strata.size(); ++k) {
      const bool own = pos.strata[k].kind == StratumKind::NodePoint && pos.strata[k].index == pos.strata[i].index;
      if (pos.attached(i, k) != own) return "exocurve attached off its node";
      if (own && !pos.attached(main, k)) return "node point not on main stratum";
    }
  }
  auto neg = build_ground_state_variety(r, Sheet::Negative);
  if (neg.strata.size() != n + 1 || neg.attachments.size() != n) return "r<0 is not an n-leaf star";
  std::size_t centre = neg.strata.size();
  for (std::size_t i = 0; i < neg.strata.size(); ++i) {
    if (neg.strata[i].kind == StratumKind::FuzzyPoint) centre = i;
  }
  for (const auto& a : neg.attachments) {
    if (a.first != centre && a.second != centre) return "r<0 leaf edge avoids the fuzzy point";
  }
  return std::nullopt;
}

Outcome stratification_structure() {
  for (std::size_t n : {1U, 2U, 5U, 125U}) {
    if (auto err = check_lemma_structure(synthetic_report(n))) return {false, "n=" + std::to_string(n) + ": " + *err};
  }
  auto dwork = verify_transversal(parse5(kDwork), CandidateSource::ansatz());
  if (auto err = check_lemma_structure(dwork)) return {false, "Dwork: " + *err};
  return {true, "n in {1,2,5,125} and the Dwork report: 1+2n strata forest, n-leaf star"};
}

// --- AC4 / AC5 ----------------------------------------------------------------

Outcome exocurve_gluing() {
  Atlas plus = build_exocurve(Sheet::Positive);
  REQUIRE(plus.proper_chart_count() == 1 && plus.chart(ChartName::Us).proper, "A+ proper charts wrong");
  std::mt19937_64 rng(20021029);
  auto f = CyclotomicField::get(5);
  for (int trial = 0; trial < 100; ++trial) {
    Scalar u = testing_support::random_nonzero_scalar(rng, f);
    Scalar image = transition(plus, ChartName::Up, u);
    // Oracle: five-fold product by hand.
    REQUIRE(image == u * u * u * u * u, "u_s != u_p^5");
    for (int a = 1; a < 5; ++a) {
      REQUIRE(transition(plus, ChartName::Up, u * Scalar::zeta_power(f, a)) == image, "orbit not collapsed");
    }
  }
  Atlas minus = build_exocurve(Sheet::Negative);
  REQUIRE(minus.chart(ChartName::Up).orbifold_order == 5 && minus.global_type == GlobalType::C1ModZ5,
          "A- orbifold order is not 5");
  return {true, "one proper chart U_s; 100 random orbits collapse 5-to-1 exactly; A- has Z5"};
}

Outcome compactification() {
  Atlas c = compactify(build_exocurve(Sheet::Positive));
  REQUIRE(c.compact() && c.charts.size() == 2, "not a 2-chart compact atlas");
  REQUIRE(euler_characteristic(c) == 2, "Euler characteristic != 2");
  REQUIRE(c.orbifold_points.size() == 1, "orbifold point missing");
  Rational angle = deficit_angle(c.chart(c.orbifold_points[0].chart));
  REQUIRE(angle == Rational(8, 5), "deficit angle " + format_pi_multiple(angle));
  return {true, "2 charts, compact, chi = 2, deficit " + format_pi_multiple(angle)};
}

// --- AC6 / AC7 / AC8 -------------------------------------------------------

std::vector<testing_support::RandomConifold> random_instances() {
  std::mt19937_64 rng(1996);
  std::vector<testing_support::RandomConifold> out;
  for (int i = 0; i < 200; ++i) out.push_back(testing_support::random_conifold(rng, i % 4 != 0));
  return out;
}

Outcome closure_cohomology() {
  for (const auto& r : random_instances()) {
    auto d = ConifoldData::from_incidence(GradedSpace::from_dims(r.base), r.incidence);
    GradedSpace h = cohomology_of_closure(d);
    // Oracle: raw sequence adds n degree-2 classes; collapsing equal rows
    // of the incidence matrix leaves one class per 4-cycle.
    std::set<std::vector<int>> rows(r.incidence.begin(), r.incidence.end());
    std::array<long long, 7> raw{};
    std::copy(r.base.begin(), r.base.end(), raw.begin());
    raw[2] += static_cast<long long>(r.incidence.size());
    std::array<long long, 7> collapsed = raw;
    collapsed[2] += static_cast<long long>(rows.size()) - static_cast<long long>(r.incidence.size());
    REQUIRE(compute_cohomology(d).raw.dims == raw, "raw mode disagrees with oracle");
    REQUIRE(h.dims == collapsed, "refined mode disagrees with oracle");
    for (int q = 0; q <= 6; ++q) {
      if (q != 2) REQUIRE(h[q] == d.base()[q], "H^q changed for q != 2");
    }
    REQUIRE(h[2] == d.base()[2] + static_cast<long long>(d.class_count()), "H^2 != H^2(M#) + N");
  }
  return {true, "200 random instances match the raw-MV + row-collapse oracle"};
}

Outcome euler_bookkeeping() {
  std::size_t reported = 0;
  for (const auto& r : random_instances()) {
    auto d = ConifoldData::from_incidence(GradedSpace::from_dims(r.base), r.incidence);
    auto rep = compute_cohomology(d);
    const auto n = static_cast<long long>(d.node_count());
    const auto big_n = static_cast<long long>(d.class_count());
    const long long chi = euler_characteristic(d.base());
    REQUIRE(euler_characteristic(rep.raw) == chi + n, "raw chi identity fails");
    REQUIRE(euler_characteristic(rep.refined) == chi + big_n, "refined chi identity fails");
    REQUIRE(rep.discrepancy == n - big_n, "discrepancy != n - N");
    const std::string text = format_cohomology(d, rep, check_kahler_package(rep.refined, d));
    const bool mentioned = text.find("discrepancy: " + std::to_string(n - big_n)) != std::string::npos;
    REQUIRE(mentioned == (n != big_n), "discrepancy not reported");
    reported += mentioned;
  }
  return {true, "chi identities hold on 200 instances; discrepancy reported on " + std::to_string(reported)};
}

Outcome kahler_package() {
  std::size_t consistent = 0;
  for (const auto& r : random_instances()) {
    auto d = ConifoldData::from_incidence(GradedSpace::from_dims(r.base), r.incidence);
    if (r.base[4] != r.base[2] + static_cast<long long>(d.class_count())) continue;
    ++consistent;
    auto k = check_kahler_package(cohomology_of_closure(d), d);
    REQUIRE(k.item("i").passed && k.item("ii").passed && k.item("iii").passed, "items (i)-(iii) fail");
  }
  ConifoldData bad(GradedSpace::from_dims({1, 0, 1, 0, 2, 0, 1}), 1, {{0}});
  auto violated = check_kahler_package(GradedSpace::from_dims({1, 0, 3, 0, 2, 0, 1}), bad);
  REQUIRE(!violated.item("ii").passed, "violating instance passes (ii)");
  return {true, std::to_string(consistent) + " consistent instances pass (i)-(iii); violating instance fails (ii)"};
}

// --- AC9 -------------------------------------------------------------------

Outcome resolutions() {
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t big_n = 0; big_n <= 10; ++big_n) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t k = 0; k < big_n; ++k) classes.push_back({k});
    ConifoldData d(GradedSpace::from_dims({1, 0, 1, 0, 1 + static_cast<long long>(big_n), 0, 1}), big_n, classes);
    REQUIRE(enumerate_small_resolutions(d).choices.size() == (std::size_t{1} << big_n), "wrong count");
  }
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    ResolutionChoice c;
    const std::size_t big_n = 1 + rng() % 10;
    for (std::size_t k = 0; k < big_n; ++k) c.orientation.push_back(rng() & 1U);
    const std::size_t k = 1 + rng() % big_n;
    REQUIRE(flop(flop(c, k), k) == c && flop(c, k) != c, "flop is not an involution");
  }
  ConifoldData one(GradedSpace::from_dims({1, 0, 1, 0, 2, 0, 1}), 1, {{0}});
  auto g = build_transition_graph(one);
  std::set<std::string> vertices;
  for (const auto& v : g.vertices) vertices.insert(v.id);
  REQUIRE(vertices == (std::set<std::string>{"M_flat", "V_bar", "M_res_1", "M_res_2"}), "vertex set differs");
  std::set<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& e : g.edges) {
    auto a = g.vertices[e.from].id;
    auto b = g.vertices[e.to].id;
    if (b < a) std::swap(a, b);
    edges.insert({a, b, to_string(e.kind)});
  }
  const std::set<std::tuple<std::string, std::string, std::string>> expected = {
      {"M_flat", "V_bar", "defo"},
      {"M_res_1", "V_bar", "exoflop"},
      {"M_res_2", "V_bar", "exoflop"},
      {"M_res_1", "M_res_2", "flop"}};
  REQUIRE(edges == expected && g.edges.size() == 4, "edge set differs from the diagram");
  const double t = seconds_since(t0);
  REQUIRE(t < 1.0, "took " + std::to_string(t) + " s");
  return {true, "2^N for N = 0..10; 1000 flops involutive; N = 1 diagram exact; " + std::to_string(t) + " s"};
}

// --- AC10 ------------------------------------------------------------------

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"analyze", "data/fermat.poly", "--format", "json"},
      {"analyze", "data/dwork1.poly", "--format", "json", "--jobs", "4"},
      {"analyze", "data/dwork1.poly", "--format", "json", "--source", "float"},
      {"stratify", "data/dwork1.poly", "--format", "json"},
      {"stratify", "data/fermat.poly", "--format", "json", "--sheet", "neg"},
      {"cohomology", "data/sixteen_nodes.json", "--format", "json"},
      {"cohomology", "data/two_classes.json", "--format", "json", "--mode", "raw"},
      {"resolutions", "data/two_classes.json", "--format", "json"},
      {"resolutions", "data/smooth_quintic.json", "--format", "json"},
  };
  for (const auto& c : commands) {
    std::ostringstream o1, e1, o2, e2;
    const int c1 = cli::run_cli(c, o1, e1);
    const int c2 = cli::run_cli(c, o2, e2);
    REQUIRE(c1 == 0 && c2 == 0, c[0] + " " + c[1] + " failed: " + e1.str());
    REQUIRE(o1.str() == o2.str(), c[0] + " " + c[1] + " output differs between runs");
  }
  return {true, std::to_string(commands.size()) + " CLI invocations byte-identical across reruns"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1  transversal case", transversal_case},
      {"AC2  node detection", node_detection},
      {"AC3  stratification structure", stratification_structure},
      {"AC4  exocurve gluing", exocurve_gluing},
      {"AC5  compactification", compactification},
      {"AC6  closure cohomology", closure_cohomology},
      {"AC7  exactness arithmetic", euler_bookkeeping},
      {"AC8  Kahler package", kahler_package},
      {"AC9  small resolutions", resolutions},
      {"AC10 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << " - " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
