#include "conifold/json_io.hpp"

#include <cmath>

#include "conifold/error.hpp"

namespace conifold {

namespace {

SingularityClass singularity_class_from_string(const std::string& s) {
  if (s == "Node") return SingularityClass::Node;
  if (s == "NonNode") return SingularityClass::NonNode;
  if (s == "Unclassified") return SingularityClass::Unclassified;
  throw Error(ErrorKind::InvalidArgument, "unknown singularity class '" + s + "'");
}

// Twelve decimals are far below the homotopy tolerance and keep dumps stable.
double tidy(double x) {
  double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

Json dims_to_json(const GradedSpace& h) {
  Json a = Json::array();
  for (long long d : h.dims) a.push_back(d);
  return a;
}

GradedSpace graded_from_json(const Json& dims, const Json* hodge) {
  if (!dims.is_array()) throw Error(ErrorKind::InvalidArgument, "dims must be an array");
  GradedSpace h = GradedSpace::from_dims(dims.get<std::vector<long long>>());
  if (hodge && !hodge->is_null()) {
    HodgeNumbers hn;
    for (const auto& e : *hodge) {
      auto t = e.get<std::vector<long long>>();
      if (t.size() != 3) throw Error(ErrorKind::InvalidArgument, "Hodge entries are [p, q, h]");
      hn[{static_cast<int>(t[0]), static_cast<int>(t[1])}] += t[2];
    }
    h.hodge = std::move(hn);
    h.validate();
  }
  return h;
}

Json hodge_to_json(const HodgeNumbers& hn) {
  Json a = Json::array();
  for (const auto& [pq, v] : hn) a.push_back(Json::array({pq.first, pq.second, v}));
  return a;
}

}  // namespace

Json to_json(const TransversalityReport& report) {
  Json j;
  if (report.transversal) {
    j["transversal"] = *report.transversal;
  } else {
    j["transversal"] = nullptr;
  }
  Json rays = Json::array();
  for (const auto& r : report.rays) {
    Json ray;
    if (r.is_exact()) {
      Json coords = Json::array();
      for (const auto& c : r.representative) coords.push_back(c.to_string());
      ray["coords"] = std::move(coords);
    } else {
      Json approx = Json::array();
      for (const auto& c : r.approximation) approx.push_back(Json::array({tidy(c.real()), tidy(c.imag())}));
      ray["approx"] = std::move(approx);
    }
    ray["class"] = std::string(to_string(r.classification));
    ray["corank"] = r.corank;
    rays.push_back(std::move(ray));
  }
  j["rays"] = std::move(rays);
  j["source"] = std::string(to_string(report.source));
  j["complete"] = report.complete;
  j["isolated"] = report.isolated;
  j["zeta_order"] = report.zeta_order;
  if (report.certificate) {
    j["certificate"] = {{"krull_dimension", report.certificate->krull_dimension},
                        {"degree", report.certificate->degree},
                        {"prime", report.certificate->prime}};
  }
  return j;
}

TransversalityReport report_from_json(const Json& j) {
  try {
    TransversalityReport r;
    if (j.contains("transversal") && !j["transversal"].is_null()) {
      r.transversal = j["transversal"].get<bool>();
    }
    r.zeta_order = j.value("zeta_order", 1);
    if (r.zeta_order < 1) throw Error(ErrorKind::InvalidArgument, "zeta_order must be >= 1");
    r.complete = j.at("complete").get<bool>();
    r.isolated = j.value("isolated", false);
    r.source = candidate_kind_from_string(j.value("source", std::string("ansatz")));
    for (const auto& e : j.at("rays")) {
      SingularRay ray;
      if (e.contains("coords")) {
        std::vector<Scalar> coords;
        for (const auto& c : e["coords"]) coords.push_back(parse_scalar(c.get<std::string>(), r.zeta_order));
        ray.representative = normalize_ray(std::move(coords));
      } else {
        for (const auto& c : e.at("approx")) {
          ray.approximation.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
        }
      }
      ray.classification = singularity_class_from_string(e.value("class", std::string("Unclassified")));
      ray.corank = e.value("corank", 0);
      r.rays.push_back(std::move(ray));
    }
    if (j.contains("certificate")) {
      r.certificate = JacobianCertificate{j["certificate"].at("krull_dimension").get<int>(),
                                          j["certificate"].at("degree").get<long long>(),
                                          j["certificate"].value("prime", std::uint64_t{0})};
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed report: ") + e.what());
  }
}

Json to_json(const StratifiedVariety& v) {
  Json j;
  j["sheet"] = std::string(to_string(v.sheet));
  Json strata = Json::array();
  for (const auto& s : v.strata) {
    Json e;
    e["kind"] = std::string(to_string(s.kind));
    e["label"] = s.label();
    if (s.index) e["index"] = s.index;
    e["dim"] = s.complex_dimension;
    e["compact"] = s.compact;
    if (s.orbifold_order > 1) {
      e["orbifold_group"] = "Z" + std::to_string(s.orbifold_order);
    } else {
      e["orbifold_group"] = nullptr;
    }
    if (!s.radius.empty()) e["radius"] = s.radius;
    strata.push_back(std::move(e));
  }
  j["strata"] = std::move(strata);
  Json att = Json::array();
  for (const auto& a : v.attachments) att.push_back(Json::array({a.first, a.second, a.point}));
  j["attachments"] = std::move(att);
  j["connected_components"] = v.connected_components;
  return j;
}

Json to_json(const Atlas& atlas) {
  Json j;
  j["model"] = std::string(to_string(atlas.model));
  Json charts = Json::array();
  for (const auto& c : atlas.charts) {
    charts.push_back({{"name", std::string(to_string(c.name))},
                      {"coordinate", std::string(coordinate_of(c.name))},
                      {"proper", c.proper},
                      {"orbifold_order", c.orbifold_order}});
  }
  j["charts"] = std::move(charts);
  Json tr = Json::array();
  for (const auto& t : atlas.transitions) {
    tr.push_back({{"from", std::string(to_string(t.from))},
                  {"to", std::string(to_string(t.to))},
                  {"exponent", t.exponent}});
  }
  j["transitions"] = std::move(tr);
  j["global_type"] = std::string(to_string(atlas.global_type));
  j["compact"] = atlas.compact();
  j["euler_characteristic"] = euler_characteristic(atlas);
  Json orb = Json::array();
  for (const auto& p : atlas.orbifold_points) {
    orb.push_back({{"chart", std::string(to_string(p.chart))},
                   {"order", p.order},
                   {"deficit_angle", format_pi_multiple(deficit_angle(atlas.chart(p.chart)))}});
  }
  j["orbifold_points"] = std::move(orb);
  return j;
}

Json to_json(const GradedSpace& h) {
  Json j;
  j["dims"] = dims_to_json(h);
  if (h.hodge) j["hodge"] = hodge_to_json(*h.hodge);
  j["euler_characteristic"] = euler_characteristic(h);
  return j;
}

ConifoldData conifold_data_from_json(const Json& j) {
  try {
    const Json* hodge = j.contains("base_hodge") ? &j["base_hodge"] : nullptr;
    GradedSpace base = graded_from_json(j.at("base_dims"), hodge);
    const long long n = j.at("n").get<long long>();
    if (n < 0) throw Error(ErrorKind::MalformedIncidence, "negative node count");
    std::vector<std::vector<std::size_t>> classes;
    for (const auto& cls : j.at("classes")) {
      std::vector<std::size_t> members;
      for (const auto& idx : cls) {
        const long long v = idx.get<long long>();
        if (v < 1 || v > n) {
          throw Error(ErrorKind::MalformedIncidence, "node index " + std::to_string(v) + " out of range 1.." +
                                                         std::to_string(n));
        }
        members.push_back(static_cast<std::size_t>(v - 1));
      }
      classes.push_back(std::move(members));
    }
    ConifoldData data(std::move(base), static_cast<std::size_t>(n), std::move(classes));
    if (j.contains("smooth_dims")) data.smoothing = graded_from_json(j["smooth_dims"], nullptr);
    return data;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed conifold data: ") + e.what());
  }
}

Json to_json(const ConifoldData& data) {
  Json j;
  j["base_dims"] = dims_to_json(data.base());
  if (data.base().hodge) j["base_hodge"] = hodge_to_json(*data.base().hodge);
  j["n"] = data.node_count();
  Json classes = Json::array();
  for (const auto& cls : data.classes()) {
    Json c = Json::array();
    for (std::size_t v : cls) c.push_back(v + 1);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  if (data.smoothing) j["smooth_dims"] = dims_to_json(*data.smoothing);
  return j;
}

Json to_json(const CohomologyReport& report, const KahlerReport& kahler) {
  Json j;
  j["raw"] = to_json(report.raw);
  j["refined"] = to_json(report.refined);
  j["discrepancy"] = report.discrepancy;
  Json k;
  k["passed"] = kahler.passed();
  Json items = Json::array();
  for (const auto& i : kahler.items) {
    items.push_back({{"id", i.id}, {"description", i.description}, {"passed", i.passed}, {"detail", i.detail}});
  }
  k["items"] = std::move(items);
  k["warnings"] = kahler.warnings;
  j["kahler"] = std::move(k);
  return j;
}

Json to_json(const TransitionGraph& g) {
  Json j;
  j["class_count"] = g.class_count;
  j["hypercube_extension"] = g.hypercube_extension;
  Json vs = Json::array();
  for (const auto& v : g.vertices) {
    Json e;
    e["id"] = v.id;
    e["kind"] = to_string(v.kind);
    if (v.choice) {
      Json bits = Json::array();
      for (bool b : v.choice->orientation) bits.push_back(b ? 1 : 0);
      e["orientation"] = std::move(bits);
    }
    if (v.dims) {
      e["dims"] = dims_to_json(*v.dims);
    } else {
      e["dims"] = nullptr;
    }
    vs.push_back(std::move(e));
  }
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (const auto& e : g.edges) {
    Json x;
    x["from"] = g.vertices[e.from].id;
    x["to"] = g.vertices[e.to].id;
    x["kind"] = to_string(e.kind);
    if (e.flopped_class) x["class"] = *e.flopped_class;
    if (!e.note.empty()) x["note"] = e.note;
    es.push_back(std::move(x));
  }
  j["edges"] = std::move(es);
  Json adj = Json::object();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    Json nb = Json::array();
    for (const auto& e : g.edges) {
      if (e.from == i) nb.push_back(g.vertices[e.to].id);
      if (e.to == i) nb.push_back(g.vertices[e.from].id);
    }
    adj[g.vertices[i].id] = std::move(nb);
  }
  j["adjacency"] = std::move(adj);
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace conifold
