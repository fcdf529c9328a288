#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "conifold/cohomology.hpp"
#include "conifold/error.hpp"
#include "conifold/exocurve_atlas.hpp"
#include "conifold/json_io.hpp"
#include "conifold/resolution_graph.hpp"
#include "conifold/singular_locus.hpp"
#include "conifold/stratifier.hpp"

namespace conifold::cli {

namespace {

struct SessionConfig {
  int zeta_order = 5;
  std::string source = "ansatz";
  std::string candidates;
  unsigned jobs = 1;
  std::string sheet = "pos";
  std::string mode = "refined";
  std::string format = "text";
  std::string output;
  std::string dot;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

// Polynomial files may contain '#' comments and span several lines.
std::string polynomial_text(const std::string& input) {
  std::string raw = std::filesystem::is_regular_file(input) ? read_file(input) : input;
  std::string text;
  std::istringstream lines(raw);
  for (std::string line; std::getline(lines, line);) {
    line = line.substr(0, line.find('#'));
    text += line + ' ';
  }
  return text;
}

std::vector<std::vector<Scalar>> read_candidates(const std::string& path, int zeta_order) {
  std::vector<std::vector<Scalar>> points;
  std::istringstream lines(read_file(path));
  for (std::string line; std::getline(lines, line);) {
    line = line.substr(0, line.find('#'));
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::vector<Scalar> point;
    for (std::string f; fields >> f;) point.push_back(parse_scalar(f, zeta_order));
    if (!point.empty()) points.push_back(std::move(point));
  }
  return points;
}

TransversalityReport analyze(const std::string& input, const SessionConfig& cfg) {
  if (cfg.zeta_order < 1) throw Error(ErrorKind::InvalidArgument, "--zeta-order must be >= 1");
  ParseOptions opts;
  opts.zeta_order = cfg.zeta_order;
  Polynomial g = parse_polynomial(polynomial_text(input), opts);
  CandidateSource source;
  source.kind = candidate_kind_from_string(cfg.source);
  source.jobs = std::max(1U, cfg.jobs);
  if (source.kind == CandidateKind::UserList) {
    if (cfg.candidates.empty()) throw Error(ErrorKind::InvalidArgument, "--source user needs --candidates");
    source.user_points = read_candidates(cfg.candidates, cfg.zeta_order);
  }
  return verify_transversal(g, source);
}

std::string headline(const TransversalityReport& r) {
  if (r.transversal == true) return "transversal";
  const std::size_t nodes = r.node_count();
  if (!r.rays.empty() && nodes == r.rays.size()) {
    return std::to_string(nodes) + (nodes == 1 ? " node" : " nodes");
  }
  if (!r.rays.empty()) {
    std::size_t non_nodes = 0;
    for (const auto& ray : r.rays) non_nodes += ray.classification == SingularityClass::NonNode;
    return std::to_string(r.rays.size()) + " singular rays (" + std::to_string(nodes) + " nodes, " +
           std::to_string(non_nodes) + " non-nodes, " + std::to_string(r.rays.size() - nodes - non_nodes) +
           " unclassified)";
  }
  return "unclassified: no singular ray found and smoothness not certified";
}

std::string format_report(const TransversalityReport& r) {
  std::ostringstream os;
  os << headline(r) << "\n";
  os << "source: " << to_string(r.source) << ", zeta order " << r.zeta_order
     << ", complete: " << (r.complete ? "yes" : "no") << ", isolated: " << (r.isolated ? "yes" : "no")
     << "\n";
  if (r.certificate) {
    os << "jacobian ideal: dimension " << r.certificate->krull_dimension << ", degree "
       << r.certificate->degree;
    if (r.certificate->prime != 0) os << " (bound via F_" << r.certificate->prime << ")";
    os << "\n";
  } else {
    os << "jacobian ideal: not certified\n";
  }
  for (std::size_t i = 0; i < r.rays.size(); ++i) {
    const auto& ray = r.rays[i];
    os << "  " << i + 1 << ": (";
    if (ray.is_exact()) {
      for (std::size_t c = 0; c < ray.representative.size(); ++c) {
        os << (c ? ", " : "") << ray.representative[c].to_string();
      }
    } else {
      auto tidy = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
      for (std::size_t c = 0; c < ray.approximation.size(); ++c) {
        const double re = tidy(ray.approximation[c].real());
        const double im = tidy(ray.approximation[c].imag());
        os << (c ? ", " : "") << re << (im < 0 ? "" : "+") << im << "i";
      }
    }
    os << ")  " << to_string(ray.classification);
    if (ray.classification == SingularityClass::NonNode) os << " (corank " << ray.corank << ")";
    os << "\n";
  }
  return os.str();
}

bool looks_like_json(const std::string& input) {
  if (input.ends_with(".json")) return true;
  auto pos = input.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && input[pos] == '{';
}

Json load_json(const std::string& input) {
  return parse_json(std::filesystem::is_regular_file(input) ? read_file(input) : input);
}

Sheet parse_sheet(const std::string& s) {
  if (s == "pos" || s == "positive" || s == "+") return Sheet::Positive;
  if (s == "neg" || s == "negative" || s == "-") return Sheet::Negative;
  throw Error(ErrorKind::InvalidArgument, "--sheet must be pos or neg");
}

void emit(const std::string& text, const SessionConfig& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_file(cfg.output, text);
  }
}

int cmd_analyze(const std::string& input, const SessionConfig& cfg, std::ostream& out) {
  const TransversalityReport r = analyze(input, cfg);
  emit(cfg.format == "json" ? to_json(r).dump(2) + "\n" : format_report(r), cfg, out);
  const bool unclassified = !r.transversal.has_value() ||
                            std::any_of(r.rays.begin(), r.rays.end(), [](const SingularRay& ray) {
                              return ray.classification == SingularityClass::Unclassified;
                            });
  return r.complete && !unclassified ? kSuccess : kIncomplete;
}

int cmd_stratify(const std::string& input, const SessionConfig& cfg, std::ostream& out) {
  const TransversalityReport r = looks_like_json(input) ? report_from_json(load_json(input)) : analyze(input, cfg);
  const Sheet sheet = parse_sheet(cfg.sheet);
  const StratifiedVariety v = build_ground_state_variety(r, sheet);
  if (cfg.format == "json") {
    Json j = to_json(v);
    if (r.node_count() > 0) {
      const Atlas exo = build_exocurve(sheet);
      j["exocurve_atlas"] = to_json(exo);
      if (sheet == Sheet::Positive) j["compactified_exocurve_atlas"] = to_json(compactify(exo));
    }
    emit(j.dump(2) + "\n", cfg, out);
  } else {
    emit(strata_report(v), cfg, out);
  }
  return kSuccess;
}

int cmd_cohomology(const std::string& input, const SessionConfig& cfg, std::ostream& out) {
  if (cfg.mode != "raw" && cfg.mode != "refined") {
    throw Error(ErrorKind::InvalidArgument, "--mode must be raw or refined");
  }
  const ConifoldData data = conifold_data_from_json(load_json(input));
  const CohomologyReport report = compute_cohomology(data);
  const GradedSpace& h = cfg.mode == "raw" ? report.raw : report.refined;
  const KahlerReport kahler = check_kahler_package(h, data);
  if (cfg.format == "json") {
    Json j;
    j["mode"] = cfg.mode;
    j["n"] = data.node_count();
    j["N"] = data.class_count();
    j["cohomology"] = to_json(h);
    Json pairing = Json::array();
    for (const auto& row : pairing_matrix(data)) pairing.push_back(row);
    j["pairing_matrix"] = std::move(pairing);
    Json rest = to_json(report, kahler);
    for (auto it = rest.begin(); it != rest.end(); ++it) j[it.key()] = it.value();
    emit(j.dump(2) + "\n", cfg, out);
  } else {
    emit("mode: " + cfg.mode + "\n" + format_cohomology(data, report, kahler), cfg, out);
  }
  return kSuccess;
}

std::string format_graph(const TransitionGraph& g, const ResolutionEnumeration& e, std::size_t n) {
  std::ostringstream os;
  os << e.choices.size() << " small resolutions (naive per-node count 2^" << n << " = " << e.naive_count
     << ")\n";
  os << g.vertices.size() << " vertices, " << g.count(EdgeKind::Defo) << " defo, "
     << g.count(EdgeKind::Exoflop) << " exoflop, " << g.count(EdgeKind::Flop) << " flop edges\n";
  if (g.hypercube_extension) os << "note: flop edges for N > 1 follow the hypercube extension\n";
  for (const auto& edge : g.edges) {
    os << "  " << g.vertices[edge.from].id << " -- " << g.vertices[edge.to].id << "  " << to_string(edge.kind);
    if (edge.flopped_class) os << " " << *edge.flopped_class;
    if (!edge.note.empty()) os << " (" << edge.note << ")";
    os << "\n";
  }
  return os.str();
}

int cmd_resolutions(const std::string& input, const SessionConfig& cfg, std::ostream& out) {
  const ConifoldData data = conifold_data_from_json(load_json(input));
  const ResolutionEnumeration e = data.node_count() == 0 ? ResolutionEnumeration{{ResolutionChoice{}}, "1"}
                                                         : enumerate_small_resolutions(data);
  const TransitionGraph g = build_transition_graph(data);
  if (!cfg.dot.empty()) write_file(cfg.dot, to_dot(g));
  if (cfg.format == "dot") {
    emit(to_dot(g), cfg, out);
  } else if (cfg.format == "json") {
    Json j;
    j["resolution_count"] = e.choices.size();
    j["naive_count"] = e.naive_count;
    j["graph"] = to_json(g);
    emit(j.dump(2) + "\n", cfg, out);
  } else {
    emit(format_graph(g, e, data.node_count()), cfg, out);
  }
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ground-state varieties, conifold cohomology and small resolutions of quintic GLSMs",
               "conifold"};
  app.require_subcommand(1);
  SessionConfig cfg;
  std::string input;

  const std::vector<std::string> formats = {"text", "json"};
  auto add_common = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed));
    sub->add_option("-o,--output", cfg.output, "Write output to a file instead of stdout");
  };
  auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--zeta-order", cfg.zeta_order, "Order k of the root of unity `zeta` (default 5)");
    sub->add_option("--source", cfg.source, "Candidate rays: ansatz, user or float")
        ->check(CLI::IsMember({"ansatz", "user", "float"}));
    sub->add_option("--candidates", cfg.candidates, "File of candidate points for --source user");
    sub->add_option("--jobs", cfg.jobs, "Worker threads for candidate checking");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Find singular rays and certify transversality");
  analyze_cmd->add_option("input", input, "Polynomial file or inline polynomial")->required();
  add_analysis(analyze_cmd);
  add_common(analyze_cmd, formats);

  auto* stratify_cmd = app.add_subcommand("stratify", "Stratify the ground-state variety of one sheet");
  stratify_cmd->add_option("input", input, "Report JSON or polynomial")->required();
  stratify_cmd->add_option("--sheet", cfg.sheet, "pos (r > 0) or neg (r < 0)");
  add_analysis(stratify_cmd);
  add_common(stratify_cmd, formats);

  auto* cohomology_cmd = app.add_subcommand("cohomology", "Cohomology of the compactified conifold");
  cohomology_cmd->add_option("input", input, "Conifold data JSON")->required();
  cohomology_cmd->add_option("--mode", cfg.mode, "raw or refined (default refined)");
  add_common(cohomology_cmd, formats);

  auto* resolutions_cmd = app.add_subcommand("resolutions", "Small resolutions and transition graph");
  resolutions_cmd->add_option("input", input, "Conifold data JSON")->required();
  resolutions_cmd->add_option("--dot", cfg.dot, "Also write the graph in DOT format to this file");
  add_common(resolutions_cmd, {"text", "json", "dot"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(input, cfg, out);
    if (stratify_cmd->parsed()) return cmd_stratify(input, cfg, out);
    if (cohomology_cmd->parsed()) return cmd_cohomology(input, cfg, out);
    if (resolutions_cmd->parsed()) return cmd_resolutions(input, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::IncompleteReport ? kIncomplete : kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace conifold::cli
