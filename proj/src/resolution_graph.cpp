#include "conifold/resolution_graph.hpp"

#include <algorithm>
#include <sstream>

#include <gmpxx.h>

#include "conifold/error.hpp"

namespace conifold {

std::string ResolutionChoice::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < orientation.size(); ++k) {
    if (k) s += ',';
    s += orientation[k] ? '1' : '0';
  }
  return s + ")";
}

ResolutionEnumeration enumerate_small_resolutions(const ConifoldData& data) {
  const std::size_t big_n = data.class_count();
  if (data.node_count() > 0 && big_n == 0) {
    throw Error(ErrorKind::MalformedIncidence, "nodes present but no 4-cycle classes");
  }
  if (big_n > kMaxResolutionClasses) {
    throw Error(ErrorKind::Resource, std::to_string(big_n) + " classes exceed the limit of " +
                                         std::to_string(kMaxResolutionClasses));
  }
  ResolutionEnumeration out;
  const std::size_t total = std::size_t{1} << big_n;
  out.choices.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    ResolutionChoice c;
    c.orientation.resize(big_n);
    for (std::size_t k = 0; k < big_n; ++k) c.orientation[k] = (mask >> k) & 1U;
    out.choices.push_back(std::move(c));
  }
  mpz_class naive;
  mpz_ui_pow_ui(naive.get_mpz_t(), 2, data.node_count());
  out.naive_count = naive.get_str();
  return out;
}

ResolutionChoice flop(const ResolutionChoice& c, std::size_t k) {
  if (k < 1 || k > c.class_count()) {
    throw Error(ErrorKind::InvalidArgument, "flop class " + std::to_string(k) + " out of range 1.." +
                                                std::to_string(c.class_count()));
  }
  ResolutionChoice out = c;
  out.orientation[k - 1] = !out.orientation[k - 1];
  return out;
}

std::size_t hamming_distance(const ResolutionChoice& a, const ResolutionChoice& b) {
  if (a.class_count() != b.class_count()) {
    throw Error(ErrorKind::InvalidArgument, "resolution choices of different length");
  }
  std::size_t d = 0;
  for (std::size_t k = 0; k < a.class_count(); ++k) d += a.orientation[k] != b.orientation[k];
  return d;
}

std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Smoothing: return "smoothing";
    case VertexKind::Closure: return "closure";
    case VertexKind::Resolution: return "resolution";
  }
  return "?";
}

std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Defo: return "defo";
    case EdgeKind::Exoflop: return "exoflop";
    case EdgeKind::Flop: return "flop";
  }
  return "?";
}

std::size_t TransitionGraph::count(EdgeKind k) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [k](const GraphEdge& e) { return e.kind == k; }));
}

std::size_t TransitionGraph::degree(std::size_t vertex, EdgeKind k) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const GraphEdge& e) {
    return e.kind == k && (e.from == vertex || e.to == vertex);
  }));
}

std::size_t TransitionGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return i;
  }
  throw Error(ErrorKind::InvalidArgument, "no vertex " + id);
}

TransitionGraph build_transition_graph(const ConifoldData& data) {
  TransitionGraph g;
  g.class_count = data.class_count();

  if (data.node_count() == 0) {
    // Nothing to resolve: the smoothing and the closure coincide.
    g.vertices.push_back({"M_flat", VertexKind::Smoothing, std::nullopt, data.base()});
    return g;
  }

  const auto resolutions = enumerate_small_resolutions(data);
  const GradedSpace closure = cohomology_of_closure(data);
  g.hypercube_extension = g.class_count > 1;

  g.vertices.push_back({"M_flat", VertexKind::Smoothing, std::nullopt, data.smoothing});
  g.vertices.push_back({"V_bar", VertexKind::Closure, std::nullopt, closure});
  for (std::size_t i = 0; i < resolutions.choices.size(); ++i) {
    g.vertices.push_back({"M_res_" + std::to_string(i + 1), VertexKind::Resolution,
                          resolutions.choices[i], closure});
  }

  g.edges.push_back({0, 1, EdgeKind::Defo, "replaces each node with a real 3-bundle over S^3",
                     std::nullopt});
  const std::size_t first = 2;
  const std::size_t total = resolutions.choices.size();
  for (std::size_t i = 0; i < total; ++i) {
    g.edges.push_back({1, first + i, EdgeKind::Exoflop, "", std::nullopt});
  }
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t k = 0; k < g.class_count; ++k) {
      const std::size_t j = i ^ (std::size_t{1} << k);
      if (j > i) g.edges.push_back({first + i, first + j, EdgeKind::Flop, "", k + 1});
    }
  }
  return g;
}

std::string to_dot(const TransitionGraph& g) {
  std::ostringstream os;
  os << "graph transitions {\n";
  for (const auto& v : g.vertices) {
    os << "  " << v.id;
    if (v.choice) os << " [label=\"" << v.id << "\\n" << v.choice->to_string() << "\"]";
    os << ";\n";
  }
  for (const auto& e : g.edges) {
    os << "  " << g.vertices[e.from].id << " -- " << g.vertices[e.to].id << " [label=\""
       << to_string(e.kind);
    if (e.flopped_class) os << " " << *e.flopped_class;
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace conifold
