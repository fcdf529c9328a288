#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conifold/cohomology.hpp"

namespace conifold {

// One orientation bit per 4-cycle class; every node in J_k is resolved the
// same way.
struct ResolutionChoice {
  std::vector<bool> orientation;

  std::size_t class_count() const noexcept { return orientation.size(); }
  std::string to_string() const;  // e.g. "(0,1,0)"
  friend bool operator==(const ResolutionChoice&, const ResolutionChoice&) = default;
};

constexpr std::size_t kMaxResolutionClasses = 20;

struct ResolutionEnumeration {
  std::vector<ResolutionChoice> choices;  // binary counting order, class 1 least significant
  std::string naive_count;                // 2^n as a decimal string
};

ResolutionEnumeration enumerate_small_resolutions(const ConifoldData& data);

// Flips class k (1-based).
ResolutionChoice flop(const ResolutionChoice& c, std::size_t k);

std::size_t hamming_distance(const ResolutionChoice& a, const ResolutionChoice& b);

enum class VertexKind { Smoothing, Closure, Resolution };
enum class EdgeKind { Defo, Exoflop, Flop };

std::string to_string(VertexKind k);
std::string to_string(EdgeKind k);

struct GraphVertex {
  std::string id;
  VertexKind kind;
  std::optional<ResolutionChoice> choice;
  std::optional<GradedSpace> dims;
};

struct GraphEdge {
  std::size_t from;
  std::size_t to;
  EdgeKind kind;
  std::string note;
  std::optional<std::size_t> flopped_class;  // 1-based
};

struct TransitionGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::size_t class_count = 0;
  bool hypercube_extension = false;

  std::size_t count(EdgeKind k) const;
  std::size_t degree(std::size_t vertex, EdgeKind k) const;
  std::size_t index_of(const std::string& id) const;
};

TransitionGraph build_transition_graph(const ConifoldData& data);

std::string to_dot(const TransitionGraph& g);

}  // namespace conifold
