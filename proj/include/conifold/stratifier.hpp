#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "conifold/polynomial.hpp"
#include "conifold/singular_locus.hpp"

namespace conifold {

enum class StratumKind { MainConifold, SmoothCY, Exocurve, NodePoint, FuzzyPoint };

std::string_view to_string(StratumKind kind);

struct Stratum {
  StratumKind kind = StratumKind::SmoothCY;
  // 1-based node index j for Exocurve / NodePoint, 0 otherwise.
  int index = 0;
  int complex_dimension = 0;
  bool compact = true;
  // Order of the orbifold stabiliser (5 for the fuzzy point and A^-_j).
  int orbifold_order = 1;
  // Symbolic radius constraint from the D-term; never evaluated.
  std::string radius;

  std::string label() const;
};

struct Attachment {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string point;
};

// Ground-state variety of one sheet. Attachments are unordered pairs.
struct StratifiedVariety {
  Sheet sheet = Sheet::Positive;
  std::vector<Stratum> strata;
  std::vector<Attachment> attachments;
  int connected_components = 0;

  bool attached(std::size_t a, std::size_t b) const;
  std::size_t count(StratumKind kind) const;
  std::vector<int> dimension_sequence() const;
};

StratifiedVariety build_ground_state_variety(const TransversalityReport& report, Sheet sheet);

// Human-readable summary; the first line is the headline.
std::string strata_report(const StratifiedVariety& v);

// Number of connected components of the attachment graph.
int count_components(std::size_t vertices, const std::vector<Attachment>& edges);

}  // namespace conifold
