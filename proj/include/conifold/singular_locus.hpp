#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "conifold/groebner.hpp"
#include "conifold/polynomial.hpp"

namespace conifold {

enum class SingularityClass { Node, NonNode, Unclassified };

std::string_view to_string(SingularityClass c);

struct SingularityInfo {
  SingularityClass classification = SingularityClass::Unclassified;
  // 4 - rank of the affine Hessian; zero for nodes.
  int corank = 0;
};

// A projective direction s# with dG(s#) = 0. Exact rays carry a
// representative whose first nonzero coordinate is 1. Rays found only
// numerically carry `approximation` instead and stay Unclassified.
struct SingularRay {
  std::vector<Scalar> representative;
  std::vector<std::complex<double>> approximation;
  SingularityClass classification = SingularityClass::Unclassified;
  int corank = 0;

  bool is_exact() const { return !representative.empty(); }
};

enum class CandidateKind { AnsatzRoots, UserList, FloatHomotopy };

std::string_view to_string(CandidateKind kind);
CandidateKind candidate_kind_from_string(std::string_view name);

// Where candidate rays come from. Nothing here proves completeness; that is
// the job of the Jacobian-ideal certificate in verify_transversal.
struct CandidateSource {
  CandidateKind kind = CandidateKind::AnsatzRoots;
  std::vector<std::vector<Scalar>> user_points;
  unsigned jobs = 1;
  std::uint64_t seed = 20021029;

  static CandidateSource ansatz(unsigned jobs = 1) {
    CandidateSource s;
    s.jobs = jobs;
    return s;
  }
  static CandidateSource user(std::vector<std::vector<Scalar>> points) {
    CandidateSource s;
    s.kind = CandidateKind::UserList;
    s.user_points = std::move(points);
    return s;
  }
  static CandidateSource float_homotopy() {
    CandidateSource s;
    s.kind = CandidateKind::FloatHomotopy;
    return s;
  }
};

struct JacobianCertificate {
  // Krull dimension and degree of k[s]/(dG). Dimension 0 means dG = 0 only
  // at the origin; dimension 1 means finitely many singular rays whose
  // Tjurina numbers sum to `degree`.
  int krull_dimension = -1;
  long long degree = 0;
  // 0 when computed over Q. Otherwise the values come from the image in
  // F_prime[s] and are upper bounds for the ones over Q.
  std::uint64_t prime = 0;
};

struct TransversalityReport {
  // nullopt when neither a singular ray nor a smoothness proof was found.
  std::optional<bool> transversal;
  std::vector<SingularRay> rays;
  bool isolated = false;
  bool complete = false;
  CandidateKind source = CandidateKind::AnsatzRoots;
  int zeta_order = 1;
  std::optional<JacobianCertificate> certificate;

  std::size_t node_count() const;
};

// Scales so the first nonzero coordinate is 1; throws OriginRay on zero.
std::vector<Scalar> normalize_ray(std::vector<Scalar> point);

SingularityInfo classify_singularity(const Polynomial& g, const std::vector<Scalar>& ray);

std::vector<SingularRay> find_singular_rays(const Polynomial& g, const CandidateSource& source);

TransversalityReport verify_transversal(const Polynomial& g, const CandidateSource& source,
                                        const GroebnerBudget& budget = {});

// Complex critical points of the dehomogenised G in every affine chart,
// found by total-degree homotopy continuation. Points are returned in
// homogeneous coordinates with the chart coordinate set to 1.
std::vector<std::vector<std::complex<double>>> numeric_singular_points(const Polynomial& g,
                                                                       std::uint64_t seed);

}  // namespace conifold
