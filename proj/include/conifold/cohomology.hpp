#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace conifold {

constexpr int kTopDegree = 6;

using HodgeNumbers = std::map<std::pair<int, int>, long long>;

// Betti numbers in degrees 0..6 over a characteristic-0 field, optionally
// refined into Hodge numbers h^{p,q} with sum over p+q=k equal to dims[k].
struct GradedSpace {
  std::array<long long, kTopDegree + 1> dims{};
  std::optional<HodgeNumbers> hodge;

  static GradedSpace from_dims(const std::vector<long long>& dims);

  long long operator[](int degree) const {
    return degree < 0 || degree > kTopDegree ? 0 : dims[static_cast<std::size_t>(degree)];
  }
  // Throws InvalidArgument on negative dims or inconsistent Hodge data.
  void validate() const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) = default;
};

GradedSpace point_cohomology(long long count);
// Disjoint union of `count` 2-spheres, with the area class of type (1,1).
GradedSpace sphere_cohomology(long long count);

long long euler_characteristic(const GradedSpace& h);

// Cohomology of M# together with the partition of its n nodes into the
// classes J_k of the 4-cycles C_k through them. Node and class indices are
// 0-based in the API and 1-based in files and reports.
class ConifoldData {
 public:
  ConifoldData(GradedSpace base, std::size_t node_count,
               std::vector<std::vector<std::size_t>> classes);

  // Builds from an n x N 0/1 matrix; every row must contain exactly one 1.
  static ConifoldData from_incidence(GradedSpace base, const std::vector<std::vector<int>>& incidence);

  const GradedSpace& base() const noexcept { return base_; }
  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  const std::vector<std::vector<std::size_t>>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t node) const { return class_of_.at(node); }
  std::vector<std::vector<int>> incidence() const;

  // Optional Betti data of the smoothing M_flat, used only by reports.
  std::optional<GradedSpace> smoothing;

 private:
  GradedSpace base_;
  std::size_t node_count_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

struct RawMode {};
struct RefinedMode {
  std::reference_wrapper<const ConifoldData> data;
};
using MvMode = std::variant<RawMode, RefinedMode>;

// H*(A u B) from H*(A), H*(B) and H*(A n B), where A n B is a finite set of
// points and the restriction to H^0(A n B) is surjective. Refined mode
// replaces the n antenna classes in degree 2 by the N classes J_k.
GradedSpace mayer_vietoris(const GradedSpace& a, const GradedSpace& b, const GradedSpace& ab,
                           const MvMode& mode);

std::vector<std::vector<std::size_t>> antenna_classes(const ConifoldData& data);

GradedSpace cohomology_of_closure(const ConifoldData& data);

struct CohomologyReport {
  GradedSpace raw;
  GradedSpace refined;
  // n - N: antenna classes identified by the refinement.
  long long discrepancy = 0;
};

CohomologyReport compute_cohomology(const ConifoldData& data);

// n x N intersection numbers [A_j] . [C_k]; also the cup-product table
// [w^j_(1,1)] u [w^k_(2,2)] evaluated at the common point x#_j.
std::vector<std::vector<int>> pairing_matrix(const ConifoldData& data);
// N x N pairing with one representative antenna per class.
std::vector<std::vector<int>> quotient_pairing(const ConifoldData& data);

struct KahlerItem {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct KahlerReport {
  std::vector<KahlerItem> items;
  std::vector<std::string> warnings;

  bool passed() const;
  const KahlerItem& item(const std::string& id) const;
};

// Poincare duality and Hodge symmetry on even-degree cohomology only; H^3
// is deliberately outside the check.
KahlerReport check_kahler_package(const GradedSpace& h, const ConifoldData& data);

std::string format_cohomology(const ConifoldData& data, const CohomologyReport& report,
                              const KahlerReport& kahler);

}  // namespace conifold
