#include "conifold/cohomology.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "conifold/error.hpp"
#include "conifold/linear_algebra.hpp"

namespace conifold {

GradedSpace GradedSpace::from_dims(const std::vector<long long>& dims) {
  if (dims.size() > static_cast<std::size_t>(kTopDegree + 1)) {
    throw Error(ErrorKind::InvalidArgument, "cohomology is supported in degrees 0..6 only");
  }
  GradedSpace h;
  std::copy(dims.begin(), dims.end(), h.dims.begin());
  h.validate();
  return h;
}

void GradedSpace::validate() const {
  for (int q = 0; q <= kTopDegree; ++q) {
    if ((*this)[q] < 0) {
      throw Error(ErrorKind::InvalidArgument, "negative dimension in degree " + std::to_string(q));
    }
  }
  if (!hodge) return;
  std::array<long long, kTopDegree + 1> sums{};
  for (const auto& [pq, h] : *hodge) {
    auto [p, q] = pq;
    if (p < 0 || q < 0 || p + q > kTopDegree || h < 0) {
      throw Error(ErrorKind::InvalidArgument, "invalid Hodge number h^{" + std::to_string(p) + "," +
                                                  std::to_string(q) + "}");
    }
    sums[static_cast<std::size_t>(p + q)] += h;
  }
  if (sums != dims) {
    throw Error(ErrorKind::InvalidArgument, "Hodge numbers do not sum to the Betti numbers");
  }
}

GradedSpace point_cohomology(long long count) {
  GradedSpace h;
  h.dims[0] = count;
  h.hodge = HodgeNumbers{{{0, 0}, count}};
  return h;
}

GradedSpace sphere_cohomology(long long count) {
  GradedSpace h;
  h.dims[0] = count;
  h.dims[2] = count;
  h.hodge = HodgeNumbers{{{0, 0}, count}, {{1, 1}, count}};
  return h;
}

long long euler_characteristic(const GradedSpace& h) {
  long long chi = 0;
  for (int q = 0; q <= kTopDegree; ++q) chi += (q % 2 == 0 ? 1 : -1) * h[q];
  return chi;
}

ConifoldData::ConifoldData(GradedSpace base, std::size_t node_count,
                           std::vector<std::vector<std::size_t>> classes)
    : base_(std::move(base)), node_count_(node_count), classes_(std::move(classes)) {
  base_.validate();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  class_of_.assign(node_count_, kUnassigned);
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    if (classes_[k].empty()) {
      throw Error(ErrorKind::MalformedIncidence, "class " + std::to_string(k + 1) + " is empty");
    }
    std::sort(classes_[k].begin(), classes_[k].end());
    for (std::size_t j : classes_[k]) {
      if (j >= node_count_) {
        throw Error(ErrorKind::MalformedIncidence, "node " + std::to_string(j + 1) + " out of range");
      }
      if (class_of_[j] != kUnassigned) {
        throw Error(ErrorKind::MalformedIncidence,
                    "node " + std::to_string(j + 1) + " lies in more than one class");
      }
      class_of_[j] = k;
    }
  }
  for (std::size_t j = 0; j < node_count_; ++j) {
    if (class_of_[j] == kUnassigned) {
      throw Error(ErrorKind::MalformedIncidence, "node " + std::to_string(j + 1) + " lies in no class");
    }
  }
}

ConifoldData ConifoldData::from_incidence(GradedSpace base,
                                          const std::vector<std::vector<int>>& incidence) {
  const std::size_t n = incidence.size();
  const std::size_t cols = n == 0 ? 0 : incidence[0].size();
  std::vector<std::vector<std::size_t>> classes(cols);
  for (std::size_t j = 0; j < n; ++j) {
    if (incidence[j].size() != cols) {
      throw Error(ErrorKind::MalformedIncidence, "ragged incidence matrix");
    }
    int row_sum = 0;
    for (std::size_t k = 0; k < cols; ++k) {
      int v = incidence[j][k];
      if (v != 0 && v != 1) throw Error(ErrorKind::MalformedIncidence, "incidence entries must be 0/1");
      row_sum += v;
      if (v == 1) classes[k].push_back(j);
    }
    if (row_sum != 1) {
      throw Error(ErrorKind::MalformedIncidence, "node " + std::to_string(j + 1) + " lies in " +
                                                     std::to_string(row_sum) + " classes");
    }
  }
  return ConifoldData(std::move(base), n, std::move(classes));
}

std::vector<std::vector<int>> ConifoldData::incidence() const {
  std::vector<std::vector<int>> m(node_count_, std::vector<int>(classes_.size(), 0));
  for (std::size_t j = 0; j < node_count_; ++j) m[j][class_of_[j]] = 1;
  return m;
}

GradedSpace mayer_vietoris(const GradedSpace& a, const GradedSpace& b, const GradedSpace& ab,
                           const MvMode& mode) {
  a.validate();
  b.validate();
  ab.validate();
  for (int q = 1; q <= kTopDegree; ++q) {
    if (ab[q] != 0) {
      throw Error(ErrorKind::InvalidArgument, "intersection must be a finite set of points");
    }
  }
  const long long n = ab[0];
  if (n > 0 && (a[0] == 0 || b[0] == 0)) {
    throw Error(ErrorKind::ExactnessViolation, "intersection points must lie in both pieces");
  }
  if (a[0] + b[0] < n) {
    throw Error(ErrorKind::ExactnessViolation,
                "restriction to H^0 of the intersection cannot be surjective");
  }

  GradedSpace out;
  // Surjectivity of the restriction splits the sequence into
  // 0 -> H^0 -> H^0(A)+H^0(B) -> C^n -> 0 and H^q = H^q(A)+H^q(B), q >= 1.
  out.dims[0] = a[0] + b[0] - n;
  for (int q = 1; q <= kTopDegree; ++q) out.dims[static_cast<std::size_t>(q)] = a[q] + b[q];

  long long antenna_shift = 0;
  if (const auto* refined = std::get_if<RefinedMode>(&mode)) {
    const ConifoldData& data = refined->data.get();
    if (static_cast<long long>(data.node_count()) != n) {
      throw Error(ErrorKind::InvalidArgument, "refined mode: node count does not match intersection");
    }
    if (b[2] != n) {
      throw Error(ErrorKind::ExactnessViolation,
                  "refined mode expects one degree-2 antenna class per node");
    }
    antenna_shift = static_cast<long long>(data.class_count()) - n;
    out.dims[2] += antenna_shift;
  }

  if (a.hodge && b.hodge) {
    HodgeNumbers h = *a.hodge;
    for (const auto& [pq, v] : *b.hodge) h[pq] += v;
    h[{0, 0}] -= n;
    if (antenna_shift != 0) h[{1, 1}] += antenna_shift;
    std::erase_if(h, [](const auto& kv) { return kv.second == 0; });
    out.hodge = std::move(h);
  }
  out.validate();
  return out;
}

std::vector<std::vector<std::size_t>> antenna_classes(const ConifoldData& data) {
  return data.classes();
}

GradedSpace cohomology_of_closure(const ConifoldData& data) {
  const auto n = static_cast<long long>(data.node_count());
  return mayer_vietoris(data.base(), sphere_cohomology(n), point_cohomology(n), RefinedMode{data});
}

CohomologyReport compute_cohomology(const ConifoldData& data) {
  const auto n = static_cast<long long>(data.node_count());
  CohomologyReport r;
  r.raw = mayer_vietoris(data.base(), sphere_cohomology(n), point_cohomology(n), RawMode{});
  r.refined = cohomology_of_closure(data);
  r.discrepancy = n - static_cast<long long>(data.class_count());
  return r;
}

std::vector<std::vector<int>> pairing_matrix(const ConifoldData& data) { return data.incidence(); }

std::vector<std::vector<int>> quotient_pairing(const ConifoldData& data) {
  auto full = data.incidence();
  std::vector<std::vector<int>> out;
  for (const auto& cls : data.classes()) out.push_back(full[cls.front()]);
  return out;
}

bool KahlerReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const KahlerItem& i) { return i.passed; });
}

const KahlerItem& KahlerReport::item(const std::string& id) const {
  auto it = std::find_if(items.begin(), items.end(), [&](const KahlerItem& i) { return i.id == id; });
  if (it == items.end()) throw Error(ErrorKind::InvalidArgument, "no Kahler item " + id);
  return *it;
}

KahlerReport check_kahler_package(const GradedSpace& h, const ConifoldData& data) {
  KahlerReport report;
  const auto big_n = static_cast<long long>(data.class_count());
  const GradedSpace& base = data.base();
  if (base[4] != base[2] + big_n) {
    report.warnings.push_back("base data has dim H^4(M#) = " + std::to_string(base[4]) +
                              " but dim H^2(M#) + N = " + std::to_string(base[2] + big_n));
  }

  report.items.push_back({"i", "dim H^0 = dim H^6", h[0] == h[6],
                          std::to_string(h[0]) + " vs " + std::to_string(h[6])});
  report.items.push_back({"ii", "dim H^2 = dim H^4", h[2] == h[4],
                          std::to_string(h[2]) + " vs " + std::to_string(h[4])});

  Matrix<Rational> q;
  for (const auto& row : quotient_pairing(data)) {
    std::vector<Rational> r;
    for (int v : row) r.emplace_back(v);
    q.push_back(std::move(r));
  }
  const int rank = exact_rank(std::move(q));
  const long long complement2 = h[2] - big_n;
  const long long complement4 = h[4] - big_n;
  const bool pairing_ok = rank == big_n && complement2 >= 0 && complement4 >= 0 &&
                          complement2 == complement4;
  std::ostringstream detail;
  detail << "antenna/4-cycle block rank " << rank << " of " << big_n << ", complement " << complement2
         << " vs " << complement4;
  report.items.push_back({"iii", "cup-product pairing H^2 x H^4 nondegenerate", pairing_ok, detail.str()});

  if (h.hodge) {
    bool symmetric = true;
    for (const auto& [pq, v] : *h.hodge) {
      auto [p, qq] = pq;
      if ((p + qq) % 2 != 0) continue;
      auto get = [&](int a, int b) {
        auto it = h.hodge->find({a, b});
        return it == h.hodge->end() ? 0LL : it->second;
      };
      if (get(qq, p) != v || get(3 - p, 3 - qq) != v) symmetric = false;
    }
    report.items.push_back({"iv", "even-degree Hodge numbers symmetric and dual", symmetric,
                            symmetric ? "h^{p,q} = h^{q,p} = h^{3-p,3-q}" : "asymmetric Hodge numbers"});
  }
  return report;
}

std::string format_cohomology(const ConifoldData& data, const CohomologyReport& report,
                              const KahlerReport& kahler) {
  std::ostringstream os;
  os << "nodes n = " << data.node_count() << ", 4-cycle classes N = " << data.class_count() << "\n";
  os << std::left << std::setw(8) << "degree" << std::setw(10) << "M#" << std::setw(10) << "raw"
     << "refined\n";
  for (int q = 0; q <= kTopDegree; ++q) {
    os << std::setw(8) << ("H^" + std::to_string(q)) << std::setw(10) << data.base()[q]
       << std::setw(10) << report.raw[q] << report.refined[q] << "\n";
  }
  os << "euler characteristic: M# " << euler_characteristic(data.base()) << ", raw "
     << euler_characteristic(report.raw) << ", refined " << euler_characteristic(report.refined)
     << "\n";
  if (report.discrepancy != 0) {
    os << "raw/refined discrepancy: " << report.discrepancy
       << " antenna classes identified (n - N)\n";
  }
  os << "Kahler package on even degrees (H^3 excluded):\n";
  for (const auto& item : kahler.items) {
    os << "  (" << item.id << ") " << item.description << ": " << (item.passed ? "PASS" : "FAIL")
       << " [" << item.detail << "]\n";
  }
  for (const auto& w : kahler.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace conifold
