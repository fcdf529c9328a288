#include "conifold/singular_locus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <thread>

#include "conifold/error.hpp"
#include "conifold/linear_algebra.hpp"

namespace conifold {
namespace {

using Point = std::vector<Scalar>;

struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

void require_homogeneous(const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "singular locus of the zero polynomial");
  if (!is_homogeneous(g, g.total_degree())) {
    throw Error(ErrorKind::InvalidArgument, "polynomial is not homogeneous");
  }
}

bool gradient_vanishes(const std::vector<Polynomial>& grad, const Point& x) {
  return std::all_of(grad.begin(), grad.end(),
                     [&](const Polynomial& d) { return d.evaluate(x).is_zero(); });
}

// Root-of-unity ansatz: every normalized point whose coordinates lie in
// {0, 1, zeta, ..., zeta^(k-1)}. Coordinates are encoded as exponents with
// -1 standing for 0, so monomials evaluate by exponent arithmetic mod k.
std::vector<Point> ansatz_hits(const Polynomial& g, unsigned jobs) {
  const FieldPtr& field = g.field();
  const int k = field->order();
  const std::size_t nvars = g.variable_count();
  std::vector<Scalar> zeta;
  for (int r = 0; r < k; ++r) zeta.push_back(Scalar::zeta_power(field, r));

  std::vector<std::vector<std::pair<Exponents, Scalar>>> grad_terms;
  for (const auto& d : gradient(g)) {
    grad_terms.emplace_back(d.terms().begin(), d.terms().end());
  }

  std::vector<std::vector<int>> candidates;
  for (std::size_t lead = 0; lead < nvars; ++lead) {
    std::size_t free = nvars - lead - 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= static_cast<std::size_t>(k + 1);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<int> a(nvars, -1);
      a[lead] = 0;
      std::size_t c = code;
      for (std::size_t i = lead + 1; i < nvars; ++i) {
        a[i] = static_cast<int>(c % static_cast<std::size_t>(k + 1)) - 1;
        c /= static_cast<std::size_t>(k + 1);
      }
      candidates.push_back(std::move(a));
    }
  }

  auto singular = [&](const std::vector<int>& a) {
    for (const auto& terms : grad_terms) {
      Scalar acc(field);
      for (const auto& [e, coeff] : terms) {
        long m = 0;
        bool vanishes = false;
        for (std::size_t i = 0; i < nvars; ++i) {
          if (e[i] == 0) continue;
          if (a[i] < 0) {
            vanishes = true;
            break;
          }
          m += static_cast<long>(e[i]) * a[i];
        }
        if (!vanishes) acc += coeff * zeta[static_cast<std::size_t>(m % k)];
      }
      if (!acc.is_zero()) return false;
    }
    return true;
  };

  jobs = std::max(1U, jobs);
  std::vector<std::vector<std::size_t>> found(jobs);
  auto worker = [&](unsigned id) {
    for (std::size_t i = id; i < candidates.size(); i += jobs) {
      if (singular(candidates[i])) found[id].push_back(i);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }

  std::vector<Point> out;
  for (const auto& hits : found) {
    for (std::size_t i : hits) {
      Point x;
      for (int ai : candidates[i]) x.push_back(ai < 0 ? Scalar(field) : zeta[ai]);
      out.push_back(std::move(x));
    }
  }
  return out;
}

// Best rational approximation with bounded denominator, if close enough.
std::optional<Rational> snap_rational(double x, long max_den, double tol) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(r);
    if (std::abs(a) > 1e12) break;
    long ai = static_cast<long>(a);
    long p2 = ai * p1 + p0;
    long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) < tol) {
      Rational q(p1, q1);
      q.canonicalize();
      return q;
    }
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

// Tries to recognise a numeric coordinate as q * zeta^a.
std::optional<Scalar> snap_coordinate(std::complex<double> z, const FieldPtr& field) {
  constexpr double kZero = 1e-8;
  if (std::abs(z) < kZero) return Scalar(field);
  const int k = field->order();
  for (int a = 0; a < k; ++a) {
    std::complex<double> w = z * std::polar(1.0, -2.0 * std::numbers::pi * a / k);
    if (std::abs(w.imag()) > kZero) continue;
    if (auto q = snap_rational(w.real(), 1000, 1e-9)) {
      Scalar out = Scalar::zeta_power(field, a);
      out *= Scalar(field, *q);
      return out;
    }
  }
  return std::nullopt;
}

std::vector<std::complex<double>> normalize_numeric(std::vector<std::complex<double>> x) {
  for (auto v : x) {
    if (std::abs(v) > 1e-8) {
      std::complex<double> inv = 1.0 / v;
      for (auto& y : x) y *= inv;
      break;
    }
  }
  for (auto& y : x) {
    if (std::abs(y) < 1e-8) y = 0.0;
  }
  return x;
}

}  // namespace

std::string_view to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Node: return "Node";
    case SingularityClass::NonNode: return "NonNode";
    case SingularityClass::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

std::string_view to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::AnsatzRoots: return "ansatz";
    case CandidateKind::UserList: return "user";
    case CandidateKind::FloatHomotopy: return "float";
  }
  return "ansatz";
}

CandidateKind candidate_kind_from_string(std::string_view name) {
  if (name == "ansatz") return CandidateKind::AnsatzRoots;
  if (name == "user") return CandidateKind::UserList;
  if (name == "float") return CandidateKind::FloatHomotopy;
  throw Error(ErrorKind::InvalidArgument, "unknown candidate source '" + std::string(name) + "'");
}

std::size_t TransversalityReport::node_count() const {
  return static_cast<std::size_t>(std::count_if(rays.begin(), rays.end(), [](const SingularRay& r) {
    return r.classification == SingularityClass::Node;
  }));
}

std::vector<Scalar> normalize_ray(std::vector<Scalar> point) {
  auto lead = std::find_if(point.begin(), point.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (lead == point.end()) throw Error(ErrorKind::OriginRay, "the origin is not a ray");
  Scalar inv = lead->inverse();
  for (auto& x : point) x *= inv;
  return point;
}

SingularityInfo classify_singularity(const Polynomial& g, const std::vector<Scalar>& ray) {
  if (ray.size() != g.variable_count()) {
    throw Error(ErrorKind::InvalidArgument, "ray dimension does not match variable count");
  }
  Point x = normalize_ray(ray);
  for (auto& v : x) v = v.in_field(g.field());
  if (!gradient_vanishes(gradient(g), x)) {
    throw Error(ErrorKind::InvalidArgument, "dG does not vanish at the given ray");
  }
  const std::size_t unit = static_cast<std::size_t>(
      std::find_if(x.begin(), x.end(), [](const Scalar& v) { return !v.is_zero(); }) - x.begin());
  auto h = hessian(g);
  Matrix<Scalar> affine;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i == unit) continue;
    std::vector<Scalar> row;
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (j != unit) row.push_back(h[i][j].evaluate(x));
    }
    affine.push_back(std::move(row));
  }
  const int full = static_cast<int>(affine.size());
  const int rank = exact_rank(std::move(affine));
  SingularityInfo info;
  info.corank = full - rank;
  info.classification = rank == full ? SingularityClass::Node : SingularityClass::NonNode;
  return info;
}

std::vector<SingularRay> find_singular_rays(const Polynomial& g, const CandidateSource& source) {
  require_homogeneous(g);
  const auto grad = gradient(g);
  std::map<Point, bool, PointLess> exact;
  std::vector<std::vector<std::complex<double>>> numeric;

  switch (source.kind) {
    case CandidateKind::AnsatzRoots:
      for (auto& x : ansatz_hits(g, source.jobs)) exact.emplace(std::move(x), true);
      break;
    case CandidateKind::UserList:
      for (const auto& p : source.user_points) {
        if (p.size() != g.variable_count()) {
          throw Error(ErrorKind::InvalidArgument, "candidate ray has wrong dimension");
        }
        Point x;
        for (const auto& v : p) x.push_back(v.in_field(g.field()));
        x = normalize_ray(std::move(x));
        if (gradient_vanishes(grad, x)) exact.emplace(std::move(x), true);
      }
      break;
    case CandidateKind::FloatHomotopy:
      for (auto& z : numeric_singular_points(g, source.seed)) {
        z = normalize_numeric(std::move(z));
        Point x;
        for (auto v : z) {
          auto snapped = snap_coordinate(v, g.field());
          if (!snapped) break;
          x.push_back(*snapped);
        }
        if (x.size() == z.size() && gradient_vanishes(grad, x)) {
          exact.emplace(normalize_ray(std::move(x)), true);
        } else {
          numeric.push_back(std::move(z));
        }
      }
      break;
  }

  std::vector<SingularRay> out;
  for (const auto& [x, unused] : exact) {
    SingularRay ray;
    ray.representative = x;
    SingularityInfo info = classify_singularity(g, x);
    ray.classification = info.classification;
    ray.corank = info.corank;
    out.push_back(std::move(ray));
  }

  // Numeric leftovers: deduplicate, drop any that match an exact ray.
  auto lex = [](const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
      if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
  };
  std::sort(numeric.begin(), numeric.end(), lex);
  std::vector<std::vector<std::complex<double>>> kept;
  auto close = [](const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i] - b[i]) > 1e-6) return false;
    }
    return true;
  };
  for (auto& z : numeric) {
    bool dup = std::any_of(kept.begin(), kept.end(), [&](const auto& k) { return close(k, z); });
    for (const auto& [x, unused] : exact) {
      std::vector<std::complex<double>> xc;
      for (const auto& v : x) xc.push_back(v.to_complex());
      dup = dup || close(xc, z);
    }
    if (!dup) kept.push_back(std::move(z));
  }
  for (auto& z : kept) {
    SingularRay ray;
    ray.approximation = std::move(z);
    out.push_back(std::move(ray));
  }
  return out;
}

TransversalityReport verify_transversal(const Polynomial& g, const CandidateSource& source,
                                        const GroebnerBudget& budget) {
  if (g.variables() != quintic_variables()) {
    throw Error(ErrorKind::InvalidArgument, "G must be a polynomial in s0..s4");
  }
  if (g.is_zero() || !is_homogeneous(g, 5)) {
    throw Error(ErrorKind::InvalidArgument, "G must be homogeneous of degree 5");
  }
  TransversalityReport report;
  report.source = source.kind;
  report.zeta_order = g.field()->order();
  report.rays = find_singular_rays(g, source);

  std::vector<Polynomial> jacobian;
  for (auto& d : gradient(g)) {
    if (!d.is_zero()) jacobian.push_back(std::move(d));
  }
  // Modular images only bound the Jacobian scheme from above, which is
  // enough to prove smoothness or completeness; a positive-dimensional
  // singular locus is only reported after the exact computation over Q.
  for (int attempt = 0; attempt < 2; ++attempt) {
    const std::uint64_t p = certificate_prime(report.zeta_order, attempt);
    auto lead = leading_monomial_ideal_mod_p(jacobian, p, budget);
    if (!lead) continue;
    HilbertSummary h = summarize_hilbert(*lead, g.variable_count());
    if (h.krull_dimension >= 2) continue;
    JacobianCertificate c{h.krull_dimension, h.degree, p};
    const auto& best = report.certificate;
    if (!best || std::pair(c.krull_dimension, c.degree) < std::pair(best->krull_dimension, best->degree)) {
      report.certificate = c;
    }
  }
  if (!report.certificate) {
    if (auto lead = leading_monomial_ideal(jacobian, budget)) {
      HilbertSummary h = summarize_hilbert(*lead, g.variable_count());
      report.certificate = JacobianCertificate{h.krull_dimension, h.degree, 0};
    }
  }

  const bool all_nodes = std::all_of(report.rays.begin(), report.rays.end(), [](const SingularRay& r) {
    return r.classification == SingularityClass::Node;
  });
  const bool any_exact = std::any_of(report.rays.begin(), report.rays.end(),
                                     [](const SingularRay& r) { return r.is_exact(); });

  if (report.certificate) {
    const auto& cert = *report.certificate;
    if (cert.krull_dimension >= 2) {
      throw Error(ErrorKind::NonIsolated,
                  "singular locus of G has projective dimension " +
                      std::to_string(cert.krull_dimension - 1));
    }
    report.isolated = true;
    if (cert.krull_dimension <= 0) {
      report.complete = report.rays.empty();
    } else {
      // Each node contributes Tjurina number 1 to the degree of the
      // Jacobian scheme, and the certified degree is an upper bound for
      // it, so equality means no ray was missed.
      report.complete = all_nodes &&
                        static_cast<long long>(report.rays.size()) == cert.degree;
    }
  } else {
    report.isolated = all_nodes;
    report.complete = false;
  }

  if (any_exact) {
    report.transversal = false;
  } else if (report.complete) {
    report.transversal = true;
  }
  return report;
}

}  // namespace conifold
