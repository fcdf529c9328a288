#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "conifold/error.hpp"
#include "conifold/singular_locus.hpp"

namespace conifold {
namespace {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Critical-point system of G restricted to the chart s_unit = 1:
// F_i = dG/ds_{v_i}, i over the remaining coordinates.
class ChartSystem {
 public:
  ChartSystem(const Polynomial& g, std::size_t unit) : unit_(unit), n_(g.variable_count()) {
    auto h = hessian(g);
    auto grad = gradient(g);
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == unit_) continue;
      others_.push_back(i);
    }
    for (std::size_t i : others_) {
      f_.emplace_back(grad[i]);
      std::vector<FloatShadow> row;
      for (std::size_t j : others_) row.emplace_back(h[i][j]);
      df_.push_back(std::move(row));
    }
    extra_ = std::make_unique<FloatShadow>(grad[unit_]);
  }

  std::size_t size() const { return others_.size(); }

  std::vector<Complex> lift(const Vec& x) const {
    std::vector<Complex> s(n_);
    s[unit_] = 1.0;
    for (std::size_t k = 0; k < others_.size(); ++k) s[others_[k]] = x[static_cast<Eigen::Index>(k)];
    return s;
  }

  Vec value(const Vec& x) const {
    auto s = lift(x);
    Vec out(static_cast<Eigen::Index>(size()));
    for (std::size_t i = 0; i < size(); ++i) out[static_cast<Eigen::Index>(i)] = f_[i](s);
    return out;
  }

  Mat jacobian(const Vec& x) const {
    auto s = lift(x);
    Mat out(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = df_[i][j](s);
      }
    }
    return out;
  }

  Complex unit_derivative(const Vec& x) const { return (*extra_)(lift(x)); }

 private:
  std::size_t unit_;
  std::size_t n_;
  std::vector<std::size_t> others_;
  std::vector<FloatShadow> f_;
  std::vector<std::vector<FloatShadow>> df_;
  std::unique_ptr<FloatShadow> extra_;
};

// H(x, t) = (1 - t) * gamma * (x_i^d - 1) + t * F(x)
class Homotopy {
 public:
  Homotopy(const ChartSystem& target, int degree, Complex gamma)
      : target_(target), degree_(degree), gamma_(gamma) {}

  Vec start_value(const Vec& x) const {
    Vec out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = std::pow(x[i], degree_) - 1.0;
    return out;
  }

  Vec value(const Vec& x, double t) const {
    return (1.0 - t) * gamma_ * start_value(x) + t * target_.value(x);
  }

  Mat dx(const Vec& x, double t) const {
    Mat start = Mat::Zero(x.size(), x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      start(i, i) = static_cast<double>(degree_) * std::pow(x[i], degree_ - 1);
    }
    return (1.0 - t) * gamma_ * start + t * target_.jacobian(x);
  }

  Vec dt(const Vec& x) const { return target_.value(x) - gamma_ * start_value(x); }

 private:
  const ChartSystem& target_;
  int degree_;
  Complex gamma_;
};

std::optional<Vec> newton(const Homotopy& h, Vec x, double t, int iterations, double tol) {
  for (int k = 0; k < iterations; ++k) {
    Vec step = h.dx(x, t).partialPivLu().solve(h.value(x, t));
    if (!step.allFinite()) return std::nullopt;
    x -= step;
    if (step.norm() <= tol * (1.0 + x.norm())) return x;
  }
  return std::nullopt;
}

std::optional<Vec> track(const Homotopy& h, Vec x) {
  double t = 0.0;
  double dt = 0.01;
  while (t < 1.0) {
    double step = std::min(dt, 1.0 - t);
    Vec velocity = -h.dx(x, t).partialPivLu().solve(h.dt(x));
    Vec predicted = x + step * velocity;
    auto corrected = newton(h, predicted, t + step, 4, 1e-10);
    if (corrected && (*corrected - predicted).norm() < 0.1 * (1.0 + x.norm())) {
      x = *corrected;
      t += step;
      dt = std::min(0.05, dt * 1.5);
      if (x.norm() > 1e8) return std::nullopt;
    } else {
      dt *= 0.5;
      if (dt < 1e-10) return std::nullopt;
    }
  }
  return x;
}

}  // namespace

std::vector<std::vector<std::complex<double>>> numeric_singular_points(const Polynomial& g,
                                                                       std::uint64_t seed) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "no critical points of zero polynomial");
  const int d = g.total_degree() - 1;
  std::vector<std::vector<Complex>> out;
  if (d < 1) return out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  for (std::size_t unit = 0; unit < g.variable_count(); ++unit) {
    ChartSystem system(g, unit);
    const auto m = static_cast<Eigen::Index>(system.size());
    Homotopy h(system, d, std::polar(1.0, angle(rng)));
    std::size_t paths = 1;
    for (Eigen::Index i = 0; i < m; ++i) paths *= static_cast<std::size_t>(d);
    for (std::size_t code = 0; code < paths; ++code) {
      Vec start(m);
      std::size_t c = code;
      for (Eigen::Index i = 0; i < m; ++i) {
        start[i] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(c % d) / d);
        c /= static_cast<std::size_t>(d);
      }
      auto end = track(h, start);
      if (!end) continue;
      // Polish on the target system; accept regular critical points only.
      Homotopy target(system, d, 0.0);
      auto polished = newton(target, *end, 1.0, 20, 1e-14);
      if (!polished) continue;
      if (system.value(*polished).norm() > 1e-10 * (1.0 + polished->norm())) continue;
      // A critical point of the affine G is singular on the cone only if G,
      // equivalently dG/ds_unit, vanishes too.
      if (std::abs(system.unit_derivative(*polished)) > 1e-8 * (1.0 + polished->squaredNorm())) {
        continue;
      }
      out.push_back(system.lift(*polished));
    }
  }
  return out;
}

}  // namespace conifold
