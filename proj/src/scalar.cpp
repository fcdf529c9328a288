#include "conifold/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <utility>

#include "conifold/error.hpp"

namespace conifold {
namespace {

using UPoly = std::vector<Rational>;  // lowest coefficient first

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly multiply(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Long division; `b` must be nonzero after trimming.
std::pair<UPoly, UPoly> divide(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) return {UPoly{}, a};
  UPoly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) continue;
    Rational c = a[i] / lead;
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

UPoly cyclotomic_polynomial(int k) {
  UPoly p(k + 1);
  p[0] = -1;
  p[k] = 1;
  for (int d = 1; d < k; ++d) {
    if (k % d == 0) p = divide(p, cyclotomic_polynomial(d)).first;
  }
  return p;
}

void reduce_mod(UPoly& v, const UPoly& modulus) {
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    for (std::size_t j = 0; j <= deg; ++j) v[i - deg + j] -= c * modulus[j];
  }
  v.resize(deg);
}

}  // namespace

CyclotomicField::CyclotomicField(int order) : order_(order) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "root-of-unity order must be >= 1");
  modulus_ = cyclotomic_polynomial(order);
}

FieldPtr CyclotomicField::get(int order) {
  static std::mutex mutex;
  static std::map<int, FieldPtr> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const CyclotomicField>(order);
  cache.emplace(order, field);
  return field;
}

FieldPtr CyclotomicField::rationals() {
  static const FieldPtr q = get(1);
  return q;
}

Scalar::Scalar() : Scalar(CyclotomicField::rationals()) {}

Scalar::Scalar(FieldPtr field) : field_(std::move(field)), coeffs_(field_->degree()) {}

Scalar::Scalar(long value) : Scalar(Rational(value)) {}

Scalar::Scalar(const Rational& value) : Scalar(CyclotomicField::rationals(), value) {}

Scalar::Scalar(FieldPtr field, const Rational& value) : Scalar(std::move(field)) {
  coeffs_[0] = value;
}

Scalar Scalar::zeta_power(const FieldPtr& field, long exponent) {
  long k = field->order();
  long m = ((exponent % k) + k) % k;
  UPoly v(m + 1);
  v[m] = 1;
  return from_coefficients(field, std::move(v));
}

Scalar Scalar::from_coefficients(const FieldPtr& field, std::vector<Rational> coefficients) {
  Scalar out(field);
  if (coefficients.size() < static_cast<std::size_t>(field->degree())) {
    coefficients.resize(field->degree());
  }
  reduce_mod(coefficients, field->modulus());
  out.coeffs_ = std::move(coefficients);
  return out;
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Scalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) {
    throw Error(ErrorKind::NonRationalCoefficient, "value " + to_string() + " is not rational");
  }
  return coeffs_[0];
}

Scalar Scalar::in_field(const FieldPtr& field) const {
  if (field == field_) return *this;
  if (field_->order() == 1) return Scalar(field, coeffs_[0]);
  if (field->order() == 1 && is_rational()) return Scalar(field, coeffs_[0]);
  throw Error(ErrorKind::FieldMismatch, "cannot move Q(zeta_" + std::to_string(field_->order()) +
                                            ") value into Q(zeta_" +
                                            std::to_string(field->order()) + ")");
}

void Scalar::unify(Scalar& other) {
  if (field_ == other.field_) return;
  if (field_->order() == 1) {
    *this = in_field(other.field_);
  } else if (other.field_->order() == 1) {
    other = other.in_field(field_);
  } else {
    throw Error(ErrorKind::FieldMismatch,
                "mixed roots of unity of order " + std::to_string(field_->order()) + " and " +
                    std::to_string(other.field_->order()));
  }
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  Scalar r(rhs);
  unify(r);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  Scalar r(rhs);
  unify(r);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  Scalar r(rhs);
  unify(r);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= r.coeffs_[0];
    return *this;
  }
  UPoly product = multiply(coeffs_, r.coeffs_);
  reduce_mod(product, field_->modulus());
  coeffs_ = std::move(product);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (coeffs_.size() == 1) return Scalar(field_, 1 / coeffs_[0]);
  // Extended Euclid in Q[x]: s*a + t*Phi = g, with g a nonzero constant
  // because Phi is irreducible.
  UPoly r0 = field_->modulus();
  UPoly r1 = coeffs_;
  trim(r1);
  UPoly s0;
  UPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divide(r0, r1);
    UPoly qs = multiply(q, s1);
    UPoly next(std::max(s0.size(), qs.size()));
    for (std::size_t i = 0; i < s0.size(); ++i) next[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) next[i] -= qs[i];
    trim(next);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  Rational g = r0.at(0);
  for (auto& c : s0) c /= g;
  return from_coefficients(field_, std::move(s0));
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
  Scalar result(field_, 1);
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.field_ == rhs.field_) return lhs.coeffs_ == rhs.coeffs_;
  return (lhs - rhs).is_zero();
}

std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  if (auto c = lhs.field_->order() <=> rhs.field_->order(); c != 0) return c;
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    int c = cmp(lhs.coeffs_[i], rhs.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::complex<double> Scalar::to_complex() const {
  std::complex<double> out{0.0, 0.0};
  const double k = field_->order();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    out += coeffs_[i].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / k);
  }
  return out;
}

std::string Scalar::to_string() const {
  const int nonzero = static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                     [](const Rational& c) { return c != 0; }));
  if (nonzero > 1 && field_->order() > 1) {
    // Powers of zeta beyond the power basis print as q*zeta^m.
    for (int m = field_->degree(); m < field_->order(); ++m) {
      Scalar r = *this * zeta_power(field_, -m);
      if (!r.is_rational()) continue;
      Rational q = r.to_rational();
      std::string base = "zeta^" + std::to_string(m);
      if (q == 1) return base;
      if (q == -1) return "-" + base;
      return rational_to_string(q) + "*" + base;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    Rational mag = abs(c);
    if (i == 0) {
      term = rational_to_string(mag);
    } else {
      std::string base = i == 1 ? "zeta" : "zeta^" + std::to_string(i);
      term = mag == 1 ? base : rational_to_string(mag) + "*" + base;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) { return os << value.to_string(); }

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace conifold
