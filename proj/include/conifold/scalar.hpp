#pragma once

#include <compare>
#include <complex>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace conifold {

using Rational = mpq_class;

// Q(zeta_k): rationals extended by a primitive k-th root of unity, stored as
// Q[x] / Phi_k(x). Order 1 is plain Q.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int order);
  static std::shared_ptr<const CyclotomicField> rationals();

  int order() const noexcept { return order_; }
  // Degree of Phi_k, i.e. Euler's phi(k).
  int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }
  // Monic Phi_k, lowest coefficient first.
  const std::vector<Rational>& modulus() const noexcept { return modulus_; }
  // True when a root of unity beyond +1 has been adjoined (k >= 2).
  bool has_root_of_unity() const noexcept { return order_ >= 2; }

  explicit CyclotomicField(int order);

 private:
  int order_;
  std::vector<Rational> modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

// Exact element of a cyclotomic field. Immutable in spirit: all arithmetic
// returns fresh values; coefficients are always reduced (size == degree).
class Scalar {
 public:
  Scalar();
  explicit Scalar(FieldPtr field);
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  Scalar(FieldPtr field, const Rational& value);

  static Scalar zeta_power(const FieldPtr& field, long exponent);
  // Reduces an arbitrary-length coefficient list modulo Phi_k.
  static Scalar from_coefficients(const FieldPtr& field, std::vector<Rational> coefficients);

  const FieldPtr& field() const noexcept { return field_; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Throws NonRationalCoefficient when the value has a zeta component.
  Rational to_rational() const;

  Scalar inverse() const;
  Scalar pow(long exponent) const;
  Scalar in_field(const FieldPtr& field) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  // Total order used only for deterministic sorting.
  friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

  std::complex<double> to_complex() const;
  // Emits text accepted by the polynomial parser (e.g. "1/2 - zeta^3").
  std::string to_string() const;

 private:
  void unify(Scalar& other);

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

std::string rational_to_string(const Rational& q);

}  // namespace conifold
