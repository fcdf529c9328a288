#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conifold/scalar.hpp"

namespace conifold {

using Exponents = std::vector<int>;

// Graded lexicographic order, highest monomial first.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

int exponent_degree(const Exponents& e);

// s0..s4, optionally followed by p.
std::vector<std::string> quintic_variables(bool with_p = false);

// Sparse multivariate polynomial over a cyclotomic field. No stored
// coefficient is zero; every exponent vector has one entry per variable.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexDescending>;

  explicit Polynomial(std::vector<std::string> variables,
                      FieldPtr field = CyclotomicField::rationals());

  static Polynomial constant(std::vector<std::string> variables, const Scalar& value);
  static Polynomial monomial(std::vector<std::string> variables, FieldPtr field,
                             Exponents exponents, const Scalar& coefficient);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t variable_count() const noexcept { return variables_.size(); }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  const FieldPtr& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Accumulates into an existing term and drops it if it cancels.
  void add_term(const Exponents& exponents, const Scalar& coefficient);

  Scalar coefficient(const Exponents& exponents) const;
  // Throws ZeroPolynomial: the zero polynomial has no degree.
  int total_degree() const;
  bool has_rational_coefficients() const;

  Polynomial derivative(std::size_t variable) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Canonical text; reparses to an equal polynomial.
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::vector<std::string> variables_;
  FieldPtr field_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

struct ParseOptions {
  std::vector<std::string> variables = quintic_variables();
  // Order of the root of unity denoted `zeta`; 1 means no extension.
  int zeta_order = 1;
};

// Grammar: signed terms; a term is `*`-separated factors, each either a
// rational literal `a` / `a/b` or an identifier with optional `^e`.
Polynomial parse_polynomial(std::string_view text, const ParseOptions& options = {});

// Parses a coefficient-domain constant such as "zeta^2" or "-3/2".
Scalar parse_scalar(std::string_view text, int zeta_order);

bool is_homogeneous(const Polynomial& g, int degree);
std::vector<Polynomial> gradient(const Polynomial& g);
std::vector<std::vector<Polynomial>> hessian(const Polynomial& g);
Scalar evaluate(const Polynomial& g, std::span<const Scalar> point);

// Double-precision shadow of an exact polynomial, for numeric cross-checks.
class FloatShadow {
 public:
  explicit FloatShadow(const Polynomial& g);
  std::complex<double> operator()(std::span<const std::complex<double>> point) const;

 private:
  std::vector<std::pair<Exponents, std::complex<double>>> terms_;
};

enum class Sheet { Positive, Negative };

// Sign of the moment-map level; r = 0 is the quantum region and is rejected.
Sheet sheet_of(const Rational& level);
std::string_view to_string(Sheet sheet);

// U(1) charges (+1 on each s, -5 on p) and the level r of D_r.
struct MomentMap {
  static constexpr int kSWeight = 1;
  static constexpr int kPWeight = -5;
  Rational level;

  Sheet sheet() const { return sheet_of(level); }
  // Weighted degree of a monomial in variables named s* / p.
  static int charge(const std::vector<std::string>& variables, const Exponents& exponents);
  // Common charge of all terms, or nullopt if the polynomial mixes charges.
  static std::optional<int> charge(const Polynomial& g);
  // D_r(s, p) = |s|^2 - 5|p|^2 - r.
  double d_term(std::span<const std::complex<double>> s, std::complex<double> p) const;
};

// W = p * G, in variables s0..s4, p. G must be in s0..s4.
Polynomial superpotential(const Polynomial& g);

}  // namespace conifold
