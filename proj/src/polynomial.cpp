#include "conifold/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "conifold/error.hpp"

namespace conifold {

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  int da = exponent_degree(a);
  int db = exponent_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

int exponent_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<std::string> quintic_variables(bool with_p) {
  std::vector<std::string> vars{"s0", "s1", "s2", "s3", "s4"};
  if (with_p) vars.emplace_back("p");
  return vars;
}

Polynomial::Polynomial(std::vector<std::string> variables, FieldPtr field)
    : variables_(std::move(variables)), field_(std::move(field)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Scalar& value) {
  Polynomial p(std::move(variables), value.field());
  p.add_term(Exponents(p.variable_count(), 0), value);
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, FieldPtr field,
                                Exponents exponents, const Scalar& coefficient) {
  Polynomial p(std::move(variables), std::move(field));
  p.add_term(exponents, coefficient);
  return p;
}

std::optional<std::size_t> Polynomial::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

void Polynomial::add_term(const Exponents& exponents, const Scalar& coefficient) {
  if (exponents.size() != variables_.size()) {
    throw Error(ErrorKind::InvalidArgument, "exponent vector length does not match variable count");
  }
  if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; })) {
    throw Error(ErrorKind::InvalidArgument, "negative exponent");
  }
  if (coefficient.is_zero()) return;
  Scalar c = coefficient.in_field(field_);
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Polynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Scalar(field_) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no degree");
  return exponent_degree(terms_.begin()->first);
}

bool Polynomial::has_rational_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_rational(); });
}

Polynomial Polynomial::derivative(std::size_t variable) const {
  if (variable >= variables_.size()) {
    throw Error(ErrorKind::InvalidArgument, "derivative variable out of range");
  }
  Polynomial out(variables_, field_);
  for (const auto& [e, c] : terms_) {
    if (e[variable] == 0) continue;
    Exponents d = e;
    --d[variable];
    out.add_term(d, c * Scalar(field_, e[variable]));
  }
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != variables_.size()) {
    throw Error(ErrorKind::InvalidArgument, "point has " + std::to_string(point.size()) +
                                                " coordinates, expected " +
                                                std::to_string(variables_.size()));
  }
  std::vector<std::vector<Scalar>> powers(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    powers[i].push_back(Scalar(field_, 1));
  }
  auto power = [&](std::size_t i, int e) -> const Scalar& {
    auto& table = powers[i];
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * point[i]);
    return table[e];
  };
  Scalar sum(field_);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] != 0) term *= power(i, e[i]);
    }
    sum += term;
  }
  return sum;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (variables_ != other.variables_) {
    throw Error(ErrorKind::InvalidArgument, "polynomials over different variable lists");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  if (field_->order() == 1 && rhs.field_->order() != 1) {
    *this = Polynomial(rhs.variables_, rhs.field_) + *this;
    return *this += rhs;
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  FieldPtr field = a.field_->order() == 1 ? b.field_ : a.field_;
  Polynomial out(a.variables_, field);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  FieldPtr field = p.field_->order() == 1 ? c.field() : p.field_;
  Polynomial out(p.variables_, field);
  for (const auto& [e, pc] : p.terms_) out.add_term(e, c * pc);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

std::string Polynomial::to_string() const {
  // Each cyclotomic coefficient is split into one printed term per zeta
  // power so that the output stays within the flat term grammar.
  std::vector<std::pair<bool, std::string>> pieces;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    auto coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      std::string factor;
      if (k == 1) factor = "zeta";
      if (k > 1) factor = "zeta^" + std::to_string(k);
      if (!mono.empty()) factor += factor.empty() ? mono : "*" + mono;
      Rational mag = abs(coeffs[k]);
      std::string body;
      if (factor.empty()) {
        body = rational_to_string(mag);
      } else if (mag == 1) {
        body = factor;
      } else {
        body = rational_to_string(mag) + "*" + factor;
      }
      pieces.emplace_back(coeffs[k] < 0, body);
    }
  }
  if (pieces.empty()) return "0";
  std::string out = (pieces[0].first ? "-" : "") + pieces[0].second;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    out += (pieces[i].first ? " - " : " + ") + pieces[i].second;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

bool is_homogeneous(const Polynomial& g, int degree) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "homogeneity of the zero polynomial");
  return std::all_of(g.terms().begin(), g.terms().end(),
                     [degree](const auto& t) { return exponent_degree(t.first) == degree; });
}

std::vector<Polynomial> gradient(const Polynomial& g) {
  std::vector<Polynomial> out;
  out.reserve(g.variable_count());
  for (std::size_t i = 0; i < g.variable_count(); ++i) out.push_back(g.derivative(i));
  return out;
}

std::vector<std::vector<Polynomial>> hessian(const Polynomial& g) {
  std::vector<std::vector<Polynomial>> out;
  auto grad = gradient(g);
  for (std::size_t i = 0; i < grad.size(); ++i) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < grad.size(); ++j) {
      row.push_back(j < i ? out[j][i] : grad[i].derivative(j));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Scalar evaluate(const Polynomial& g, std::span<const Scalar> point) { return g.evaluate(point); }

FloatShadow::FloatShadow(const Polynomial& g) {
  for (const auto& [e, c] : g.terms()) terms_.emplace_back(e, c.to_complex());
}

std::complex<double> FloatShadow::operator()(std::span<const std::complex<double>> point) const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Sheet sheet_of(const Rational& level) {
  if (level == 0) {
    throw Error(ErrorKind::QuantumRegion, "r = 0 lies in the quantum-corrected region");
  }
  return level > 0 ? Sheet::Positive : Sheet::Negative;
}

std::string_view to_string(Sheet sheet) {
  return sheet == Sheet::Positive ? "positive" : "negative";
}

int MomentMap::charge(const std::vector<std::string>& variables, const Exponents& exponents) {
  int q = 0;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    q += exponents[i] * (variables[i] == "p" ? kPWeight : kSWeight);
  }
  return q;
}

std::optional<int> MomentMap::charge(const Polynomial& g) {
  std::optional<int> q;
  for (const auto& [e, c] : g.terms()) {
    int qe = charge(g.variables(), e);
    if (q && *q != qe) return std::nullopt;
    q = qe;
  }
  return q;
}

double MomentMap::d_term(std::span<const std::complex<double>> s, std::complex<double> p) const {
  double norm = 0.0;
  for (auto v : s) norm += std::norm(v);
  return norm - 5.0 * std::norm(p) - level.get_d();
}

Polynomial superpotential(const Polynomial& g) {
  if (g.variables() != quintic_variables()) {
    throw Error(ErrorKind::InvalidArgument, "superpotential expects G in s0..s4");
  }
  Polynomial w(quintic_variables(true), g.field());
  for (const auto& [e, c] : g.terms()) {
    Exponents lifted = e;
    lifted.push_back(1);
    w.add_term(lifted, c);
  }
  return w;
}

}  // namespace conifold
