#include <cctype>

#include "conifold/error.hpp"
#include "conifold/polynomial.hpp"

namespace conifold {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : text_(text), options_(options), field_(CyclotomicField::get(options.zeta_order)) {}

  Polynomial parse() {
    Polynomial out(options_.variables, field_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (int len = sign_length(); len > 0) {
      negative = is_minus();
      pos_ += len;
    }
    while (true) {
      auto [e, c] = parse_term();
      out.add_term(e, negative ? -c : c);
      skip_space();
      if (at_end()) break;
      int len = sign_length();
      if (len == 0) fail("expected '+' or '-'");
      negative = is_minus();
      pos_ += len;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // U+2212 is accepted alongside ASCII '-'.
  int sign_length() const {
    if (at_end()) return 0;
    if (text_[pos_] == '+' || text_[pos_] == '-') return 1;
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") return 3;
    return 0;
  }
  bool is_minus() const { return text_[pos_] != '+'; }

  [[noreturn]] void fail(const std::string& message, ErrorKind kind = ErrorKind::Syntax) const {
    throw SyntaxError(kind, message, pos_);
  }

  std::pair<Exponents, Scalar> parse_term() {
    Exponents e(options_.variables.size(), 0);
    Scalar c(field_, 1);
    parse_factor(e, c);
    while (true) {
      skip_space();
      if (at_end() || text_[pos_] != '*') break;
      ++pos_;
      parse_factor(e, c);
    }
    return {e, c};
  }

  std::string read_digits() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  int read_exponent() {
    skip_space();
    if (at_end() || text_[pos_] != '^') return 1;
    ++pos_;
    std::string digits = read_digits();
    if (digits.size() > 6) fail("exponent too large");
    return std::stoi(digits);
  }

  void parse_factor(Exponents& e, Scalar& c) {
    skip_space();
    if (at_end()) fail("expected factor");
    char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Rational value{mpz_class(read_digits())};
      skip_space();
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        std::size_t at = pos_;
        mpz_class den(read_digits());
        if (den == 0) throw SyntaxError(ErrorKind::Syntax, "zero denominator", at);
        value /= den;
      }
      c *= Scalar(field_, value);
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch)) && ch != '_') fail("unexpected character");
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                         text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (name == "zeta") {
      if (!field_->has_root_of_unity()) {
        throw SyntaxError(ErrorKind::NonRationalCoefficient,
                          "'zeta' used without a declared root-of-unity extension", start);
      }
      c *= Scalar::zeta_power(field_, read_exponent());
      return;
    }
    for (std::size_t i = 0; i < options_.variables.size(); ++i) {
      if (options_.variables[i] == name) {
        e[i] += read_exponent();
        return;
      }
    }
    throw SyntaxError(ErrorKind::UnknownVariable, "unknown variable '" + name + "'", start);
  }

  std::string_view text_;
  const ParseOptions& options_;
  FieldPtr field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).parse();
}

Scalar parse_scalar(std::string_view text, int zeta_order) {
  ParseOptions options;
  options.variables = {};
  options.zeta_order = zeta_order;
  Polynomial p = parse_polynomial(text, options);
  if (p.is_zero()) return Scalar(p.field());
  return p.terms().begin()->second;
}

}  // namespace conifold
