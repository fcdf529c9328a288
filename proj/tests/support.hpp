#pragma once

#include <random>
#include <vector>

#include "conifold/cohomology.hpp"
#include "conifold/polynomial.hpp"

namespace testing_support {

using conifold::Rational;
using conifold::Scalar;

inline Rational random_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int range = 9) {
  for (;;) {
    Rational q = random_rational(rng, range);
    if (q != 0) return q;
  }
}

inline Scalar random_scalar(std::mt19937_64& rng, const conifold::FieldPtr& field, int range = 9) {
  std::vector<Rational> c;
  for (int i = 0; i < field->degree(); ++i) c.push_back(random_rational(rng, range));
  return Scalar::from_coefficients(field, c);
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng, const conifold::FieldPtr& field) {
  for (;;) {
    Scalar s = random_scalar(rng, field);
    if (!s.is_zero()) return s;
  }
}

// Random homogeneous polynomial of degree d in s0..s4.
inline conifold::Polynomial random_homogeneous(std::mt19937_64& rng, int degree, int terms,
                                               const conifold::FieldPtr& field) {
  conifold::Polynomial g(conifold::quintic_variables(), field);
  std::uniform_int_distribution<int> var(0, 4);
  for (int t = 0; t < terms; ++t) {
    conifold::Exponents e(5, 0);
    for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(var(rng))];
    g.add_term(e, random_scalar(rng, field));
  }
  return g;
}

// Random valid conifold data with dim H^4 = dim H^2 + N when `consistent`.
struct RandomConifold {
  std::vector<std::vector<int>> incidence;
  std::vector<long long> base;
};

inline RandomConifold random_conifold(std::mt19937_64& rng, bool consistent) {
  std::uniform_int_distribution<int> node_count(0, 50);
  const int n = node_count(rng);
  const int big_n = n == 0 ? 0 : std::uniform_int_distribution<int>(1, n)(rng);
  RandomConifold out;
  // Every class gets one guaranteed node, the rest land anywhere.
  std::vector<int> owner(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) owner[static_cast<std::size_t>(j)] = j < big_n ? j : std::uniform_int_distribution<int>(0, big_n - 1)(rng);
  std::shuffle(owner.begin(), owner.end(), rng);
  for (int j = 0; j < n; ++j) {
    std::vector<int> row(static_cast<std::size_t>(big_n), 0);
    row[static_cast<std::size_t>(owner[static_cast<std::size_t>(j)])] = 1;
    out.incidence.push_back(row);
  }
  std::uniform_int_distribution<int> small(0, 6);
  std::uniform_int_distribution<int> b3(0, 300);
  const long long h2 = 1 + small(rng);
  const long long h4 = consistent ? h2 + big_n : 1 + small(rng);
  out.base = {1, 0, h2, b3(rng), h4, 0, 1};
  return out;
}

}  // namespace testing_support
