#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "conifold/polynomial.hpp"

namespace conifold {

// Work limits for Buchberger's algorithm. Counting reduced S-pairs rather
// than wall time keeps certificates reproducible.
struct GroebnerBudget {
  std::size_t max_pairs = 50000;
  std::size_t max_basis = 5000;
};

// Minimal generators of the leading-term ideal (grevlex) of the ideal
// generated by `generators`, or nullopt if the budget ran out.
std::optional<std::vector<Exponents>> leading_monomial_ideal(
    const std::vector<Polynomial>& generators, const GroebnerBudget& budget = {});

// The index-th largest prime p < 2^31 with p = 1 mod zeta_order.
std::uint64_t certificate_prime(int zeta_order, int index);

// Same for the image of the generators in F_p[x], with zeta sent to a
// primitive root of unity mod p. For every degree the Hilbert function of
// the image bounds that of the original ideal from above. nullopt if the
// budget ran out or p divides a coefficient denominator.
std::optional<std::vector<Exponents>> leading_monomial_ideal_mod_p(
    const std::vector<Polynomial>& generators, std::uint64_t prime, const GroebnerBudget& budget = {});

// Numerator N(t) of the Hilbert series N(t) / (1 - t)^nvars of
// k[x] / (monomials), lowest coefficient first.
std::vector<long long> hilbert_numerator(const std::vector<Exponents>& monomials,
                                         std::size_t variable_count);

struct HilbertSummary {
  // Krull dimension of k[x]/I; -1 for the unit ideal.
  int krull_dimension = -1;
  // Leading coefficient data: for a homogeneous ideal with Krull dimension
  // 1 this is the number of projective points counted with multiplicity.
  long long degree = 0;
};

HilbertSummary summarize_hilbert(const std::vector<Exponents>& monomials,
                                 std::size_t variable_count);

}  // namespace conifold
