#include "conifold/groebner.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <tuple>

#include "conifold/error.hpp"
#include "conifold/linear_algebra.hpp"

namespace conifold {
namespace {

constexpr std::size_t kMaxVars = 8;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  int degree = 0;

  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

// Degree reverse lexicographic: true when a > b.
bool grevlex_greater(const Mono& a, const Mono& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  }
  return false;
}

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

Mono lcm(const Mono& a, const Mono& b) {
  Mono out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    out.e[i] = std::max(a.e[i], b.e[i]);
    out.degree += out.e[i];
  }
  return out;
}

Mono quotient(const Mono& a, const Mono& b) {
  Mono out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    out.e[i] = a.e[i] - b.e[i];
    out.degree += out.e[i];
  }
  return out;
}

Mono product(const Mono& a, const Mono& b) {
  Mono out;
  for (std::size_t i = 0; i < kMaxVars; ++i) out.e[i] = a.e[i] + b.e[i];
  out.degree = a.degree + b.degree;
  return out;
}

bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  }
  return true;
}

Mono to_mono(const Exponents& e) {
  Mono m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    m.e[i] = static_cast<std::uint16_t>(e[i]);
    m.degree += e[i];
  }
  return m;
}

Exponents to_exponents(const Mono& m, std::size_t nvars) {
  return Exponents(m.e.begin(), m.e.begin() + static_cast<std::ptrdiff_t>(nvars));
}

template <class K>
struct Term {
  Mono m;
  K c;
};

template <class K>
using Poly = std::vector<Term<K>>;  // strictly decreasing in grevlex

template <class K>
void make_monic(Poly<K>& p) {
  K inv = K(1) / p.front().c;
  for (auto& t : p) t.c *= inv;
}

// a - c * m * b, skipping the (cancelling) leading terms of both.
template <class K>
Poly<K> subtract_multiple(const Poly<K>& a, std::size_t a_start, const K& c, const Mono& m,
                          const Poly<K>& b) {
  Poly<K> out;
  out.reserve(a.size() - a_start + b.size());
  std::size_t i = a_start + 1;
  std::size_t j = 1;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Mono bm = product(m, b[j].m);
    if (i >= a.size() || grevlex_greater(bm, a[i].m)) {
      out.push_back({bm, -(c * b[j].c)});
      ++j;
    } else if (a[i].m == bm) {
      K v = a[i].c - c * b[j].c;
      if (!is_zero_value(v)) out.push_back({bm, std::move(v)});
      ++i;
      ++j;
    } else {
      out.push_back(a[i++]);
    }
  }
  return out;
}

template <class K>
class Buchberger {
 public:
  Buchberger(std::size_t nvars, const GroebnerBudget& budget) : nvars_(nvars), budget_(budget) {}

  bool run(std::vector<Poly<K>> inputs) {
    for (auto& f : inputs) {
      f = reduce(std::move(f));
      if (f.empty()) continue;
      make_monic(f);
      insert(std::move(f));
    }
    while (!pairs_.empty()) {
      if (++pairs_reduced_ > budget_.max_pairs) return false;
      auto it = pairs_.begin();
      auto [deg, lcm_m, i, j] = *it;
      pairs_.erase(it);
      Poly<K> s = s_polynomial(polys_[i], polys_[j]);
      s = reduce(std::move(s));
      if (s.empty()) continue;
      make_monic(s);
      insert(std::move(s));
      if (polys_.size() > budget_.max_basis) return false;
    }
    return true;
  }

  std::vector<Exponents> leading_monomials() const {
    std::vector<Exponents> out;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) out.push_back(to_exponents(polys_[i].front().m, nvars_));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct PairOrder {
    bool operator()(const std::tuple<int, Mono, std::size_t, std::size_t>& a,
                    const std::tuple<int, Mono, std::size_t, std::size_t>& b) const {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      if (!(std::get<1>(a) == std::get<1>(b))) return grevlex_greater(std::get<1>(b), std::get<1>(a));
      return std::tie(std::get<2>(a), std::get<3>(a)) < std::tie(std::get<2>(b), std::get<3>(b));
    }
  };
  using Pair = std::tuple<int, Mono, std::size_t, std::size_t>;

  const Mono& lm(std::size_t i) const { return polys_[i].front().m; }

  Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) const {
    Mono l = lcm(f.front().m, g.front().m);
    Poly<K> left;
    left.reserve(f.size());
    Mono mf = quotient(l, f.front().m);
    for (const auto& t : f) left.push_back({product(mf, t.m), t.c});
    // Both inputs are monic, so the leading terms cancel exactly.
    return subtract_multiple(left, 0, K(1), quotient(l, g.front().m), g);
  }

  // Full reduction against the active basis.
  Poly<K> reduce(Poly<K> h) const {
    Poly<K> remainder;
    while (!h.empty()) {
      const Term<K>& lead = h.front();
      std::size_t reducer = polys_.size();
      for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (active_[k] && divides(lm(k), lead.m)) {
          reducer = k;
          break;
        }
      }
      if (reducer == polys_.size()) {
        remainder.push_back(lead);
        h.erase(h.begin());
        continue;
      }
      K c = lead.c;  // reducer is monic
      h = subtract_multiple(h, 0, c, quotient(lead.m, lm(reducer)), polys_[reducer]);
    }
    return remainder;
  }

  // Gebauer-Moeller update.
  void insert(Poly<K> h) {
    const std::size_t hi = polys_.size();
    const Mono hm = h.front().m;
    polys_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) candidates.push_back(g);
    }
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      std::size_t g1 = candidates[a];
      Mono l1 = lcm(hm, lm(g1));
      bool keep = coprime(hm, lm(g1));
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < candidates.size() && keep; ++b) {
          if (b == a) continue;
          std::size_t g2 = candidates[b];
          Mono l2 = lcm(hm, lm(g2));
          if (!divides(l2, l1)) continue;
          // Among equal lcms keep only the first; otherwise drop l1.
          if (!(l2 == l1) || b < a) keep = false;
        }
      }
      if (keep) kept.push_back(g1);
    }

    std::set<Pair, PairOrder> next;
    for (const auto& p : pairs_) {
      const auto& [deg, l, i, j] = p;
      bool drop = divides(hm, l) && !(lcm(lm(i), hm) == l) && !(lcm(hm, lm(j)) == l);
      if (!drop) next.insert(p);
    }
    for (std::size_t g : kept) {
      if (coprime(hm, lm(g))) continue;
      Mono l = lcm(hm, lm(g));
      next.insert({l.degree, l, g, hi});
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && divides(hm, lm(g))) active_[g] = false;
    }
  }

  std::size_t nvars_;
  GroebnerBudget budget_;
  std::vector<Poly<K>> polys_;
  std::vector<bool> active_;
  std::set<Pair, PairOrder> pairs_;
  std::size_t pairs_reduced_ = 0;
};

template <class K, class Convert>
std::optional<std::vector<Exponents>> run_buchberger(const std::vector<Polynomial>& generators,
                                                     std::size_t nvars,
                                                     const GroebnerBudget& budget,
                                                     Convert convert) {
  std::vector<Poly<K>> inputs;
  for (const auto& g : generators) {
    Poly<K> p;
    for (const auto& [e, c] : g.terms()) p.push_back({to_mono(e), convert(c)});
    std::sort(p.begin(), p.end(),
              [](const Term<K>& a, const Term<K>& b) { return grevlex_greater(a.m, b.m); });
    if (!p.empty()) inputs.push_back(std::move(p));
  }
  Buchberger<K> gb(nvars, budget);
  if (!gb.run(std::move(inputs))) return std::nullopt;
  return gb.leading_monomials();
}

// --- Arithmetic modulo a word-sized prime ---------------------------------

thread_local std::uint64_t g_prime = 2;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1U;
  }
  return r;
}

struct ModP {
  std::uint64_t v = 0;

  ModP() = default;
  explicit ModP(long long x) {
    long long m = static_cast<long long>(g_prime);
    v = static_cast<std::uint64_t>(((x % m) + m) % m);
  }
  static ModP raw(std::uint64_t x) {
    ModP r;
    r.v = x;
    return r;
  }

  ModP operator-() const { return raw(v == 0 ? 0 : g_prime - v); }
  ModP operator+(const ModP& o) const { return raw((v + o.v) % g_prime); }
  ModP operator-(const ModP& o) const { return raw((v + g_prime - o.v) % g_prime); }
  ModP operator*(const ModP& o) const { return raw(mul_mod(v, o.v, g_prime)); }
  ModP operator/(const ModP& o) const { return *this * raw(pow_mod(o.v, g_prime - 2, g_prime)); }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
};

bool is_zero_value(const ModP& x) { return x.v == 0; }

struct UnluckyPrime {};

ModP rational_mod_p(const Rational& q) {
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), g_prime);
  if (den == 0) throw UnluckyPrime{};
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), g_prime);
  return ModP::raw(num) / ModP::raw(den);
}

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2U, 3U, 5U, 7U, 11U, 13U}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // Deterministic Miller-Rabin for n < 2^32.
  for (std::uint64_t a : {2U, 7U, 61U}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

// A primitive k-th root of unity in F_p, p = 1 mod k.
std::uint64_t primitive_root_of_unity(std::uint64_t k, std::uint64_t p) {
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t rest = k;
  for (std::uint64_t f = 2; f * f <= rest; ++f) {
    if (rest % f == 0) {
      prime_factors.push_back(f);
      while (rest % f == 0) rest /= f;
    }
  }
  if (rest > 1) prime_factors.push_back(rest);
  for (std::uint64_t a = 2; a < p; ++a) {
    std::uint64_t w = pow_mod(a, (p - 1) / k, p);
    bool primitive = std::all_of(prime_factors.begin(), prime_factors.end(),
                                 [&](std::uint64_t f) { return pow_mod(w, k / f, p) != 1; });
    if (primitive) return w;
  }
  throw Error(ErrorKind::InvalidArgument, "no primitive root of unity modulo p");
}

// --- Hilbert series of monomial ideals ------------------------------------

using TPoly = std::vector<long long>;

TPoly tpoly_add(TPoly a, const TPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
  TPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void minimalize(std::vector<Mono>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.e < b.e;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Mono> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Mono& m) { return divides(m, g); });
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

TPoly numerator(std::vector<Mono> gens) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().degree == 0) return {0};

  std::array<int, kMaxVars> count{};
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < kMaxVars; ++v) count[v] += g.e[v] > 0 ? 1 : 0;
  }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  if (count[var] <= 1) {
    // Pairwise coprime generators: the numerator factors.
    TPoly out{1};
    for (const auto& g : gens) {
      TPoly f(g.degree + 1);
      f[0] = 1;
      f[g.degree] -= 1;
      out = tpoly_mul(out, f);
    }
    return out;
  }
  std::vector<int> exps;
  for (const auto& g : gens) {
    if (g.e[var] > 0) exps.push_back(g.e[var]);
  }
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  // The pivot must lie outside the ideal, or the first branch never shrinks.
  for (const auto& g : gens) {
    if (g.e[var] > 0 && g.degree == g.e[var]) e = std::min(e, g.e[var] - 1);
  }
  Mono pivot;
  pivot.e[var] = static_cast<std::uint16_t>(e);
  pivot.degree = e;

  // N(I) = N(I + <p>) + t^deg(p) N(I : p)
  std::vector<Mono> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Mono> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Mono q = g;
    q.e[var] = static_cast<std::uint16_t>(std::max(0, g.e[var] - e));
    q.degree = g.degree - (g.e[var] - q.e[var]);
    colon.push_back(q);
  }
  TPoly shifted(e, 0);
  TPoly tail = numerator(std::move(colon));
  shifted.insert(shifted.end(), tail.begin(), tail.end());
  return tpoly_add(numerator(std::move(with_pivot)), shifted);
}

}  // namespace

std::optional<std::vector<Exponents>> leading_monomial_ideal(
    const std::vector<Polynomial>& generators, const GroebnerBudget& budget) {
  if (generators.empty()) return std::vector<Exponents>{};
  std::size_t nvars = generators.front().variable_count();
  if (nvars > kMaxVars) {
    throw Error(ErrorKind::InvalidArgument, "Groebner basis supports at most 8 variables");
  }
  bool rational = std::all_of(generators.begin(), generators.end(),
                              [](const Polynomial& p) { return p.has_rational_coefficients(); });
  if (rational) {
    return run_buchberger<Rational>(generators, nvars, budget,
                                    [](const Scalar& c) { return c.to_rational(); });
  }
  return run_buchberger<Scalar>(generators, nvars, budget, [](const Scalar& c) { return c; });
}

std::uint64_t certificate_prime(int zeta_order, int index) {
  if (zeta_order < 1 || index < 0) throw Error(ErrorKind::InvalidArgument, "bad certificate prime request");
  const auto k = static_cast<std::uint64_t>(zeta_order);
  std::uint64_t p = (std::uint64_t{1} << 31) - 1;
  p -= (p - 1) % k;
  for (int found = 0;; p -= k) {
    if (p < 3) throw Error(ErrorKind::InvalidArgument, "root-of-unity order too large");
    if (is_prime_u32(p) && found++ == index) return p;
  }
}

std::optional<std::vector<Exponents>> leading_monomial_ideal_mod_p(
    const std::vector<Polynomial>& generators, std::uint64_t prime, const GroebnerBudget& budget) {
  if (generators.empty()) return std::vector<Exponents>{};
  std::size_t nvars = generators.front().variable_count();
  if (nvars > kMaxVars) {
    throw Error(ErrorKind::InvalidArgument, "Groebner basis supports at most 8 variables");
  }
  const int order = generators.front().field()->order();
  if (!is_prime_u32(prime) || (prime - 1) % static_cast<std::uint64_t>(order) != 0) {
    throw Error(ErrorKind::InvalidArgument, "modulus must be a prime = 1 mod the root-of-unity order");
  }
  g_prime = prime;
  const ModP zeta = ModP::raw(primitive_root_of_unity(static_cast<std::uint64_t>(order), prime));
  try {
    return run_buchberger<ModP>(generators, nvars, budget, [&](const Scalar& c) {
      ModP value(0);
      ModP power(1);
      for (const auto& q : c.coefficients()) {
        value = value + rational_mod_p(q) * power;
        power = power * zeta;
      }
      return value;
    });
  } catch (const UnluckyPrime&) {
    return std::nullopt;
  }
}

std::vector<long long> hilbert_numerator(const std::vector<Exponents>& monomials,
                                         std::size_t variable_count) {
  if (variable_count > kMaxVars) {
    throw Error(ErrorKind::InvalidArgument, "Hilbert series supports at most 8 variables");
  }
  std::vector<Mono> gens;
  for (const auto& e : monomials) gens.push_back(to_mono(e));
  TPoly n = numerator(std::move(gens));
  while (n.size() > 1 && n.back() == 0) n.pop_back();
  return n;
}

HilbertSummary summarize_hilbert(const std::vector<Exponents>& monomials,
                                 std::size_t variable_count) {
  TPoly n = hilbert_numerator(monomials, variable_count);
  HilbertSummary out;
  if (n.size() == 1 && n[0] == 0) return out;
  int factors = 0;
  auto value_at_one = [](const TPoly& p) {
    long long s = 0;
    for (auto c : p) s += c;
    return s;
  };
  while (value_at_one(n) == 0 && static_cast<std::size_t>(factors) < variable_count) {
    // Divide by (1 - t).
    TPoly q(n.size() - 1);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      acc += n[i];
      q[i] = acc;
    }
    n = std::move(q);
    ++factors;
  }
  out.krull_dimension = static_cast<int>(variable_count) - factors;
  out.degree = value_at_one(n);
  return out;
}

}  // namespace conifold
