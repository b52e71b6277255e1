#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gsieve/ff/poly.hpp"

namespace gsieve {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct FactorTerm {
  Poly factor;
  int mult;
};

/// f = lead * prod factor^mult, factors monic irreducible in canonical order.
struct Factorization {
  Fp lead;
  std::vector<FactorTerm> terms;

  int num_factors() const {
    int n = 0;
    for (auto& t : terms) n += t.mult;
    return n;
  }
};

namespace detail {

/// p-th root of a polynomial whose derivative vanishes (coefficients in F_p are fixed by Frobenius).
inline Poly pth_root(const Poly& f) {
  const std::uint32_t p = f.field().modulus();
  std::vector<Fp> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return Poly(f.field(), std::move(c));
}

/// a^((p^d - 1)/2) mod f, using (p^d-1)/2 = (1 + p + ... + p^{d-1}) * (p-1)/2.
inline Poly half_norm_power(const Poly& a, int d, const Poly& f) {
  const std::uint32_t p = f.field().modulus();
  Poly t = a % f, n = t;
  for (int i = 1; i < d; ++i) {
    t = powmod(t, p, f);
    n = mulmod(n, t, f);
  }
  return powmod(n, (p - 1) / 2, f);
}

inline Poly random_poly(PrimeField F, int deg_bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, F.modulus() - 1);
  std::vector<Fp> c(static_cast<std::size_t>(deg_bound));
  for (auto& x : c) x = Fp{dist(rng)};
  return Poly(F, std::move(c));
}

}  // namespace detail

/// Squarefree decomposition: returns (g_i, i) with f = lead * prod g_i^i, g_i squarefree and coprime.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  const std::uint32_t p = f.field().modulus();
  Poly g = f.monic();
  if (g.degree() <= 0) return out;
  Poly d = g.derivative();
  if (d.is_zero()) {
    for (auto& [h, m] : squarefree_decomposition(detail::pth_root(g))) out.push_back({h, m * static_cast<int>(p)});
    return out;
  }
  Poly c = gcd(g, d);
  Poly w = g / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (!z.is_one()) out.push_back({z, i});
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_one()) {
    for (auto& [h, m] : squarefree_decomposition(detail::pth_root(c))) out.push_back({h, m * static_cast<int>(p)});
  }
  return out;
}

/// Distinct-degree factorization of a monic squarefree f: pairs (product of all degree-k factors, k).
inline std::vector<std::pair<Poly, int>> distinct_degree_factor(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const PrimeField& F = f.field();
  const Poly x = Poly::X(F);
  Poly h = x % f;
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    h = powmod(h, F.modulus(), f);
    Poly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.push_back({g, k});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f, f.degree()});
  return out;
}

/// Equal-degree splitting of a monic squarefree f whose irreducible factors all have degree d.
inline void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  if (f.degree() < d || f.degree() % d != 0) {
    throw std::logic_error("equal_degree_split: degree is not a multiple of d");
  }
  const PrimeField& F = f.field();
  for (;;) {
    Poly a = detail::random_poly(F, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly g = gcd(a, f);
    if (g.degree() <= 0) {
      Poly b = detail::half_norm_power(a, d, f);
      g = gcd(b - Poly::one(F), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

/// Full factorization into monic irreducibles. The result does not depend on the seed.
inline Factorization poly_factor(const Poly& f, std::uint64_t seed = kDefaultSeed) {
  if (f.is_zero()) throw std::domain_error("poly_factor: zero polynomial");
  std::mt19937_64 rng(seed);
  Factorization r{f.lead(), {}};
  for (auto& [g, m] : squarefree_decomposition(f)) {
    for (auto& [h, k] : distinct_degree_factor(g)) {
      std::vector<Poly> parts;
      equal_degree_split(h, k, rng, parts);
      for (auto& q : parts) r.terms.push_back({std::move(q), m});
    }
  }
  std::sort(r.terms.begin(), r.terms.end(), [](const FactorTerm& a, const FactorTerm& b) {
    if (a.factor == b.factor) return a.mult < b.mult;
    return poly_less(a.factor, b.factor);
  });
  // merge equal factors (only possible through the p-th-power branch)
  std::vector<FactorTerm> merged;
  for (auto& t : r.terms) {
    if (!merged.empty() && merged.back().factor == t.factor) {
      merged.back().mult += t.mult;
    } else {
      merged.push_back(std::move(t));
    }
  }
  r.terms = std::move(merged);
  return r;
}

/// Rabin irreducibility test.
inline bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const PrimeField& F = f.field();
  const Poly g = f.monic();
  const int n = g.degree();
  const Poly x = Poly::X(F);
  // x^(p^n) == x
  std::vector<Poly> frob{x % g};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), F.modulus(), g));
  if (!(frob[n] == x % g)) return false;
  for (auto q : prime_factors(static_cast<std::uint64_t>(n))) {
    if (!gcd(frob[n / q] - x, g).is_one()) return false;
  }
  return true;
}

/// Roots in F_p, ascending.
inline std::vector<Fp> poly_roots(const Poly& f, std::uint64_t seed = kDefaultSeed) {
  if (f.is_zero()) throw std::domain_error("poly_roots: zero polynomial");
  std::vector<Fp> out;
  if (f.degree() < 1) return out;
  const PrimeField& F = f.field();
  const Poly g0 = f.monic();
  Poly xp = powmod(Poly::X(F), F.modulus(), g0);
  Poly g = gcd(xp - Poly::X(F), g0);
  if (g.degree() < 1) return out;
  std::mt19937_64 rng(seed);
  std::vector<Poly> lin;
  equal_degree_split(g, 1, rng, lin);
  for (auto& l : lin) out.push_back(F.neg(l[0]));
  std::sort(out.begin(), out.end());
  return out;
}

/// Irreducible factors of degree exactly k (monic, canonical order).
inline std::vector<Poly> factors_of_degree(const Poly& f, int k, std::uint64_t seed = kDefaultSeed) {
  std::vector<Poly> out;
  for (auto& t : poly_factor(f, seed).terms) {
    if (t.factor.degree() == k) out.push_back(t.factor);
  }
  return out;
}

/// All monic irreducible polynomials of degree d over F_p, canonical order (small p^d only).
inline std::vector<Poly> monic_irreducibles(PrimeField F, int d) {
  std::vector<Poly> out;
  const std::uint64_t p = F.modulus();
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  if (total > 50'000'000) throw std::invalid_argument("monic_irreducibles: p^d too large to enumerate");
  std::vector<Fp> c(static_cast<std::size_t>(d) + 1);
  c[d] = Fp{1};
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    // idx enumerates coefficient vectors with the highest free coefficient most significant
    std::uint64_t t = idx;
    for (int i = 0; i < d; ++i) {
      c[i] = Fp{static_cast<std::uint32_t>(t % p)};
      t /= p;
    }
    Poly g(F, c);
    if (is_irreducible(g)) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

/// Least monic irreducible of degree d in canonical order (found by increasing search).
inline Poly first_irreducible(PrimeField F, int d) {
  if (d == 1) return Poly::X(F);
  const std::uint64_t p = F.modulus();
  std::vector<Fp> c(static_cast<std::size_t>(d) + 1);
  c[d] = Fp{1};
  for (std::uint64_t idx = 0;; ++idx) {
    // most significant free coefficient is c[d-1]
    std::uint64_t t = idx;
    for (int i = 0; i < d; ++i) {
      c[i] = Fp{static_cast<std::uint32_t>(t % p)};
      t /= p;
    }
    Poly g(F, c);
    if (is_irreducible(g)) return g;
  }
}

}  // namespace gsieve
