#pragma once

// Joux-Lercier style baseline: the plane with curves y = f(x) and x = g(y), smoothness bases of
// monic irreducibles of degree <= kappa in x and in y.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsieve/ff/factor.hpp"
#include "gsieve/ff/poly.hpp"

namespace gsieve {

struct JLBaseline {
  std::uint32_t p = 0;
  int kappa = 0;
  Poly f, g;
  std::optional<Poly> h;          // simple irreducible factor of g(f(x)) - x defining the target field
  std::vector<std::size_t> count;  // count[k] = number of monic irreducibles of degree k, k = 1..kappa
  std::size_t per_variable = 0;
  std::size_t total = 0;
};

/// Intersection numbers of a curve of bidegree (ux, uy) with y = f(x) and with x = g(y).
inline std::pair<long, long> jl_pencil_degrees(int df, int dg, int ux, int uy) {
  return {static_cast<long>(df) * uy + ux, static_cast<long>(uy) + static_cast<long>(ux) * dg};
}

/// Simple irreducible factors of g(f(x)) - x of the given degree (any degree if d = 0, largest first).
inline std::vector<Poly> jl_target_factors(const Poly& f, const Poly& g, int d = 0) {
  const Poly r = compose(g, f) - Poly::X(f.field());
  std::vector<Poly> out;
  for (auto& t : poly_factor(r).terms) {
    if (t.mult == 1 && (d == 0 || t.factor.degree() == d)) out.push_back(t.factor);
  }
  std::stable_sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.degree() > b.degree(); });
  return out;
}

/// f = x^df + c, g monic of degree dg with random lower coefficients, until g(f(x)) - x has a simple
/// irreducible factor of degree d.
inline std::optional<std::pair<Poly, Poly>> jl_search(std::uint32_t p, int df, int dg, int d, std::uint64_t seed,
                                                      int tries = 20000) {
  PrimeField F(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> U(0, p - 1);
  for (int t = 0; t < tries; ++t) {
    Poly f = Poly::monomial(F, Fp{1}, static_cast<std::size_t>(df)) + Poly::constant(F, Fp{U(rng)});
    std::vector<Fp> c(static_cast<std::size_t>(dg) + 1);
    for (auto& x : c) x = Fp{U(rng)};
    c.back() = Fp{1};
    Poly g(F, c);
    if (!jl_target_factors(f, g, d).empty()) return std::make_pair(f, g);
  }
  return std::nullopt;
}

inline JLBaseline jl_baseline(const Poly& f, const Poly& g, int kappa, int d = 0) {
  JLBaseline r{f.field().modulus(), kappa, f, g, std::nullopt, {}, 0, 0};
  auto hs = jl_target_factors(f, g, d);
  if (!hs.empty()) r.h = hs.front();
  r.count.assign(static_cast<std::size_t>(kappa) + 1, 0);
  for (int k = 1; k <= kappa; ++k) {
    r.count[static_cast<std::size_t>(k)] = monic_irreducibles(f.field(), k).size();
    r.per_variable += r.count[static_cast<std::size_t>(k)];
  }
  r.total = 2 * r.per_variable;
  return r;
}

inline std::string jl_report(const JLBaseline& r, std::size_t reduced = 0) {
  std::ostringstream os;
  os << "baseline jl\n";
  os << "  p = " << r.p << ", kappa = " << r.kappa << "\n";
  os << "  f = " << r.f.to_string("x") << ", g = " << r.g.to_string("y") << "\n";
  if (r.h) {
    os << "  target factor h of g(f(x)) - x: degree " << r.h->degree() << ", h = " << r.h->to_string("x") << "\n";
  } else {
    os << "  target factor h: none of the requested degree\n";
  }
  for (int k = 1; k <= r.kappa; ++k) os << "  monic irreducibles of degree " << k << ": " << r.count[static_cast<std::size_t>(k)] << "\n";
  os << "  basis per variable = " << r.per_variable << ", both variables = " << r.total << "\n";
  auto [dA, dB] = jl_pencil_degrees(r.f.degree(), r.g.degree(), 1, 1);
  os << "  pencil bidegree (1,1): intersections " << dA << " with y = f(x), " << dB << " with x = g(y)\n";
  if (reduced) {
    os << "  Galois-reduced basis = " << reduced << ", reduction factor = " << std::fixed;
    os.precision(2);
    os << static_cast<double>(r.total) / static_cast<double>(reduced) << "\n";
  }
  return os.str();
}

}  // namespace gsieve
