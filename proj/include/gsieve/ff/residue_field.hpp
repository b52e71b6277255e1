#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsieve/ff/factor.hpp"
#include "gsieve/ff/poly.hpp"

namespace gsieve {

using ResidueElem = Poly;

/// F_p[X]/(A) for a monic irreducible A, elements represented by reduced polynomials.
class ResidueField {
 public:
  using Elem = Poly;

  explicit ResidueField(const Poly& A) : F_(A.field()), A_(A.monic()), xp_(F_) {
    if (!is_irreducible(A_)) {
      throw std::invalid_argument("ResidueField: modulus " + A_.to_string() + " is not irreducible");
    }
    xp_ = powmod(Poly::X(F_), F_.modulus(), A_);
  }

  const PrimeField& base() const noexcept { return F_; }
  const Poly& modulus() const noexcept { return A_; }
  int degree() const noexcept { return A_.degree(); }
  std::uint32_t characteristic() const noexcept { return F_.modulus(); }
  /// p^degree, saturating; meaningful only when it fits.
  std::uint64_t order() const noexcept {
    std::uint64_t q = 1;
    for (int i = 0; i < degree(); ++i) q *= F_.modulus();
    return q;
  }

  Elem zero() const { return Poly(F_); }
  Elem one() const { return Poly::one(F_); }
  Elem gen() const { return Poly::X(F_) % A_; }
  Elem from_fp(Fp a) const { return Poly::constant(F_, a); }
  Elem from_int(std::int64_t a) const { return Poly::constant(F_, F_.from_int(a)); }
  Elem reduce(const Poly& a) const { return a % A_; }

  bool is_zero(const Elem& a) const noexcept { return a.is_zero(); }
  bool is_one(const Elem& a) const noexcept { return a.is_one(); }
  /// Some(c) when a lies in the prime field.
  std::optional<Fp> as_fp(const Elem& a) const {
    if (a.degree() > 0) return std::nullopt;
    return a[0];
  }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return mulmod(a, b, A_); }
  Elem sqr(const Elem& a) const { return mulmod(a, a, A_); }
  Elem inv(const Elem& a) const {
    if (a.is_zero()) throw std::domain_error("ResidueField::inv: zero is not invertible");
    return invmod(a, A_);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem scale(const Elem& a, Fp c) const { return a.scaled(c); }

  Elem pow(const Elem& a, std::uint64_t e) const { return powmod(a, e, A_); }

  /// a^(p^k).
  Elem frobenius(const Elem& a, int k = 1) const {
    Elem r = a;
    for (int i = 0; i < k; ++i) r = compose_mod(r, xp_, A_);
    return r;
  }
  const Elem& x_to_p() const noexcept { return xp_; }

  Fp trace(const Elem& a) const {
    Elem s = a, t = a;
    for (int i = 1; i < degree(); ++i) {
      t = frobenius(t);
      s = s + t;
    }
    return s[0];
  }
  Fp norm(const Elem& a) const {
    Elem s = a, t = a;
    for (int i = 1; i < degree(); ++i) {
      t = frobenius(t);
      s = mul(s, t);
    }
    return s[0];
  }

  bool is_square(const Elem& a) const { return a.is_zero() || F_.is_square(norm(a)); }

  /// Square root by Cantor-Zassenhaus on Y^2 - a. Deterministic for a fixed seed.
  std::optional<Elem> sqrt(const Elem& a, std::uint64_t seed = kDefaultSeed) const {
    if (a.is_zero()) return zero();
    if (!is_square(a)) return std::nullopt;
    if (degree() == 1) {
      auto r = F_.sqrt(a[0]);
      return from_fp(*r);
    }
    // arithmetic in F_q[Y]/(Y^2 - a), pairs (c0, c1) = c0 + c1*Y
    using Pair = std::pair<Elem, Elem>;
    auto pmul = [&](const Pair& u, const Pair& v) -> Pair {
      return {add(mul(u.first, v.first), mul(mul(u.second, v.second), a)),
              add(mul(u.first, v.second), mul(u.second, v.first))};
    };
    auto ppow = [&](Pair u, std::uint64_t e) {
      Pair r{one(), zero()};
      while (e) {
        if (e & 1) r = pmul(r, u);
        e >>= 1;
        if (e) u = pmul(u, u);
      }
      return r;
    };
    std::mt19937_64 rng(seed);
    const std::uint32_t p = F_.modulus();
    for (;;) {
      Elem r = detail::random_poly(F_, degree(), rng);
      Pair u{r, one()};
      Pair t = u, n = u;
      for (int i = 1; i < degree(); ++i) {
        t = ppow(t, p);
        n = pmul(n, t);
      }
      Pair w = ppow(n, (p - 1) / 2);
      if (w.second.is_zero()) continue;
      Elem s = div(sub(one(), w.first), w.second);
      if (mul(s, s) == a % A_) return canonical_sqrt(s);
    }
  }

  Elem random(std::mt19937_64& rng) const { return detail::random_poly(F_, degree(), rng); }

  /// Calls fn on every element (small fields only).
  void for_each(const std::function<void(const Elem&)>& fn) const {
    const std::uint64_t q = order();
    const std::uint32_t p = F_.modulus();
    std::vector<Fp> c(static_cast<std::size_t>(degree()));
    for (std::uint64_t idx = 0; idx < q; ++idx) {
      std::uint64_t t = idx;
      for (auto& x : c) {
        x = Fp{static_cast<std::uint32_t>(t % p)};
        t /= p;
      }
      fn(Poly(F_, c));
    }
  }

  /// Index of an element in the enumeration order of for_each.
  std::uint64_t index_of(const Elem& a) const {
    std::uint64_t idx = 0;
    for (int i = degree() - 1; i >= 0; --i) idx = idx * F_.modulus() + a[i].v;
    return idx;
  }

  std::string to_string(const Elem& a) const { return a.to_string("x"); }

  friend bool operator==(const ResidueField& a, const ResidueField& b) noexcept {
    return a.A_ == b.A_;
  }

 private:
  Elem canonical_sqrt(const Elem& s) const {
    Elem t = neg(s);
    return poly_less(t, s) ? t : s;
  }

  PrimeField F_;
  Poly A_;
  Poly xp_;
};

/// residue_pow as a free function.
inline ResidueElem residue_pow(const ResidueField& K, const ResidueElem& z, std::uint64_t e) {
  return K.pow(z, e);
}

}  // namespace gsieve
