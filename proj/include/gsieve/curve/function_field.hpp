#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsieve/curve/place.hpp"
#include "gsieve/ec/curve.hpp"
#include "gsieve/ff/factor.hpp"
#include "gsieve/ff/ratfunc.hpp"
#include "gsieve/ff/residue_field.hpp"

namespace gsieve {

/// a(x) + b(x) y in F_p(x)[y]/(y^2 - f).
struct FFElem {
  RatFunc a, b;

  friend bool operator==(const FFElem& u, const FFElem& v) { return u.a == v.a && u.b == v.b; }
};

using CurveFunction = FFElem;

/// The function field F_p(E) of y^2 = f(x), usable as a coefficient field for Curve<>.
class FunctionField {
 public:
  using Elem = FFElem;

  explicit FunctionField(Poly f) : F_(f.field()), f_(std::move(f)) {}
  explicit FunctionField(const CurveFp& E) : FunctionField(curve_poly(E)) {}

  const PrimeField& base() const noexcept { return F_; }
  const Poly& f() const noexcept { return f_; }

  Elem zero() const { return {RatFunc(F_), RatFunc(F_)}; }
  Elem one() const { return {RatFunc(Poly::one(F_)), RatFunc(F_)}; }
  Elem from_int(std::int64_t n) const { return from_fp(F_.from_int(n)); }
  Elem from_fp(Fp c) const { return {RatFunc::constant(F_, c), RatFunc(F_)}; }
  Elem from_rat(RatFunc r) const { return {std::move(r), RatFunc(F_)}; }
  Elem x() const { return {RatFunc::X(F_), RatFunc(F_)}; }
  Elem y() const { return {RatFunc(F_), RatFunc(Poly::one(F_))}; }

  bool is_zero(const Elem& u) const { return u.a.is_zero() && u.b.is_zero(); }
  Elem add(const Elem& u, const Elem& v) const { return {u.a + v.a, u.b + v.b}; }
  Elem sub(const Elem& u, const Elem& v) const { return {u.a - v.a, u.b - v.b}; }
  Elem neg(const Elem& u) const { return {-u.a, -u.b}; }
  Elem mul(const Elem& u, const Elem& v) const {
    if (u.b.is_zero() && v.b.is_zero()) return {u.a * v.a, RatFunc(F_)};
    RatFunc fr(f_);
    return {u.a * v.a + u.b * v.b * fr, u.a * v.b + u.b * v.a};
  }
  Elem sqr(const Elem& u) const { return mul(u, u); }
  /// Norm to F_p(x): a^2 - b^2 f.
  RatFunc norm(const Elem& u) const { return u.a * u.a - u.b * u.b * RatFunc(f_); }
  Elem inv(const Elem& u) const {
    if (is_zero(u)) throw std::domain_error("FunctionField::inv: zero");
    RatFunc n = norm(u).inv();
    return {u.a * n, -(u.b * n)};
  }
  Elem div(const Elem& u, const Elem& v) const { return mul(u, inv(v)); }

  /// Substitute x -> X(x), y -> y Y(x) into a(x) + b(x) y (as used for isogeny pullbacks).
  Elem substitute(const Elem& u, const RatFunc& X, const RatFunc& Y) const {
    return {compose(u.a, X), compose(u.b, X) * Y};
  }

 private:
  PrimeField F_;
  Poly f_;
};

using CurveFF = Curve<FunctionField>;

inline CurveFF generic_curve(const CurveFp& E) {
  FunctionField K(E);
  return CurveFF(K, K.from_fp(E.a1()), K.from_fp(E.a2()), K.from_fp(E.a3()), K.from_fp(E.a4()),
                 K.from_fp(E.a6()));
}

/// a^2 - b^2 f
inline RatFunc ff_norm(const FFElem& g, const Poly& f) {
  return g.a * g.a - g.b * g.b * RatFunc(f);
}

namespace detail {

/// Divisor of a nonzero polynomial in x, seen as a function on the curve.
inline Divisor divisor_of_xpoly(const Poly& c, const Poly& f, std::uint64_t seed) {
  Divisor D;
  if (c.degree() <= 0) return D;
  for (auto& t : poly_factor(c, seed).terms) {
    const Poly& h = t.factor;
    long e = t.mult;
    Poly fh = f % h;
    if (fh.is_zero()) {
      D.add(Place::ramified(h), 2 * e);
      continue;
    }
    ResidueField K(h);
    if (auto r = K.sqrt(fh)) {
      D.add(Place::split(h, *r), e);
      D.add(Place::split(h, K.neg(*r)), e);
    } else {
      D.add(Place::inert(h), e);
    }
  }
  D.add(Place::infinite(f.field()), -2L * c.degree());
  return D;
}

}  // namespace detail

/// Divisor of the function (A + B y) with polynomial A, B, not both zero.
inline Divisor divisor_of_poly_function(const Poly& A, const Poly& B, const Poly& f,
                                        std::uint64_t seed = kDefaultSeed) {
  const PrimeField& F = f.field();
  if (A.is_zero() && B.is_zero()) throw std::domain_error("divisor_of: zero function");
  if (B.is_zero()) return detail::divisor_of_xpoly(A.monic(), f, seed);
  if (A.is_zero()) {
    Divisor D = detail::divisor_of_xpoly(B.monic(), f, seed);
    for (auto& t : poly_factor(f, seed).terms) D.add(Place::ramified(t.factor), 1);
    D.add(Place::infinite(F), -3);
    return D;
  }
  Poly c0 = gcd(A, B);
  Poly A1 = A, B1 = B;
  Divisor D;
  if (c0.degree() > 0) {
    A1 = A / c0;
    B1 = B / c0;
    D += detail::divisor_of_xpoly(c0, f, seed);
  }
  Poly N = A1 * A1 - B1 * B1 * f;
  if (N.degree() > 0) {
    for (auto& t : poly_factor(N, seed).terms) {
      const Poly& h = t.factor;
      if ((f % h).is_zero()) {
        D.add(Place::ramified(h), t.mult);
      } else {
        Poly lam = (-(A1 % h) * invmod(B1, h)) % h;
        D.add(Place::split(h, lam), t.mult);
      }
    }
  }
  long vinf = std::min(-2L * A1.degree(), -2L * B1.degree() - 3);
  D.add(Place::infinite(F), vinf);
  return D;
}

/// Divisor of a nonzero function a(x) + b(x) y. The result always has degree 0.
inline Divisor divisor_of(const FFElem& g, const Poly& f, std::uint64_t seed = kDefaultSeed) {
  if (g.a.is_zero() && g.b.is_zero()) throw std::domain_error("divisor_of: zero function");
  // g = (A + B y) / c with c = lcm of the denominators
  const Poly& da = g.a.den();
  const Poly& db = g.b.den();
  Poly c = (da * db) / gcd(da, db);
  Poly A = g.a.num() * (c / da);
  Poly B = g.b.num() * (c / db);
  Divisor D = divisor_of_poly_function(A, B, f, seed);
  D -= detail::divisor_of_xpoly(c, f, seed);
  if (D.degree() != 0) throw std::logic_error("divisor_of: degree is not zero");
  return D;
}

/// Value of g at a finite split or ramified place, in F_p[x]/(h).
inline ResidueElem residue_at(const FFElem& g, const Place& P) {
  if (P.kind != PlaceKind::Split && P.kind != PlaceKind::Ramified) {
    throw std::invalid_argument("residue_at: only split and ramified finite places are supported");
  }
  const Poly& h = P.h;
  auto ev = [&](const RatFunc& r) -> Poly {
    Poly d = r.den() % h;
    if (d.is_zero()) throw std::domain_error("residue_at: pole at the place " + P.to_string());
    return mulmod(r.num() % h, invmod(d, h), h);
  };
  Poly v = ev(g.a);
  if (!g.b.is_zero()) v = (v + mulmod(ev(g.b), P.lambda, h)) % h;
  if (v.is_zero()) throw std::domain_error("residue_at: zero at the place " + P.to_string());
  return v;
}

}  // namespace gsieve
