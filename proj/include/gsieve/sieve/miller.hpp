#pragma once

#include <cstdint>
#include <stdexcept>

#include "gsieve/curve/place.hpp"
#include "gsieve/ec/curve.hpp"

namespace gsieve {

namespace detail {

/// Value at P of the function with divisor (U) + (V) - (U + V) - (O).
inline ResidueElem chord_value(const CurveExt& C, const PointFp& U, const PointFp& V, const CurveFp& E,
                               const CurveExt::Point& P) {
  const ResidueField& K = C.field();
  const PrimeField& F = E.field();
  if (U.inf || V.inf) return K.one();
  auto xu = K.from_fp(U.x), yu = K.from_fp(U.y);
  if (U.x == V.x && !(U.y == V.y && U.y.v != 0)) return K.sub(P.x, xu);
  Fp lam = U.x == V.x ? F.div(F.add(F.mul(F.from_int(3), F.sqr(U.x)), E.a4()), F.add(U.y, U.y))
                      : F.div(F.sub(V.y, U.y), F.sub(V.x, U.x));
  auto line = K.sub(K.sub(P.y, yu), K.mul(K.from_fp(lam), K.sub(P.x, xu)));
  PointFp W = E.add(U, V);
  if (W.inf) throw std::logic_error("chord_value: unexpected vertical chord");
  auto v = K.sub(P.x, K.from_fp(W.x));
  return K.div(line, v);
}

}  // namespace detail

/// Value at P of the Miller function with divisor n (T) - ([n]T) - (n - 1)(O).
inline ResidueElem miller_value(const CurveFp& E, const PointFp& T, std::uint64_t n, const CurveExt& C,
                                const CurveExt::Point& P) {
  if (E.a1().v != 0 || E.a3().v != 0 || E.a2().v != 0) {
    throw std::invalid_argument("miller_value: short Weierstrass curves only");
  }
  const ResidueField& K = C.field();
  if (n == 0) throw std::invalid_argument("miller_value: n = 0");
  ResidueElem f = K.one();
  PointFp R = T;
  int top = 63;
  while (!((n >> top) & 1)) --top;
  for (int i = top - 1; i >= 0; --i) {
    f = K.mul(K.sqr(f), detail::chord_value(C, R, R, E, P));
    R = E.add(R, R);
    if ((n >> i) & 1) {
      f = K.mul(f, detail::chord_value(C, R, T, E, P));
      R = E.add(R, T);
    }
  }
  return f;
}

/// Value at P of a function g_q with divisor n (q) - n deg(q) (O), for a place q of degree <= 2 where
/// n kills the rational points. Only defined up to a constant in F_p^*.
inline ResidueElem basis_function_value(const CurveFp& E, const Place& q, std::uint64_t n, const CurveExt& C,
                                        const CurveExt::Point& P) {
  const ResidueField& K = C.field();
  const PrimeField& F = E.field();
  if (q.is_infinite()) return K.one();
  if (q.degree() == 1) {
    PointFp T = E.point(F.neg(q.h[0]), q.lambda[0]);
    return miller_value(E, T, n, C, P);
  }
  if (q.degree() != 2) throw std::invalid_argument("basis_function_value: place degree > 2");
  if (q.kind == PlaceKind::Inert) {
    return residue_pow(K, K.sub(P.x, K.from_fp(F.neg(q.h[0]))), n);
  }
  // y - lambda(x) cuts q plus a third rational point T3
  const Poly f = curve_poly(E);
  const Poly lam = q.kind == PlaceKind::Ramified ? Poly(F) : q.lambda;
  auto [lin, rem] = divmod(f - lam * lam, q.h);
  if (!rem.is_zero() || lin.degree() != 1) throw std::logic_error("basis_function_value: line does not cut the place");
  const Fp x3 = F.neg(F.div(lin[0], lin[1]));
  PointFp T3 = E.point(x3, lam.eval(x3));
  ResidueElem lv = K.sub(P.y, K.from_fp(lam[0]));
  if (lam.degree() >= 1) lv = K.sub(lv, K.mul(K.from_fp(lam[1]), P.x));
  return K.div(residue_pow(K, lv, n), miller_value(E, T3, n, C, P));
}

}  // namespace gsieve
