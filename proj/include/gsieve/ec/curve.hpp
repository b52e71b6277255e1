#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsieve/ff/factor.hpp"
#include "gsieve/ff/prime_field.hpp"
#include "gsieve/ff/residue_field.hpp"

namespace gsieve {

inline bool elem_less(Fp a, Fp b) { return a < b; }
inline bool elem_less(const Poly& a, const Poly& b) { return poly_less(a, b); }

inline std::string elem_str(const PrimeField&, Fp a) { return std::to_string(a.v); }
inline std::string elem_str(const ResidueField& K, const Poly& a) { return K.to_string(a); }

/// Point on a Weierstrass curve: the point at infinity or affine (x, y).
template <class Elem>
struct ECPoint {
  bool inf = true;
  Elem x, y;

  friend bool operator==(const ECPoint& a, const ECPoint& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const ECPoint& a, const ECPoint& b) {
    if (a.inf || b.inf) return a.inf && !b.inf;
    if (!(a.x == b.x)) return elem_less(a.x, b.x);
    return elem_less(a.y, b.y);
  }
};

using PointFp = ECPoint<Fp>;

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over the field K.
template <class Field>
class Curve {
 public:
  using Elem = typename Field::Elem;
  using Point = ECPoint<Elem>;

  Curve(Field K, Elem a1, Elem a2, Elem a3, Elem a4, Elem a6)
      : K_(std::move(K)), a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6) {
    if (K_.is_zero(discriminant())) throw std::invalid_argument("Curve: singular Weierstrass equation");
  }
  /// Short form y^2 = x^3 + a4 x + a6.
  Curve(Field K, Elem a4, Elem a6) : Curve(K, K.zero(), K.zero(), K.zero(), a4, a6) {}

  const Field& field() const noexcept { return K_; }
  const Elem& a1() const noexcept { return a1_; }
  const Elem& a2() const noexcept { return a2_; }
  const Elem& a3() const noexcept { return a3_; }
  const Elem& a4() const noexcept { return a4_; }
  const Elem& a6() const noexcept { return a6_; }
  bool is_short() const {
    return K_.is_zero(a1_) && K_.is_zero(a2_) && K_.is_zero(a3_);
  }

  Elem discriminant() const {
    const Field& K = K_;
    auto c = [&](std::int64_t n) { return K.from_int(n); };
    Elem b2 = K.add(K.mul(a1_, a1_), K.mul(c(4), a2_));
    Elem b4 = K.add(K.mul(c(2), a4_), K.mul(a1_, a3_));
    Elem b6 = K.add(K.mul(a3_, a3_), K.mul(c(4), a6_));
    Elem b8 = K.sub(K.add(K.add(K.mul(K.mul(a1_, a1_), a6_), K.mul(K.mul(c(4), a2_), a6_)),
                          K.mul(a2_, K.mul(a3_, a3_))),
                    K.add(K.mul(K.mul(a1_, a3_), a4_), K.mul(a4_, a4_)));
    Elem d = K.neg(K.mul(K.mul(b2, b2), b8));
    d = K.sub(d, K.mul(c(8), K.mul(b4, K.mul(b4, b4))));
    d = K.sub(d, K.mul(c(27), K.mul(b6, b6)));
    d = K.add(d, K.mul(c(9), K.mul(b2, K.mul(b4, b6))));
    return d;
  }

  Point infinity() const { return Point{true, K_.zero(), K_.zero()}; }
  Point point(Elem x, Elem y) const { return Point{false, std::move(x), std::move(y)}; }

  /// x^3 + a2 x^2 + a4 x + a6
  Elem rhs(const Elem& x) const {
    return K_.add(K_.mul(K_.add(K_.mul(K_.add(x, a2_), x), a4_), x), a6_);
  }

  bool on_curve(const Point& P) const {
    if (P.inf) return true;
    Elem lhs = K_.add(K_.mul(P.y, P.y), K_.mul(P.y, K_.add(K_.mul(a1_, P.x), a3_)));
    return lhs == rhs(P.x);
  }

  Point neg(const Point& P) const {
    if (P.inf) return P;
    return point(P.x, K_.sub(K_.neg(P.y), K_.add(K_.mul(a1_, P.x), a3_)));
  }

  Point add(const Point& P, const Point& Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    const bool same_x = P.x == Q.x;
    if (same_x) {
      Elem s = K_.add(K_.add(P.y, Q.y), K_.add(K_.mul(a1_, Q.x), a3_));
      if (K_.is_zero(s)) return infinity();
    }
    Elem lambda = same_x ? tangent_slope(P) : K_.div(K_.sub(Q.y, P.y), K_.sub(Q.x, P.x));
    Elem nu = K_.sub(P.y, K_.mul(lambda, P.x));
    Elem x3 = K_.sub(K_.sub(K_.sub(K_.add(K_.mul(lambda, lambda), K_.mul(a1_, lambda)), a2_), P.x), Q.x);
    Elem y3 = K_.sub(K_.sub(K_.neg(K_.mul(K_.add(lambda, a1_), x3)), nu), a3_);
    return point(std::move(x3), std::move(y3));
  }

  Point sub(const Point& P, const Point& Q) const { return add(P, neg(Q)); }

  Point mul(std::int64_t n, Point P) const {
    if (n < 0) {
      n = -n;
      P = neg(P);
    }
    Point R = infinity();
    while (n) {
      if (n & 1) R = add(R, P);
      n >>= 1;
      if (n) P = add(P, P);
    }
    return R;
  }

  /// Order of P given a multiple N of it.
  std::uint64_t order(const Point& P, std::uint64_t N) const {
    if (!mul(static_cast<std::int64_t>(N), P).inf) throw std::invalid_argument("Curve::order: N is not a multiple");
    std::uint64_t n = N;
    for (auto q : prime_factors(N)) {
      while (n % q == 0 && mul(static_cast<std::int64_t>(n / q), P).inf) n /= q;
    }
    return n;
  }

  /// Affine points with the given x (0, 1 or 2 of them), by solving the quadratic in y.
  std::vector<Point> lift_x(const Elem& x) const {
    std::vector<Point> out;
    // y^2 + B y - C = 0 with B = a1 x + a3, C = rhs(x)
    Elem B = K_.add(K_.mul(a1_, x), a3_);
    Elem C = rhs(x);
    Elem disc = K_.add(K_.mul(B, B), K_.mul(K_.from_int(4), C));
    auto r = K_.sqrt(disc);
    if (!r) return out;
    Elem half = K_.inv(K_.from_int(2));
    Elem y1 = K_.mul(K_.sub(*r, B), half);
    out.push_back(point(x, y1));
    if (!K_.is_zero(*r)) out.push_back(point(x, K_.mul(K_.sub(K_.neg(*r), B), half)));
    return out;
  }

  std::string to_string(const Point& P) const {
    if (P.inf) return "(0:1:0)";
    return "(" + elem_str(K_, P.x) + ":" + elem_str(K_, P.y) + ":1)";
  }

 private:
  Elem tangent_slope(const Point& P) const {
    Elem num = K_.add(K_.mul(K_.from_int(3), K_.mul(P.x, P.x)), K_.mul(K_.from_int(2), K_.mul(a2_, P.x)));
    num = K_.sub(K_.add(num, a4_), K_.mul(a1_, P.y));
    Elem den = K_.add(K_.add(K_.mul(K_.from_int(2), P.y), K_.mul(a1_, P.x)), a3_);
    return K_.div(num, den);
  }

  Field K_;
  Elem a1_, a2_, a3_, a4_, a6_;
};

using CurveFp = Curve<PrimeField>;
using CurveExt = Curve<ResidueField>;

inline constexpr std::uint64_t kPointEnumLimit = 10'000'000;

/// All points of E over F_p, sorted, infinity first.
inline std::vector<PointFp> ec_points(const CurveFp& E) {
  const PrimeField& F = E.field();
  std::vector<PointFp> out{E.infinity()};
  for (std::uint32_t x = 0; x < F.modulus(); ++x) {
    for (auto& P : E.lift_x(Fp{x})) out.push_back(P);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The curve with coefficients lifted to an extension K.
inline CurveExt lift_curve(const CurveFp& E, const ResidueField& K) {
  return CurveExt(K, K.from_fp(E.a1()), K.from_fp(E.a2()), K.from_fp(E.a3()), K.from_fp(E.a4()),
                  K.from_fp(E.a6()));
}

/// All points over the extension K (p^k up to about 10^7), sorted, infinity first.
inline std::vector<CurveExt::Point> ec_points(const CurveExt& E) {
  const ResidueField& K = E.field();
  if (K.order() > kPointEnumLimit) throw std::invalid_argument("ec_points: field too large to enumerate");
  std::vector<CurveExt::Point> out{E.infinity()};
  K.for_each([&](const Poly& x) {
    for (auto& P : E.lift_x(x)) out.push_back(P);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Points over F_{p^k}, with F_{p^k} built from the least irreducible of degree k.
inline std::vector<CurveExt::Point> ec_points(const CurveFp& E, int k) {
  ResidueField K(first_irreducible(E.field(), k));
  return ec_points(lift_curve(E, K));
}

inline std::uint64_t ec_count(const CurveFp& E) { return ec_points(E).size(); }

/// Trace of Frobenius t = p + 1 - #E(F_p).
inline std::int64_t ec_trace(const CurveFp& E) {
  return static_cast<std::int64_t>(E.field().modulus()) + 1 - static_cast<std::int64_t>(ec_count(E));
}

inline bool is_ordinary(const CurveFp& E) { return ec_trace(E) % static_cast<std::int64_t>(E.field().modulus()) != 0; }

inline PointFp make_point(const CurveFp& E, std::int64_t x, std::int64_t y) {
  const PrimeField& F = E.field();
  PointFp P = E.point(F.from_int(x), F.from_int(y));
  if (!E.on_curve(P)) {
    throw std::invalid_argument("make_point: (" + std::to_string(x) + "," + std::to_string(y) + ") is not on the curve");
  }
  return P;
}

}  // namespace gsieve
