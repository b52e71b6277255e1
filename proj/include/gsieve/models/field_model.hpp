#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsieve/curve/place.hpp"
#include "gsieve/ec/curve.hpp"
#include "gsieve/endo/endo.hpp"
#include "gsieve/ff/factor.hpp"
#include "gsieve/ff/residue_field.hpp"
#include "gsieve/linalg/fp_matrix.hpp"

namespace gsieve {

enum class ModelKind { Kummer, ArtinSchreier, Torus, EllipticResidue };

inline const char* model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::Kummer: return "kummer";
    case ModelKind::ArtinSchreier: return "artin-schreier";
    case ModelKind::Torus: return "torus";
    case ModelKind::EllipticResidue: return "elliptic";
  }
  return "?";
}

enum class ModelErrorCode {
  UnsupportedDegree,
  InvalidGenerator,
  ReducibleModulus,
  SquareParameter,
  KernelNotCyclic,
  FiberReducible,
  TooLarge,
};

struct ModelError : std::invalid_argument {
  ModelErrorCode code;
  ModelError(ModelErrorCode c, const std::string& msg) : std::invalid_argument(msg), code(c) {}
};

/// u-coordinate on the norm-one torus; nullopt is the point at infinity (the unit element).
using TorusU = std::optional<Fp>;

/// u(P1 + P2) = (u1 u2 + D) / (u1 + u2).
inline TorusU torus_add(const PrimeField& F, TorusU u1, TorusU u2, Fp D) {
  if (!u1) return u2;
  if (!u2) return u1;
  Fp s = F.add(*u1, *u2);
  if (s.v == 0) return std::nullopt;
  return F.div(F.add(F.mul(*u1, *u2), D), s);
}

inline TorusU torus_neg(const PrimeField& F, TorusU u) {
  if (!u) return u;
  return F.neg(*u);
}

inline TorusU torus_mul(const PrimeField& F, std::int64_t n, TorusU u, Fp D) {
  if (n < 0) {
    n = -n;
    u = torus_neg(F, u);
  }
  TorusU r = std::nullopt;
  while (n) {
    if (n & 1) r = torus_add(F, r, u, D);
    n >>= 1;
    if (n) u = torus_add(F, u, u, D);
  }
  return r;
}

inline std::uint64_t torus_order(const PrimeField& F, TorusU u, Fp D) {
  const std::uint64_t n = F.modulus() + 1;
  std::uint64_t o = n;
  for (auto q : prime_factors(n)) {
    while (o % q == 0 && !torus_mul(F, static_cast<std::int64_t>(o / q), u, D)) o /= q;
  }
  return o;
}

/// a + a^p + ... + a^(p^(f-1)) for a in F_(p^f).
inline Fp absolute_trace(const ResidueField& K, const ResidueElem& a) {
  ResidueElem s = K.zero(), c = a;
  for (int i = 0; i < K.degree(); ++i) {
    s = K.add(s, c);
    c = K.frobenius(c);
  }
  auto v = K.as_fp(s);
  if (!v) throw std::logic_error("absolute_trace: sum of conjugates not in the prime field");
  return *v;
}

/// F_p[X]/(A) together with a description of how the Frobenius moves x.
class FieldModel {
 public:
  ModelKind kind() const noexcept { return kind_; }
  std::uint32_t p() const noexcept { return F_.modulus(); }
  int d() const noexcept { return K_.degree(); }
  const PrimeField& base() const noexcept { return F_; }
  const ResidueField& field() const noexcept { return K_; }
  const Poly& modulus() const noexcept { return K_.modulus(); }
  std::uint64_t m() const noexcept { return m_; }

  Fp zeta() const { return need(ModelKind::Kummer), zeta_; }
  Fp shift() const { return need(ModelKind::ArtinSchreier), shift_; }
  TorusU tau() const { return need(ModelKind::Torus), tau_; }
  Fp torus_D() const { return need(ModelKind::Torus), D_; }
  const CurveFp& curve() const { return need(ModelKind::EllipticResidue), *E_; }
  const PointFp& translation() const { return need(ModelKind::EllipticResidue), t_; }
  /// y-coordinate of the generic point of the fiber, as an element of the model.
  const ResidueElem& fiber_y() const { return need(ModelKind::EllipticResidue), yB_; }

  /// Image of x under the Frobenius predicted by the stored action.
  ResidueElem predicted_frobenius_x() const {
    const ResidueElem x = K_.gen();
    switch (kind_) {
      case ModelKind::Kummer: return K_.scale(x, zeta_);
      case ModelKind::ArtinSchreier: return K_.add(x, K_.from_fp(shift_));
      case ModelKind::Torus: {
        if (!tau_) return x;
        const ResidueElem t = K_.from_fp(*tau_);
        return K_.div(K_.add(K_.mul(t, x), K_.from_fp(D_)), K_.add(x, t));
      }
      case ModelKind::EllipticResidue: {
        CurveExt C = lift_curve(*E_, K_);
        auto P = C.point(x, yB_);
        auto T = t_.inf ? C.infinity() : C.point(K_.from_fp(t_.x), K_.from_fp(t_.y));
        auto S = C.add(P, T);
        if (S.inf) throw std::logic_error("predicted_frobenius_x: translate of the generic point is infinite");
        return S.x;
      }
    }
    return x;
  }

  /// The stored action agrees with x^p computed in F_p[X]/(A).
  bool certify() const {
    if (!(predicted_frobenius_x() == residue_pow(K_, K_.gen(), p()))) return false;
    if (kind_ == ModelKind::EllipticResidue) {
      CurveExt C = lift_curve(*E_, K_);
      auto P = C.point(K_.gen(), yB_);
      if (!C.on_curve(P)) return false;
      auto fP = C.point(K_.frobenius(P.x), K_.frobenius(P.y));
      auto T = t_.inf ? C.infinity() : C.point(K_.from_fp(t_.x), K_.from_fp(t_.y));
      return C.add(P, T) == fP;
    }
    return true;
  }

  /// Torus only: tau recovered from x^p (tau x + D)/(x + tau) mod A, i.e. tau = (D - x^(p+1)) / (x^p - x).
  TorusU tau_from_modulus() const {
    need(ModelKind::Torus);
    const ResidueElem x = K_.gen(), xp = K_.x_to_p();
    const ResidueElem den = K_.sub(xp, x);
    if (K_.is_zero(den)) return std::nullopt;
    auto t = K_.as_fp(K_.div(K_.sub(K_.from_fp(D_), K_.mul(xp, x)), den));
    if (!t) throw std::logic_error("tau_from_modulus: Frobenius is not a Moebius map of x");
    return t;
  }

  std::string action_string() const {
    std::ostringstream os;
    switch (kind_) {
      case ModelKind::Kummer: os << "scalar zeta = " << zeta_.v << "  (x^p = " << zeta_.v << "*x)"; break;
      case ModelKind::ArtinSchreier: os << "shift n = " << shift_.v << "  (x^p = x + " << shift_.v << ")"; break;
      case ModelKind::Torus:
        if (tau_) {
          os << "moebius tau = " << tau_->v << ", D = " << D_.v << "  (x^p = (" << tau_->v << "*x + " << D_.v << ")/(x + "
             << tau_->v << "))";
        } else {
          os << "moebius tau = inf  (x^p = x)";
        }
        break;
      case ModelKind::EllipticResidue: os << "translation t = " << E_->to_string(t_); break;
    }
    return os.str();
  }

  std::string report() const {
    std::ostringstream os;
    os << "model " << model_kind_name(kind_) << "\n";
    os << "  p = " << p() << ", d = " << d();
    if (m_) os << ", m = " << m_;
    os << "\n";
    if (kind_ == ModelKind::EllipticResidue) os << "  curve " << weierstrass_string() << "\n";
    os << "  A = " << modulus().to_string("X") << "\n";
    os << "  A coefficients (high to low) =";
    for (int i = modulus().degree(); i >= 0; --i) os << ' ' << modulus()[static_cast<std::size_t>(i)].v;
    os << "\n";
    if (kind_ == ModelKind::EllipticResidue) os << "  y = " << K_.to_string(yB_) << " mod A\n";
    os << "  action " << action_string() << "\n";
    os << "  certificate " << (certify() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }

 private:
  FieldModel(ModelKind k, const Poly& A) : kind_(k), F_(A.field()), K_(A) {}

  void need(ModelKind k) const {
    if (kind_ != k) throw std::logic_error(std::string("FieldModel: not a ") + model_kind_name(k) + " model");
  }

  std::string weierstrass_string() const {
    std::ostringstream os;
    os << "[a1,a2,a3,a4,a6] = [" << E_->a1().v << "," << E_->a2().v << "," << E_->a3().v << "," << E_->a4().v << ","
       << E_->a6().v << "]";
    return os.str();
  }

  ModelKind kind_;
  PrimeField F_;
  ResidueField K_;
  std::uint64_t m_ = 0;
  Fp zeta_{}, shift_{}, D_{};
  TorusU tau_;
  std::optional<CurveFp> E_;
  PointFp t_{};
  ResidueElem yB_{Poly(F_)};
  std::vector<PointFp> points_;

  friend FieldModel kummer_model(std::uint32_t, int, std::int64_t);
  friend FieldModel artin_schreier_model(std::uint32_t, std::int64_t);
  friend FieldModel torus_model(std::uint32_t, int, std::int64_t, std::int64_t);
  friend FieldModel finish_elliptic_model(const CurveFp&, const Poly&, const Poly&, const std::vector<PointFp>&);
  friend int model_degree(const ResidueElem&, const FieldModel&);
};

/// X^d - a with Frobenius x -> zeta x, zeta = a^((p-1)/d).
inline FieldModel kummer_model(std::uint32_t p, int d, std::int64_t a) {
  if (d < 1) throw ModelError(ModelErrorCode::UnsupportedDegree, "kummer: d must be positive");
  if ((p - 1) % static_cast<std::uint32_t>(d) != 0) {
    throw ModelError(ModelErrorCode::UnsupportedDegree, "kummer: d = " + std::to_string(d) + " does not divide p - 1");
  }
  PrimeField F(p);
  const Fp av = F.from_int(a);
  if (av.v == 0) throw ModelError(ModelErrorCode::InvalidGenerator, "kummer: a = 0");
  Poly A = Poly::monomial(F, Fp{1}, static_cast<std::size_t>(d)) - Poly::constant(F, av);
  if (!is_irreducible(A)) {
    throw ModelError(ModelErrorCode::InvalidGenerator, "kummer: X^d - a is reducible, a is not a valid generator");
  }
  FieldModel M(ModelKind::Kummer, A);
  M.m_ = (p - 1) / static_cast<std::uint32_t>(d);
  M.zeta_ = F.pow(av, M.m_);
  return M;
}

/// X^p - X - a over F_p with Frobenius x -> x + a.
inline FieldModel artin_schreier_model(std::uint32_t p, std::int64_t a) {
  PrimeField F(p);
  const Fp av = F.from_int(a);
  if (av.v == 0) throw ModelError(ModelErrorCode::ReducibleModulus, "artin-schreier: a = 0 makes X^p - X split");
  Poly A = Poly::monomial(F, Fp{1}, p) - Poly::X(F) - Poly::constant(F, av);
  FieldModel M(ModelKind::ArtinSchreier, A);
  M.shift_ = av;
  return M;
}

/// Torus model of degree d | p + 1 with parameter D (non-square) and generator u_a.
inline FieldModel torus_model(std::uint32_t p, int d, std::int64_t D, std::int64_t ua) {
  if (d < 1 || (p + 1) % static_cast<std::uint32_t>(d) != 0) {
    throw ModelError(ModelErrorCode::UnsupportedDegree, "torus: d = " + std::to_string(d) + " does not divide p + 1");
  }
  PrimeField F(p);
  const Fp Dv = F.from_int(D);
  if (Dv.v == 0 || F.is_square(Dv)) throw ModelError(ModelErrorCode::SquareParameter, "torus: D must be a non-square");
  const Fp u = F.from_int(ua);
  // a must generate G/[d]G: for each prime l | d, a is not an l-th multiple in the cyclic group of order p + 1
  for (auto l : prime_factors(static_cast<std::uint64_t>(d))) {
    if (!torus_mul(F, static_cast<std::int64_t>((p + 1) / l), u, Dv)) {
      throw ModelError(ModelErrorCode::InvalidGenerator, "torus: u_a is an " + std::to_string(l) + "-th multiple, X is not generic");
    }
  }
  // A(X) = sum C(d,2k) D^k X^(d-2k) - u_a sum C(d,2k+1) D^k X^(d-2k-1)
  std::vector<Fp> c(static_cast<std::size_t>(d) + 1);
  Fp binom{1}, Dk{1};
  for (int j = 0; j <= d; ++j) {
    if (j > 0) binom = F.div(F.mul(binom, F.from_int(d - j + 1)), F.from_int(j));
    if (j > 1 && j % 2 == 0) Dk = F.mul(Dk, Dv);
    const Fp term = F.mul(binom, Dk);
    if (j % 2 == 0) {
      c[static_cast<std::size_t>(d - j)] = F.add(c[static_cast<std::size_t>(d - j)], term);
    } else {
      c[static_cast<std::size_t>(d - j)] = F.sub(c[static_cast<std::size_t>(d - j)], F.mul(u, term));
    }
  }
  Poly A(F, c);
  if (!is_irreducible(A)) throw ModelError(ModelErrorCode::ReducibleModulus, "torus: A(X) is reducible");
  FieldModel M(ModelKind::Torus, A);
  M.m_ = (p + 1) / static_cast<std::uint32_t>(d);
  M.D_ = Dv;
  M.tau_ = torus_mul(F, -static_cast<std::int64_t>(M.m_), u, Dv);
  return M;
}

/// Common tail of the elliptic constructors: A is the x-polynomial of the fiber, y the y-coordinate mod A,
/// ker the candidate translations.
inline FieldModel finish_elliptic_model(const CurveFp& E, const Poly& A, const Poly& y, const std::vector<PointFp>& ker) {
  FieldModel M(ModelKind::EllipticResidue, A);
  const ResidueField& K = M.K_;
  M.E_ = E;
  M.yB_ = K.reduce(y);
  M.points_ = ec_points(E);
  CurveExt C = lift_curve(E, K);
  auto P = C.point(K.gen(), M.yB_);
  if (!C.on_curve(P)) throw std::logic_error("elliptic model: generic point is not on the curve");
  auto fP = C.point(K.frobenius(P.x), K.frobenius(P.y));
  for (auto& t : ker) {
    auto T = t.inf ? C.infinity() : C.point(K.from_fp(t.x), K.from_fp(t.y));
    if (C.add(P, T) == fP) {
      M.t_ = t;
      return M;
    }
  }
  throw std::logic_error("elliptic model: no kernel point realizes the Frobenius");
}

namespace detail {

/// #E(F_(p^k)) from the trace over F_p.
inline std::uint64_t curve_order_ext(std::uint64_t p, std::int64_t t, int k) {
  __int128 s0 = 2, s1 = t, q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  for (int i = 1; i < k; ++i) {
    __int128 s2 = t * s1 - static_cast<__int128>(p) * s0;
    s0 = s1;
    s1 = s2;
  }
  if (k == 0) s1 = 2;
  return static_cast<std::uint64_t>(q + 1 - s1);
}

}  // namespace detail

/// Residue field at the fiber of phi - 1 above the rational point a; the kernel is E(F_p), d = #E(F_p).
/// Works for any Weierstrass equation.
inline FieldModel elliptic_residue_model(const CurveFp& E, const PointFp& a, std::uint64_t seed = kDefaultSeed) {
  const PrimeField& F = E.field();
  auto pts = ec_points(E);
  const std::uint64_t d = pts.size();
  if (d < 2) throw ModelError(ModelErrorCode::UnsupportedDegree, "elliptic: #E(F_p) < 2");
  bool cyclic = false;
  for (auto& P : pts) cyclic = cyclic || E.order(P, d) == d;
  if (!cyclic) throw ModelError(ModelErrorCode::KernelNotCyclic, "elliptic: E(F_p) is not cyclic");
  if (!E.on_curve(a) || E.order(a, d) != d) {
    throw ModelError(ModelErrorCode::InvalidGenerator, "elliptic: a does not generate E(F_p)");
  }
  double bits = static_cast<double>(d) * std::log2(static_cast<double>(F.modulus()));
  if (bits > 60) throw ModelError(ModelErrorCode::TooLarge, "elliptic: p^d too large for this constructor");
  // a fiber point lies in the d-primary part of E(F_(p^d)); search it there
  ResidueField L = standard_extension(F, static_cast<int>(d));
  CurveExt C = lift_curve(E, L);
  const std::uint64_t N = detail::curve_order_ext(F.modulus(), ec_trace(E), static_cast<int>(d));
  std::uint64_t m = N, lpart = 1;
  for (auto q : prime_factors(d)) {
    while (m % q == 0) {
      m /= q;
      lpart *= q;
    }
  }
  const auto A_ext = C.point(L.from_fp(a.x), L.from_fp(a.y));
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    auto cand = C.lift_x(L.random(rng));
    if (cand.empty()) continue;
    auto G = C.mul(static_cast<std::int64_t>(m), cand[0]);
    auto X = C.infinity();
    for (std::uint64_t j = 0; j < lpart; ++j, X = C.add(X, G)) {
      if (X.inf) continue;
      auto fX = C.point(L.frobenius(X.x), L.frobenius(X.y));
      if (!(C.sub(fX, X) == A_ext)) continue;
      Poly A = min_poly(L, X.x);
      if (A.degree() != static_cast<int>(d)) {
        throw ModelError(ModelErrorCode::FiberReducible, "elliptic: fiber is reducible");
      }
      // pick the y-root that lies over a rather than -a
      ResidueField K(A);
      CurveExt CK = lift_curve(E, K);
      for (auto& P : CK.lift_x(K.gen())) {
        auto fP = CK.point(K.frobenius(P.x), K.frobenius(P.y));
        if (CK.sub(fP, P) == CK.point(K.from_fp(a.x), K.from_fp(a.y))) return finish_elliptic_model(E, A, P.y, pts);
      }
      throw std::logic_error("elliptic: no y-root lies over a");
    }
  }
  throw std::logic_error("elliptic: fiber point not found");
}

/// Residue field at the fiber I^(-1)(a) for an endomorphism I of a short Weierstrass curve.
inline FieldModel elliptic_residue_model(const EndoRing& R, QuadEndo I, const PointFp& a) {
  const CurveFp& E = R.curve();
  const auto ker = R.kernel(I);
  const std::uint64_t d = ker.size();
  bool cyclic = false;
  for (auto& P : ker) cyclic = cyclic || E.order(P, d) == d;
  if (!cyclic) throw ModelError(ModelErrorCode::KernelNotCyclic, "elliptic: Ker I is not cyclic");
  Place B = [&] {
    try {
      return R.isogeny_fiber_place(I, a);
    } catch (const std::invalid_argument& e) {
      throw ModelError(ModelErrorCode::FiberReducible, std::string("elliptic: ") + e.what());
    }
  }();
  if (B.is_infinite() || B.kind == PlaceKind::Inert) {
    throw ModelError(ModelErrorCode::FiberReducible, "elliptic: fiber place has no affine x-model");
  }
  const Poly y = B.kind == PlaceKind::Ramified ? Poly(E.field()) : B.lambda;
  return finish_elliptic_model(E, B.h, y, ker);
}

/// Least k with z = (u_0 + ... + u_k x^k)/(v_0 + ... + v_k x^k); returns the first null-space vector
/// (u_0..u_k, v_0..v_k) or nullopt if z is not in V_k.
inline std::optional<std::vector<Fp>> torus_representation(const ResidueField& K, const ResidueElem& z, int k) {
  const int d = K.degree();
  const std::size_t cols = 2 * static_cast<std::size_t>(k) + 2;
  FpMatrix M(static_cast<std::size_t>(d), std::vector<Fp>(cols));
  ResidueElem xi = K.one(), zxi = z;
  const ResidueElem x = K.gen();
  for (int i = 0; i <= k; ++i) {
    for (int r = 0; r < d; ++r) {
      M[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = xi[static_cast<std::size_t>(r)];
      M[static_cast<std::size_t>(r)][static_cast<std::size_t>(k + 1 + i)] = K.base().neg(zxi[static_cast<std::size_t>(r)]);
    }
    xi = K.mul(xi, x);
    zxi = K.mul(zxi, x);
  }
  auto ns = nullspace(K.base(), M, cols);
  if (ns.empty()) return std::nullopt;
  return ns.front();
}

namespace detail {

/// Residues at the fiber of a basis of L((k-1)O + Q) (Q affine) or L(kO) (Q infinite), k >= 2.
inline std::vector<ResidueElem> riemann_roch_basis(const ResidueField& K, const CurveFp& E, const ResidueElem& yB,
                                                   const PointFp& Q, int k) {
  const PrimeField& F = E.field();
  const ResidueElem x = K.gen();
  const int w = Q.inf ? k : k - 1;
  std::vector<ResidueElem> out;
  ResidueElem xi = K.one();
  for (int i = 0; 2 * i <= w; ++i) {
    out.push_back(xi);
    if (2 * i + 3 <= w) out.push_back(K.mul(xi, yB));
    xi = K.mul(xi, x);
  }
  if (!Q.inf) {
    // (y - y(-Q)) / (x - x(Q)) has poles exactly at Q and O
    const Fp ymq = F.sub(F.neg(Q.y), F.add(F.mul(E.a1(), Q.x), E.a3()));
    out.push_back(K.div(K.sub(yB, K.from_fp(ymq)), K.sub(x, K.from_fp(Q.x))));
  }
  return out;
}

inline bool in_span_ratio(const ResidueField& K, const std::vector<ResidueElem>& basis, const ResidueElem& z) {
  const int d = K.degree();
  const std::size_t n = basis.size();
  if (2 * n > static_cast<std::size_t>(d)) return true;
  FpMatrix M(static_cast<std::size_t>(d), std::vector<Fp>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    const ResidueElem zb = K.mul(z, basis[i]);
    for (int r = 0; r < d; ++r) {
      M[static_cast<std::size_t>(r)][i] = basis[i][static_cast<std::size_t>(r)];
      M[static_cast<std::size_t>(r)][n + i] = zb[static_cast<std::size_t>(r)];
    }
  }
  return rank(K.base(), std::move(M)) < 2 * n;
}

}  // namespace detail

/// Galois-invariant degree of z in the model.
///   Kummer, Artin-Schreier: degree of the reduced polynomial.
///   Torus: least k with z a ratio of two polynomials of degree <= k in x.
///   Elliptic: least k such that z is the residue of a function with at most k poles; such a function is
///   g/h with g, h in L((k-1)O + Q) for a rational Q, one Q per divisor class of degree k.
inline int model_degree(const ResidueElem& z, const FieldModel& M) {
  const ResidueField& K = M.field();
  const int d = K.degree();
  if (z.degree() <= 0) return 0;
  switch (M.kind()) {
    case ModelKind::Kummer:
    case ModelKind::ArtinSchreier: return z.degree();
    case ModelKind::Torus:
      for (int k = 1; k < d; ++k) {
        if (torus_representation(K, z, k)) return k;
      }
      return d - 1;
    case ModelKind::EllipticResidue:
      for (int k = 2; k < d; ++k) {
        for (auto& Q : M.points_) {
          if (detail::in_span_ratio(K, detail::riemann_roch_basis(K, *M.E_, M.yB_, Q, k), z)) return k;
        }
      }
      return d;
  }
  return d;
}

/// Number of elements of each torus degree over the whole field, by enumerating the ratios of
/// degree k < ceil((d-1)/2); every remaining element has degree ceil((d-1)/2) because 2k + 2 > d
/// unknowns always leave a nonzero solution with a nonzero denominator.
inline std::vector<std::uint64_t> torus_degree_histogram(const FieldModel& M) {
  if (M.kind() != ModelKind::Torus) throw std::invalid_argument("torus_degree_histogram: not a torus model");
  const ResidueField& K = M.field();
  const PrimeField& F = K.base();
  const int d = K.degree();
  const std::uint64_t q = K.order();
  if (std::log2(static_cast<double>(q)) > 34) throw ModelError(ModelErrorCode::TooLarge, "torus_degree_histogram: field too large");
  const int kmax = d / 2;  // ceil((d-1)/2)
  std::vector<std::int8_t> deg(q, -1);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(kmax) + 1, 0);
  const std::uint32_t p = F.modulus();
  for (int k = 0; k < kmax; ++k) {
    std::uint64_t nk = 1;
    for (int i = 0; i <= k; ++i) nk *= p;
    std::vector<Fp> c(static_cast<std::size_t>(k) + 1);
    auto poly_of = [&](std::uint64_t idx) {
      for (auto& x : c) {
        x = Fp{static_cast<std::uint32_t>(idx % p)};
        idx /= p;
      }
      return Poly(F, c);
    };
    for (std::uint64_t vi = 1; vi < nk; ++vi) {
      Poly V = poly_of(vi);
      if (!V.is_monic()) continue;  // ratios are invariant under scaling, keep monic denominators
      const ResidueElem Vinv = K.inv(V);
      for (std::uint64_t ui = 0; ui < nk; ++ui) {
        const std::uint64_t idx = K.index_of(K.mul(poly_of(ui), Vinv));
        if (deg[idx] < 0) {
          deg[idx] = static_cast<std::int8_t>(k);
          ++hist[static_cast<std::size_t>(k)];
        }
      }
    }
  }
  std::uint64_t rest = 0;
  for (auto v : deg) rest += v < 0;
  hist[static_cast<std::size_t>(kmax)] = rest;
  return hist;
}

}  // namespace gsieve
