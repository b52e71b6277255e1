#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsieve/curve/function_field.hpp"
#include "gsieve/curve/place.hpp"
#include "gsieve/ec/curve.hpp"
#include "gsieve/ff/factor.hpp"
#include "gsieve/ff/ratfunc.hpp"

namespace gsieve {

/// Evaluate a rational function with F_p coefficients at an element of K; nullopt at a pole.
template <class Field>
std::optional<typename Field::Elem> eval_rat(const Field& K, const RatFunc& r, const typename Field::Elem& x) {
  auto horner = [&](const Poly& p) {
    auto acc = K.zero();
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = K.add(K.mul(acc, x), K.from_fp(c[i]));
    return acc;
  };
  auto d = horner(r.den());
  if (K.is_zero(d)) return std::nullopt;
  return K.div(horner(r.num()), d);
}

/// Explicit isogeny beta: (x, y) -> (X(x), y Y(x)) on y^2 = f(x), with beta^2 - tr beta + N = 0.
struct BaseIsogeny {
  RatFunc xmap;
  RatFunc yfac;
  std::int64_t trace = 0;
  std::int64_t norm = 1;

  /// The p-power Frobenius (x^p, y f^((p-1)/2)).
  static BaseIsogeny frobenius(const CurveFp& E) {
    const PrimeField& F = E.field();
    const Poly f = curve_poly(E);
    Poly yf = Poly::one(F);
    for (std::uint32_t i = 0; i < (F.modulus() - 1) / 2; ++i) yf *= f;
    return {RatFunc(Poly::monomial(F, Fp{1}, F.modulus())), RatFunc(yf), ec_trace(E),
            static_cast<std::int64_t>(F.modulus())};
  }
};

/// u + v beta in the quadratic order generated by beta.
struct QuadEndo {
  std::int64_t u = 0;
  std::int64_t v = 0;

  friend bool operator==(const QuadEndo&, const QuadEndo&) = default;
};

/// Images of the generic point: xi(x, y) = (X(x), y Y(x)).
struct SymbolicMap {
  RatFunc X;
  RatFunc Y;
};

/// Endomorphisms u + v beta of a curve y^2 = f(x) over F_p.
class EndoRing {
 public:
  EndoRing(CurveFp E, BaseIsogeny beta) : E_(std::move(E)), f_(curve_poly(E_)), beta_(std::move(beta)) {}

  const CurveFp& curve() const noexcept { return E_; }
  const Poly& f() const noexcept { return f_; }
  const BaseIsogeny& beta() const noexcept { return beta_; }

  std::int64_t norm(QuadEndo a) const { return a.u * a.u + beta_.trace * a.u * a.v + beta_.norm * a.v * a.v; }
  std::int64_t trace(QuadEndo a) const { return 2 * a.u + a.v * beta_.trace; }
  /// Product in the order, using beta^2 = tr beta - N.
  QuadEndo mul(QuadEndo a, QuadEndo b) const {
    return {a.u * b.u - beta_.norm * a.v * b.v, a.u * b.v + a.v * b.u + beta_.trace * a.v * b.v};
  }
  QuadEndo add(QuadEndo a, QuadEndo b) const { return {a.u + b.u, a.v + b.v}; }
  QuadEndo neg(QuadEndo a) const { return {-a.u, -a.v}; }
  QuadEndo conj(QuadEndo a) const { return {a.u + beta_.trace * a.v, -a.v}; }

  template <class Field>
  ECPoint<typename Field::Elem> apply_beta(const Curve<Field>& C, const ECPoint<typename Field::Elem>& P) const {
    if (P.inf) return P;
    const Field& K = C.field();
    auto X = eval_rat(K, beta_.xmap, P.x);
    if (!X) return C.infinity();
    auto Y = eval_rat(K, beta_.yfac, P.x);
    if (!Y) return C.infinity();
    return C.point(*X, K.mul(P.y, *Y));
  }

  template <class Field>
  ECPoint<typename Field::Elem> eval(const Curve<Field>& C, QuadEndo a, const ECPoint<typename Field::Elem>& P) const {
    auto r = C.mul(a.u, P);
    if (a.v != 0) r = C.add(r, C.mul(a.v, apply_beta(C, P)));
    return r;
  }
  PointFp eval(QuadEndo a, const PointFp& P) const { return eval(E_, a, P); }

  /// Rational kernel points, sorted.
  std::vector<PointFp> kernel(QuadEndo a) const {
    std::vector<PointFp> out;
    for (auto& P : ec_points(E_)) {
      if (eval(a, P).inf) out.push_back(P);
    }
    return out;
  }

  /// Symbolic coordinate maps of a nonzero endomorphism.
  SymbolicMap symbolic(QuadEndo a) const {
    if (a.u == 0 && a.v == 0) throw std::invalid_argument("symbolic: zero endomorphism");
    auto key = std::make_pair(a.u, a.v);
    {
      std::lock_guard<std::mutex> lock(*mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    CurveFF C = generic_curve(E_);
    const FunctionField& K = C.field();
    auto R = eval(C, a, C.point(K.x(), K.y()));
    if (R.inf || !R.x.b.is_zero() || !R.y.a.is_zero()) {
      throw std::logic_error("symbolic: image of the generic point has an unexpected shape");
    }
    SymbolicMap m{R.x.a, R.y.b};
    std::lock_guard<std::mutex> lock(*mu_);
    cache_.emplace(key, m);
    return m;
  }

  RatFunc xmap(QuadEndo a) const { return symbolic(a).X; }

  /// Checks that xi acts as the p-power Frobenius on E(F_p) and on sampled points over F_{p^2},
  /// and that its trace and norm match the curve.
  bool frobenius_certify(QuadEndo phi, int samples = 100, std::uint64_t seed = kDefaultSeed) const {
    const std::int64_t p = E_.field().modulus();
    if (norm(phi) != p || trace(phi) != ec_trace(E_)) return false;
    for (auto& P : ec_points(E_)) {
      if (!(eval(phi, P) == P)) return false;
    }
    ResidueField K = standard_extension(E_.field(), 2);
    CurveExt C = lift_curve(E_, K);
    std::mt19937_64 rng(seed);
    int done = 0;
    while (done < samples) {
      auto pts = C.lift_x(K.random(rng));
      if (pts.empty()) continue;
      const auto& P = pts[0];
      auto expect = C.point(K.frobenius(P.x), K.frobenius(P.y));
      if (!(eval(C, phi, P) == expect)) return false;
      ++done;
    }
    return true;
  }

  /// Pullback of the place through a geometric point S (coordinates in K) under P -> xi(P) + T.
  /// All places in the fiber have multiplicity one since separable isogenies are unramified.
  Divisor pullback(QuadEndo xi, const PointFp& T, const ResidueField& K, const CurveExt::Point& S,
                   std::uint64_t seed = kDefaultSeed) const {
    CurveExt C = lift_curve(E_, K);
    CurveExt::Point Tk = T.inf ? C.infinity() : C.point(K.from_fp(T.x), K.from_fp(T.y));
    CurveExt::Point Sp = C.sub(S, Tk);
    SymbolicMap m = symbolic(xi);
    const PrimeField& F = E_.field();
    Divisor D;
    const int target_degree = S.inf ? 1 : orbit_length(K, S);
    if (Sp.inf) {
      D.add(Place::infinite(F), 1);
      if (m.X.den().degree() > 0) {
        for (auto& t : poly_factor(m.X.den(), seed).terms) {
          const Poly& h = t.factor;
          Poly fh = f_ % h;
          if (fh.is_zero()) {
            D.add(Place::ramified(h), 1);
          } else if (auto r = ResidueField(h).sqrt(fh)) {
            D.add(Place::split(h, *r), 1);
            D.add(Place::split(h, -*r), 1);
          } else {
            D.add(Place::inert(h), 1);
          }
        }
      }
    } else {
      Poly mp = min_poly(K, Sp.x);
      const int e = mp.degree();
      const bool symmetric = Sp.y.is_zero() || e < orbit_length(K, Sp);
      std::optional<Poly> G;
      if (!symmetric) {
        G = express_in_powers(K, Sp.x, Sp.y);
        if (!G) throw std::logic_error("pullback: y is not a polynomial in x");
      }
      // N(x) = Xd^e * mp(Xn / Xd)
      const Poly& Xn = m.X.num();
      const Poly& Xd = m.X.den();
      Poly N(F), pw = Poly::one(F);
      std::vector<Poly> dpw{Poly::one(F)};
      for (int i = 1; i <= e; ++i) dpw.push_back(dpw.back() * Xd);
      for (int i = 0; i <= e; ++i) {
        N += (pw * dpw[e - i]).scaled(mp[i]);
        pw *= Xn;
      }
      for (auto& t : poly_factor(N, seed).terms) {
        const Poly& h = t.factor;
        ResidueField Kh(h);
        Poly xv = mulmod(Xn % h, invmod(Xd % h, h), h);
        Poly yv = m.Y.den().is_one() ? m.Y.num() % h : mulmod(m.Y.num() % h, invmod(m.Y.den() % h, h), h);
        Poly gv = G ? compose_mod(*G, xv, h) : Poly(F);
        Poly fh = f_ % h;
        if (fh.is_zero()) {
          if (symmetric || gv.is_zero()) D.add(Place::ramified(h), 1);
        } else if (auto r = Kh.sqrt(fh)) {
          for (const Poly& lam : {*r, Kh.neg(*r)}) {
            if (symmetric || mulmod(lam, yv, h) == gv) D.add(Place::split(h, lam), 1);
          }
        } else if (symmetric) {
          D.add(Place::inert(h), 1);
        }
      }
    }
    if (D.degree() != norm(xi) * target_degree) {
      std::ostringstream os;
      os << "pullback: fiber degree " << D.degree() << " differs from " << norm(xi) * target_degree;
      throw std::logic_error(os.str());
    }
    return D;
  }

  /// Pullback of a place under P -> xi(P) + T.
  Divisor pullback(QuadEndo xi, const PointFp& T, const Place& Q, std::uint64_t seed = kDefaultSeed) const {
    if (Q.is_infinite()) {
      ResidueField K(Poly::X(E_.field()));
      return pullback(xi, T, K, lift_curve(E_, K).infinity(), seed);
    }
    auto pp = point_of_place(Q, f_);
    return pullback(xi, T, pp.K, pp.pt, seed);
  }

  /// Pullback of a divisor under P -> xi(P) + T.
  Divisor pullback(QuadEndo xi, const PointFp& T, const Divisor& D, std::uint64_t seed = kDefaultSeed) const {
    Divisor r;
    for (auto& [Q, mult] : D.terms()) r += mult * pullback(xi, T, Q, seed);
    return r;
  }

  /// The fiber xi^{-1}(R) as a single place of degree norm(xi); throws if the fiber splits.
  Place isogeny_fiber_place(QuadEndo xi, const PointFp& R) const {
    ResidueField K(Poly::X(E_.field()));
    CurveExt C = lift_curve(E_, K);
    auto S = R.inf ? C.infinity() : C.point(K.from_fp(R.x), K.from_fp(R.y));
    Divisor D = pullback(xi, E_.infinity(), K, S);
    if (D.terms().size() != 1) {
      std::ostringstream os;
      os << "isogeny_fiber_place: fiber is reducible, place degrees";
      for (auto& [P, m] : D.terms()) os << ' ' << P.degree();
      throw std::invalid_argument(os.str());
    }
    return D.terms().begin()->first;
  }

 private:
  CurveFp E_;
  Poly f_;
  BaseIsogeny beta_;
  mutable std::map<std::pair<std::int64_t, std::int64_t>, SymbolicMap> cache_;
  std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
};

}  // namespace gsieve
