#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsieve/ec/curve.hpp"
#include "gsieve/ff/ext_poly.hpp"
#include "gsieve/ff/factor.hpp"
#include "gsieve/ff/residue_field.hpp"

namespace gsieve {

/// Right-hand side f(x) of y^2 = f(x); requires a1 = a3 = 0.
inline Poly curve_poly(const CurveFp& E) {
  if (!E.field().is_zero(E.a1()) || !E.field().is_zero(E.a3())) {
    throw std::invalid_argument("curve_poly: only curves y^2 = f(x) are supported");
  }
  return Poly(E.field(), {E.a6(), E.a4(), E.a2(), Fp{1}});
}

enum class PlaceKind { Infinite = 0, Split = 1, Ramified = 2, Inert = 3 };

/// A place of the function field of y^2 = f(x).
///
/// Split: (h(x), y - lambda(x)) with lambda^2 = f mod h and lambda != 0 mod h.
/// Ramified: (h(x), y) with h | f. Inert: the unique place above h when f is a
/// non-square mod h; its degree is 2 deg h. Infinite: the point at infinity.
struct Place {
  PlaceKind kind;
  Poly h;
  Poly lambda;

  static Place infinite(PrimeField F) { return {PlaceKind::Infinite, Poly::one(F), Poly(F)}; }
  /// (h, y - lambda); lambda = 0 mod h gives the ramified place.
  static Place split(Poly h, Poly lambda) {
    lambda = lambda % h;
    if (lambda.is_zero()) return ramified(std::move(h));
    return {PlaceKind::Split, std::move(h), std::move(lambda)};
  }
  static Place ramified(Poly h) {
    PrimeField F = h.field();
    return {PlaceKind::Ramified, std::move(h), Poly(F)};
  }
  static Place inert(Poly h) {
    PrimeField F = h.field();
    return {PlaceKind::Inert, std::move(h), Poly(F)};
  }

  bool is_infinite() const noexcept { return kind == PlaceKind::Infinite; }
  int degree() const noexcept {
    switch (kind) {
      case PlaceKind::Infinite: return 1;
      case PlaceKind::Inert: return 2 * h.degree();
      default: return h.degree();
    }
  }

  /// The conjugate place under y -> -y.
  Place conjugate() const {
    if (kind != PlaceKind::Split) return *this;
    return split(h, -lambda);
  }

  /// Printed form, e.g. "(x^2 + x + 52, y + 10*x + 37)" or "(1/x, y/x^2)".
  std::string to_string(std::string_view xv = "x", std::string_view yv = "y") const {
    std::ostringstream os;
    switch (kind) {
      case PlaceKind::Infinite:
        os << "(1/" << xv << ", " << yv << "/" << xv << "^2)";
        break;
      case PlaceKind::Split: {
        Poly m = -lambda;
        os << "(" << h.to_string(xv) << ", " << yv;
        if (!m.is_zero()) os << " + " << m.to_string(xv);
        os << ")";
        break;
      }
      case PlaceKind::Ramified:
        os << "(" << h.to_string(xv) << ", " << yv << ")";
        break;
      case PlaceKind::Inert:
        os << "(" << h.to_string(xv) << ", " << yv << "^2)";
        break;
    }
    return os.str();
  }

  friend bool operator==(const Place& a, const Place& b) {
    return a.kind == b.kind && a.h == b.h && a.lambda == b.lambda;
  }
  /// Canonical order: degree, then h (highest coefficient first), then kind, then lambda.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.is_infinite() != b.is_infinite()) return a.is_infinite();
    if (!(a.h == b.h)) return poly_less(a.h, b.h);
    if (a.kind != b.kind) return a.kind < b.kind;
    return poly_less(a.lambda, b.lambda);
  }
};

/// Inert places print with the defining relation y^2 - f(x) mod h.
inline std::string place_str(const Place& P, const Poly& f, std::string_view xv = "x", std::string_view yv = "y") {
  if (P.kind != PlaceKind::Inert) return P.to_string(xv, yv);
  Poly m = -(f % P.h);
  std::string s = "(" + P.h.to_string(xv) + ", " + std::string(yv) + "^2";
  if (!m.is_zero()) s += " + " + m.to_string(xv);
  return s + ")";
}

/// Formal sum of places with integer multiplicities.
class Divisor {
 public:
  using Map = std::map<Place, long>;

  Divisor() = default;
  static Divisor of(const Place& P, long m = 1) {
    Divisor D;
    D.add(P, m);
    return D;
  }

  void add(const Place& P, long m) {
    if (m == 0) return;
    auto it = terms_.find(P);
    if (it == terms_.end()) {
      terms_.emplace(P, m);
    } else if ((it->second += m) == 0) {
      terms_.erase(it);
    }
  }
  Divisor& operator+=(const Divisor& o) {
    for (auto& [P, m] : o.terms_) add(P, m);
    return *this;
  }
  Divisor& operator-=(const Divisor& o) {
    for (auto& [P, m] : o.terms_) add(P, -m);
    return *this;
  }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(long k, const Divisor& a) {
    Divisor r;
    if (k == 0) return r;
    for (auto& [P, m] : a.terms_) r.terms_.emplace(P, k * m);
    return r;
  }
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }

  const Map& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  long mult(const Place& P) const {
    auto it = terms_.find(P);
    return it == terms_.end() ? 0 : it->second;
  }
  long degree() const {
    long d = 0;
    for (auto& [P, m] : terms_) d += m * P.degree();
    return d;
  }
  bool is_effective() const {
    for (auto& [P, m] : terms_) {
      if (m < 0) return false;
    }
    return true;
  }
  Divisor positive_part() const {
    Divisor r;
    for (auto& [P, m] : terms_) {
      if (m > 0) r.terms_.emplace(P, m);
    }
    return r;
  }
  Divisor negative_part() const {
    Divisor r;
    for (auto& [P, m] : terms_) {
      if (m < 0) r.terms_.emplace(P, -m);
    }
    return r;
  }
  /// Drop the infinite place.
  Divisor finite_part() const {
    Divisor r;
    for (auto& [P, m] : terms_) {
      if (!P.is_infinite()) r.terms_.emplace(P, m);
    }
    return r;
  }
  int max_place_degree() const {
    int d = 0;
    for (auto& [P, m] : terms_) d = std::max(d, P.degree());
    return d;
  }

  std::string to_string(std::string_view xv = "x", std::string_view yv = "y") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [P, m] : terms_) {
      long a = m < 0 ? -m : m;
      if (first) {
        if (m < 0) os << "-";
      } else {
        os << (m < 0 ? " - " : " + ");
      }
      first = false;
      if (a != 1) os << a << ' ';
      os << P.to_string(xv, yv);
    }
    return os.str();
  }

 private:
  Map terms_;
};

/// Residue field of a place together with the coordinates of one of its geometric points.
struct PlacePoint {
  ResidueField K;
  CurveExt::Point pt;
};

/// F_{p^k} built from the least irreducible polynomial of degree k.
inline ResidueField standard_extension(PrimeField F, int k) { return ResidueField(first_irreducible(F, k)); }

/// A geometric point of a finite place, with coordinates in its residue field.
inline PlacePoint point_of_place(const Place& P, const Poly& f) {
  const PrimeField& F = f.field();
  switch (P.kind) {
    case PlaceKind::Split:
    case PlaceKind::Ramified: {
      ResidueField K(P.h);
      return {K, CurveExt::Point{false, K.gen(), K.reduce(P.lambda)}};
    }
    case PlaceKind::Inert: {
      ResidueField K = standard_extension(F, P.degree());
      auto xs = poly_roots_ext(P.h, K);
      if (xs.empty()) throw std::logic_error("point_of_place: no root of h in the residue field");
      ExtPoly fe = ExtPoly::lift(K, f);
      auto ys = K.sqrt(fe.eval(xs[0]));
      if (!ys) throw std::logic_error("point_of_place: f is not a square in the residue field");
      return {K, CurveExt::Point{false, xs[0], *ys}};
    }
    default:
      throw std::invalid_argument("point_of_place: infinite place");
  }
}

/// Express y as a polynomial G(x) over F_p when x generates F_p(x, y): returns G with deg G < deg K.
inline std::optional<Poly> express_in_powers(const ResidueField& K, const Poly& x, const Poly& y);

/// Minimal polynomial over F_p of an element of a residue field.
inline Poly min_poly(const ResidueField& K, const Poly& z) {
  std::vector<Poly> conj{z};
  for (;;) {
    Poly n = K.frobenius(conj.back());
    if (n == z) break;
    conj.push_back(n);
  }
  ExtPoly m(K, {K.one()});
  for (auto& c : conj) m = m * ExtPoly(K, {K.neg(c), K.one()});
  std::vector<Fp> co;
  for (auto& c : m.coeffs()) {
    auto v = K.as_fp(c);
    if (!v) throw std::logic_error("min_poly: coefficient outside the prime field");
    co.push_back(*v);
  }
  return Poly(K.base(), std::move(co));
}

/// Orbit length of a point under Frobenius.
inline int orbit_length(const ResidueField& K, const CurveExt::Point& P) {
  if (P.inf) return 1;
  int n = 1;
  Poly x = K.frobenius(P.x), y = K.frobenius(P.y);
  while (!(x == P.x && y == P.y)) {
    x = K.frobenius(x);
    y = K.frobenius(y);
    ++n;
  }
  return n;
}

/// The place of y^2 = f(x) through a point with coordinates in K.
inline Place place_of_point(const ResidueField& K, const CurveExt::Point& P) {
  const PrimeField& F = K.base();
  if (P.inf) return Place::infinite(F);
  Poly h = min_poly(K, P.x);
  if (P.y.is_zero()) return Place::ramified(h);
  int d = orbit_length(K, P);
  if (d == 2 * h.degree()) return Place::inert(h);
  auto G = express_in_powers(K, P.x, P.y);
  if (!G) throw std::logic_error("place_of_point: y is not a polynomial in x");
  return Place::split(h, *G);
}

inline std::optional<Poly> express_in_powers(const ResidueField& K, const Poly& x, const Poly& y) {
  // Solve sum_i g_i x^i = y for i < e, e = degree of x over F_p, by Gaussian elimination.
  const PrimeField& F = K.base();
  const int n = K.degree();
  const int e = min_poly(K, x).degree();
  std::vector<std::vector<Fp>> rows(static_cast<std::size_t>(n), std::vector<Fp>(static_cast<std::size_t>(e) + 1));
  Poly pw = K.one();
  for (int i = 0; i < e; ++i) {
    for (int r = 0; r < n; ++r) rows[r][i] = pw[r];
    pw = K.mul(pw, x);
  }
  for (int r = 0; r < n; ++r) rows[r][e] = y[r];
  int rank = 0;
  std::vector<int> pivcol;
  for (int c = 0; c < e && rank < n; ++c) {
    int piv = -1;
    for (int r = rank; r < n; ++r) {
      if (rows[r][c].v) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    Fp il = F.inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = F.mul(v, il);
    for (int r = 0; r < n; ++r) {
      if (r == rank || rows[r][c].v == 0) continue;
      Fp m = rows[r][c];
      for (int j = 0; j <= e; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(m, rows[rank][j]));
    }
    pivcol.push_back(c);
    ++rank;
  }
  for (int r = rank; r < n; ++r) {
    if (rows[r][e].v) return std::nullopt;
  }
  std::vector<Fp> g(static_cast<std::size_t>(e));
  for (int i = 0; i < rank; ++i) g[pivcol[i]] = rows[i][e];
  return Poly(F, std::move(g));
}

/// All places of degree <= kappa (kappa in {1, 2}) in canonical order, infinite place first.
inline std::vector<Place> places_up_to(const CurveFp& E, int kappa) {
  if (kappa < 1 || kappa > 2) throw std::invalid_argument("places_up_to: only kappa 1 or 2 is supported");
  const PrimeField& F = E.field();
  const Poly f = curve_poly(E);
  std::vector<Place> out{Place::infinite(F)};
  for (std::uint32_t x0 = 0; x0 < F.modulus(); ++x0) {
    Fp v = f.eval(Fp{x0});
    Poly h = Poly::linear_root(F, Fp{x0});
    if (v.v == 0) {
      out.push_back(Place::ramified(h));
    } else if (auto r = F.sqrt(v)) {
      out.push_back(Place::split(h, Poly::constant(F, *r)));
      out.push_back(Place::split(h, Poly::constant(F, F.neg(*r))));
    } else if (kappa >= 2) {
      out.push_back(Place::inert(h));
    }
  }
  if (kappa >= 2) {
    for (auto& h : monic_irreducibles(F, 2)) {
      Poly fh = f % h;
      if (fh.is_zero()) {
        out.push_back(Place::ramified(h));
        continue;
      }
      ResidueField K(h);
      if (auto r = K.sqrt(fh)) {
        out.push_back(Place::split(h, *r));
        out.push_back(Place::split(h, K.neg(*r)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gsieve
