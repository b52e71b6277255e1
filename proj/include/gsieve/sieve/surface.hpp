#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsieve/curve/function_field.hpp"
#include "gsieve/curve/place.hpp"
#include "gsieve/endo/endo.hpp"
#include "gsieve/linalg/fp_matrix.hpp"

namespace gsieve {

/// x1^i1 y1^j1 x2^i2 y2^j2
struct BiMonomial {
  int i1 = 0, j1 = 0, i2 = 0, j2 = 0;

  int weight1() const { return 2 * i1 + 3 * j1; }
  int weight2() const { return 2 * i2 + 3 * j2; }
  friend auto operator<=>(const BiMonomial&, const BiMonomial&) = default;
};

/// Order used for echelon forms: larger total pole weight first, then larger weight on E1.
inline bool monomial_before(const BiMonomial& a, const BiMonomial& b) {
  const int wa = a.weight1() + a.weight2(), wb = b.weight1() + b.weight2();
  if (wa != wb) return wa > wb;
  if (a.weight1() != b.weight1()) return a.weight1() > b.weight1();
  return a < b;
}

/// Polynomial in x1, y1, x2, y2 with F_p coefficients, a function on E1 x E2.
class BiPoly {
 public:
  explicit BiPoly(PrimeField F) : F_(F) {}

  static BiPoly x1(PrimeField F) { return monomial(F, {1, 0, 0, 0}); }
  static BiPoly y1(PrimeField F) { return monomial(F, {0, 1, 0, 0}); }
  static BiPoly x2(PrimeField F) { return monomial(F, {0, 0, 1, 0}); }
  static BiPoly y2(PrimeField F) { return monomial(F, {0, 0, 0, 1}); }
  static BiPoly constant(PrimeField F, Fp c) { return monomial(F, {}, c); }
  static BiPoly monomial(PrimeField F, BiMonomial m, Fp c = Fp{1}) {
    BiPoly r(F);
    r.add_term(m, c);
    return r;
  }

  const PrimeField& field() const noexcept { return F_; }
  const std::map<BiMonomial, Fp>& terms() const noexcept { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const BiMonomial& m, Fp c) {
    Fp v = F_.add(t_.count(m) ? t_.at(m) : Fp{0}, c);
    if (v.v == 0) t_.erase(m);
    else t_[m] = v;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    for (auto& [m, c] : b.t_) a.add_term(m, c);
    return a;
  }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) {
    for (auto& [m, c] : b.t_) a.add_term(m, a.F_.neg(c));
    return a;
  }
  BiPoly scaled(Fp c) const {
    BiPoly r(F_);
    for (auto& [m, v] : t_) r.add_term(m, F_.mul(v, c));
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  /// Evaluate with coordinates in any field K.
  template <class Field>
  typename Field::Elem eval(const Field& K, const typename Field::Elem& x1, const typename Field::Elem& y1,
                            const typename Field::Elem& x2, const typename Field::Elem& y2) const {
    auto pw = [&](const typename Field::Elem& z, int e) {
      auto r = K.one();
      for (int i = 0; i < e; ++i) r = K.mul(r, z);
      return r;
    };
    auto acc = K.zero();
    for (auto& [m, c] : t_) {
      auto t = K.mul(K.mul(pw(x1, m.i1), pw(y1, m.j1)), K.mul(pw(x2, m.i2), pw(y2, m.j2)));
      acc = K.add(acc, K.mul(K.from_fp(c), t));
    }
    return acc;
  }

  /// Terms in echelon order, e.g. "y1*x2 + x1*y2".
  std::string to_string() const {
    std::vector<std::pair<BiMonomial, Fp>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return monomial_before(a.first, b.first); });
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : v) {
      std::int64_t s = F_.to_signed(c);
      os << (first ? (s < 0 ? "-" : "") : (s < 0 ? " - " : " + "));
      first = false;
      std::int64_t a = s < 0 ? -s : s;
      std::vector<std::string> fs;
      auto push = [&](const char* name, int e) {
        if (e == 1) fs.push_back(name);
        else if (e > 1) fs.push_back(std::string(name) + "^" + std::to_string(e));
      };
      push("x1", m.i1);
      push("y1", m.j1);
      push("x2", m.i2);
      push("y2", m.j2);
      if (fs.empty()) {
        os << a;
        continue;
      }
      if (a != 1) os << a << '*';
      for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? "*" : "") << fs[i];
    }
    return os.str();
  }

 private:
  PrimeField F_;
  std::map<BiMonomial, Fp> t_;
};

/// Neron-Severi class (d1, d2, xi) of a divisor on E x E.
struct NSClass {
  long d1 = 0;
  long d2 = 0;
  QuadEndo xi;

  friend bool operator==(const NSClass&, const NSClass&) = default;
  std::string to_string() const {
    std::ostringstream os;
    os << '(' << d1 << ',' << d2 << ',';
    if (xi.v == 0) os << xi.u;
    else os << xi.u << (xi.v < 0 ? "-" : "+") << (xi.v < 0 ? -xi.v : xi.v) << "b";
    os << ')';
    return os.str();
  }
};

/// Intersection degrees (D.A, D.B) for A of class (N alpha, 1, alpha) and B of class (1, N beta, conj beta).
inline std::pair<long, long> ns_intersections(const NSClass& c, QuadEndo alpha, QuadEndo beta, const EndoRing& R) {
  const long dA = c.d1 + c.d2 * R.norm(alpha) - R.trace(R.mul(c.xi, R.conj(alpha)));
  const long dB = c.d1 * R.norm(beta) + c.d2 - R.trace(R.mul(c.xi, R.conj(beta)));
  return {dA, dB};
}

/// Sufficient condition d1 d2 >= N(xi) + 1 for the L-space construction to be nonempty.
inline bool effectivity_bound(const NSClass& c, const EndoRing& R) { return c.d1 * c.d2 >= R.norm(c.xi) + 1; }

/// Monomials x^i y^j (j <= 1) with pole order 2i + 3j <= n at the origin.
inline std::vector<std::pair<int, int>> lspace_monomials(long n) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j <= 1; ++j) {
    for (int i = 0; 2 * i + 3 * j <= n; ++i) out.emplace_back(i, j);
  }
  return out;
}

/// Reduced echelon basis of the subspace of L(E1, (d1 + N xi) O1) (x) L(E2, (d2 + 1) O2) vanishing on the
/// graph Q = -xi(P).
inline std::vector<BiPoly> lspace_vanishing_basis(const EndoRing& R, long d1, long d2, QuadEndo xi) {
  if (xi.u == 0 && xi.v == 0) throw std::invalid_argument("lspace_vanishing_basis: xi = 0 has no graph");
  const CurveFp& E = R.curve();
  const PrimeField& F = E.field();
  const long N = R.norm(xi);
  std::vector<BiMonomial> mons;
  for (auto [i1, j1] : lspace_monomials(d1 + N)) {
    for (auto [i2, j2] : lspace_monomials(d2 + 1)) mons.push_back({i1, j1, i2, j2});
  }
  std::sort(mons.begin(), mons.end(), monomial_before);
  const std::size_t needed = static_cast<std::size_t>(d1 + N + (d2 + 1) * N) + 1;

  FpMatrix M;
  std::size_t npts = 0;
  for (int k = 1; k <= 2 && npts < needed + mons.size(); ++k) {
    ResidueField K = k == 1 ? ResidueField(Poly::X(F)) : standard_extension(F, k);
    CurveExt C = lift_curve(E, K);
    std::vector<CurveExt::Point> pts = ec_points(C);
    for (auto& P : pts) {
      if (P.inf) continue;
      if (k > 1 && P.x.degree() <= 0 && P.y.degree() <= 0) continue;
      auto Q = C.neg(R.eval(C, xi, P));
      if (Q.inf) continue;
      std::vector<std::vector<Fp>> rows(k, std::vector<Fp>(mons.size()));
      for (std::size_t c = 0; c < mons.size(); ++c) {
        BiPoly m = BiPoly::monomial(F, mons[c]);
        ResidueElem v = m.eval(K, P.x, P.y, Q.x, Q.y);
        for (int r = 0; r < k; ++r) rows[r][c] = v[r];
      }
      for (auto& r : rows) M.push_back(std::move(r));
      if (++npts >= needed + mons.size()) break;
    }
  }
  if (npts < needed) throw std::invalid_argument("lspace_vanishing_basis: not enough evaluation points");
  FpMatrix ker = row_basis(F, nullspace(F, M, mons.size()));
  std::vector<BiPoly> out;
  CurveFF G = generic_curve(E);
  const FunctionField& K = G.field();
  auto P = G.point(K.x(), K.y());
  auto Q = G.neg(R.eval(G, xi, P));
  for (auto& v : ker) {
    BiPoly b(F);
    for (std::size_t c = 0; c < mons.size(); ++c) b.add_term(mons[c], v[c]);
    if (!K.is_zero(b.eval(K, P.x, P.y, Q.x, Q.y))) {
      throw std::logic_error("lspace_vanishing_basis: basis element does not vanish on the graph");
    }
    out.push_back(std::move(b));
  }
  return out;
}

/// The surface E x E with A = {alpha(P) - Q = a} and B = {P - beta(Q) = b}.
/// Points of A are parametrized by P, points of B by Q.
class Surface {
 public:
  Surface(EndoRing R, QuadEndo alpha, QuadEndo beta, PointFp a, PointFp b)
      : R_(std::move(R)), alpha_(alpha), beta_(beta), a_(std::move(a)), b_(std::move(b)) {}

  const EndoRing& ring() const noexcept { return R_; }
  const CurveFp& curve() const noexcept { return R_.curve(); }
  QuadEndo alpha() const noexcept { return alpha_; }
  QuadEndo beta() const noexcept { return beta_; }
  const PointFp& a() const noexcept { return a_; }
  const PointFp& b() const noexcept { return b_; }

  /// Generic point of the curve Q = alpha(P) - s, given as Q in terms of the generic P.
  CurveFF::Point partner_A(const PointFp& s) const { return partner(true, s); }
  /// Generic point of the curve P = beta(Q) + s, given as P in terms of the generic Q.
  CurveFF::Point partner_B(const PointFp& s) const { return partner(false, s); }

  /// Restriction of eps to {Q = alpha(P) - s}, as a function of P.
  FFElem restrict_to_A(const BiPoly& eps, const PointFp& s) const {
    CurveFF G = generic_curve(curve());
    const FunctionField& K = G.field();
    auto Q = partner_A(s);
    if (Q.inf) throw std::logic_error("restrict_to_A: degenerate partner");
    return eps.eval(K, K.x(), K.y(), Q.x, Q.y);
  }
  FFElem restrict_to_A(const BiPoly& eps) const { return restrict_to_A(eps, a_); }

  /// Restriction of eps to {P = beta(Q) + s}, as a function of Q.
  FFElem restrict_to_B(const BiPoly& eps, const PointFp& s) const {
    CurveFF G = generic_curve(curve());
    const FunctionField& K = G.field();
    auto P = partner_B(s);
    if (P.inf) throw std::logic_error("restrict_to_B: degenerate partner");
    return eps.eval(K, P.x, P.y, K.x(), K.y());
  }
  FFElem restrict_to_B(const BiPoly& eps) const { return restrict_to_B(eps, b_); }

 private:
  CurveFF::Point partner(bool sideA, const PointFp& s) const {
    auto key = std::make_tuple(sideA, s.inf, s.x.v, s.y.v);
    {
      std::lock_guard<std::mutex> lock(*mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    CurveFF G = generic_curve(curve());
    const FunctionField& K = G.field();
    auto gen = G.point(K.x(), K.y());
    auto sk = s.inf ? G.infinity() : G.point(K.from_fp(s.x), K.from_fp(s.y));
    auto r = sideA ? G.sub(R_.eval(G, alpha_, gen), sk) : G.add(R_.eval(G, beta_, gen), sk);
    std::lock_guard<std::mutex> lock(*mu_);
    cache_.emplace(key, r);
    return r;
  }

  EndoRing R_;
  QuadEndo alpha_, beta_;
  PointFp a_, b_;
  mutable std::map<std::tuple<bool, bool, std::uint32_t, std::uint32_t>, CurveFF::Point> cache_;
  std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
};

}  // namespace gsieve
