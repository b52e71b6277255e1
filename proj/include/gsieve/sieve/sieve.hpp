#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gsieve/curve/function_field.hpp"
#include "gsieve/curve/place.hpp"
#include "gsieve/sieve/factor_basis.hpp"
#include "gsieve/sieve/surface.hpp"

namespace gsieve {

enum class Family { Vertical, Horizontal, Graph, Pencil };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Vertical: return "vertical";
    case Family::Horizontal: return "horizontal";
    case Family::Graph: return "graph";
    case Family::Pencil: return "pencil";
  }
  return "?";
}

/// How members of a class are generated: c x E2, E1 x c, {P - Q in c}, or an L-space pencil.
inline Family family_of(const NSClass& c, const EndoRing& R) {
  if (c.xi == QuadEndo{0, 0} && c.d2 == 0 && c.d1 > 0) return Family::Vertical;
  if (c.xi == QuadEndo{0, 0} && c.d1 == 0 && c.d2 > 0) return Family::Horizontal;
  if (c.d1 == c.d2 && c.xi == QuadEndo{c.d1, 0} && c.d1 > 0) return Family::Graph;
  if (effectivity_bound(c, R)) return Family::Pencil;
  throw std::invalid_argument("sieve: no generating family for class " + c.to_string());
}

/// A smooth effective divisor D of a class, through its restrictions to A and B.
struct Member {
  NSClass cls;
  std::string tag;
  Divisor A;
  Divisor B;
  /// Pencil members: the function eps with D = div(eps o tau) + poles - graph, tau the translation by (Z1, Z2).
  std::optional<BiPoly> eps;
  PointFp Z1, Z2;
};

struct SieveConfig {
  std::vector<NSClass> classes;
  int kappa = 2;
  /// Sweep the linear classes inside a numerical class by translating pencils by (Z1, Z2).
  bool translations = false;
  unsigned jobs = 1;
};

struct ClassStats {
  NSClass cls;
  Family family = Family::Vertical;
  std::size_t tested = 0;
  std::size_t smooth = 0;
  std::size_t linear_classes = 0;
};

struct SieveStats {
  std::vector<ClassStats> classes;
  bool stopped_early = false;
};

/// Norm polynomial of an effective divisor supported on finite places.
inline Poly divisor_norm(const Divisor& D, const PrimeField& F) {
  Poly n = Poly::one(F);
  for (auto& [q, m] : D.terms()) {
    if (q.is_infinite()) continue;
    const Poly hq = q.kind == PlaceKind::Inert ? q.h * q.h : q.h;
    for (long i = 0; i < m; ++i) n *= hq;
  }
  return n;
}

/// True if every irreducible factor of r has degree <= kappa.
inline bool poly_is_smooth(Poly r, int kappa) {
  if (r.is_zero()) return false;
  r = r.monic();
  const PrimeField& F = r.field();
  while (r.degree() > 0) {
    Poly X = Poly::X(F) % r;
    Poly xp = powmod(X, F.modulus(), r);
    Poly acc = Poly::one(F), cur = xp;
    for (int j = 1; j <= kappa; ++j) {
      acc = mulmod(acc, cur - X, r);
      if (j < kappa) cur = compose_mod(cur, xp, r);
    }
    Poly g = acc.is_zero() ? r : gcd(r, acc);
    if (g.degree() <= 0) return false;
    r = r / g;
  }
  return true;
}

namespace detail {

inline bool small_enough(const Divisor& D, int kappa) { return D.max_place_degree() <= kappa; }

/// Fixed data of a pencil restricted to one curve A_s or B_s.
struct PencilSide {
  std::vector<Poly> Ai, Bi;
  Divisor fixed;
  Poly fixed_norm;
  long degree = 0;

  explicit PencilSide(const PrimeField& F) : fixed_norm(Poly::one(F)) {}
};

inline PencilSide make_pencil_side(const std::vector<FFElem>& e, const Divisor& poles_minus_graph, const Poly& f,
                                   long degree) {
  const PrimeField& F = f.field();
  Poly c = Poly::one(F);
  auto lcm = [](const Poly& u, const Poly& v) { return (u * v) / gcd(u, v); };
  for (auto& g : e) c = lcm(lcm(c, g.a.den()), g.b.den());
  PencilSide S(F);
  for (auto& g : e) {
    S.Ai.push_back(g.a.num() * (c / g.a.den()));
    S.Bi.push_back(g.b.num() * (c / g.b.den()));
  }
  S.fixed = poles_minus_graph - detail::divisor_of_xpoly(c, f, kDefaultSeed);
  Divisor forced = (-1L * S.fixed).finite_part();
  if (!forced.is_effective()) throw std::logic_error("pencil: fixed part has unexpected sign");
  S.fixed_norm = divisor_norm(forced, F);
  S.degree = degree;
  return S;
}

/// D = div(A + B y) + fixed when smooth, else nullopt.
inline std::optional<Divisor> pencil_member(const PencilSide& S, const std::vector<Fp>& coef, const Poly& f, int kappa) {
  const PrimeField& F = f.field();
  Poly A(F), B(F);
  for (std::size_t i = 0; i < coef.size(); ++i) {
    if (coef[i].v == 0) continue;
    A += S.Ai[i].scaled(coef[i]);
    B += S.Bi[i].scaled(coef[i]);
  }
  if (A.is_zero() && B.is_zero()) return std::nullopt;
  Poly N = A * A - B * B * f;
  auto [q, r] = divmod(N, S.fixed_norm);
  if (!r.is_zero()) throw std::logic_error("pencil: forced zeros missing from a member");
  if (!poly_is_smooth(q, kappa)) return std::nullopt;
  Divisor D = divisor_of_poly_function(A, B, f) + S.fixed;
  if (!D.is_effective() || D.degree() != S.degree) throw std::logic_error("pencil: member divisor is not effective of the expected degree");
  if (!small_enough(D, kappa)) return std::nullopt;
  return D;
}

/// Run fn(i) for i in [0, n) on up to jobs threads.
inline void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Distinct translation pairs (s_A, s_B) = (a + Z2 - alpha(Z1), b + beta(Z2) - Z1) with a representative (Z1, Z2),
/// the untranslated pair first.
struct TranslationPair {
  PointFp sA, sB, Z1, Z2;
};

inline std::vector<TranslationPair> translation_pairs(const Surface& S, bool all) {
  const CurveFp& E = S.curve();
  const EndoRing& R = S.ring();
  std::vector<TranslationPair> out;
  std::map<std::pair<PointFp, PointFp>, bool> seen;
  auto pts = ec_points(E);
  for (auto& Z1 : pts) {
    for (auto& Z2 : pts) {
      PointFp sA = E.sub(E.add(S.a(), Z2), R.eval(S.alpha(), Z1));
      PointFp sB = E.sub(E.add(S.b(), R.eval(S.beta(), Z2)), Z1);
      if (seen.count({sA, sB})) continue;
      seen[{sA, sB}] = true;
      out.push_back({sA, sB, Z1, Z2});
      if (!all) return out;
    }
  }
  return out;
}

/// Callback receiving each smooth member in deterministic order; returning true stops the sieve once the
/// current linear class is exhausted.
using MemberSink = std::function<bool(const Member&)>;

/// Enumerate the configured classes and pass each smooth member to the sink.
inline SieveStats sieve_collect(const Surface& S, const SieveConfig& cfg, const MemberSink& sink) {
  const EndoRing& R = S.ring();
  const CurveFp& E = R.curve();
  const Poly& f = R.f();
  const PrimeField& F = E.field();
  const QuadEndo one{1, 0};
  const std::vector<Place> places = places_up_to(E, cfg.kappa);
  SieveStats stats;

  for (const NSClass& cls : cfg.classes) {
    ClassStats cs;
    cs.cls = cls;
    cs.family = family_of(cls, R);
    const auto [degA, degB] = ns_intersections(cls, S.alpha(), S.beta(), R);
    bool stop = false;

    if (cs.family != Family::Pencil) {
      const long k = cs.family == Family::Horizontal ? cls.d2 : cls.d1;
      std::vector<Place> cands;
      for (auto& c : places) {
        if (c.degree() == k) cands.push_back(c);
      }
      std::vector<std::optional<Member>> res(cands.size());
      detail::parallel_for(cands.size(), cfg.jobs, [&](std::size_t i) {
        const Place& c = cands[i];
        Member m;
        m.cls = cls;
        m.tag = "c=" + place_str(c, f, "x", "y");
        m.Z1 = m.Z2 = E.infinity();
        switch (cs.family) {
          case Family::Vertical:
            m.A = Divisor::of(c);
            m.B = R.pullback(S.beta(), S.b(), c);
            break;
          case Family::Horizontal:
            m.A = R.pullback(S.alpha(), E.neg(S.a()), c);
            m.B = Divisor::of(c);
            break;
          default:
            m.A = R.pullback(R.add(one, R.neg(S.alpha())), S.a(), c);
            m.B = R.pullback(R.add(S.beta(), R.neg(one)), S.b(), c);
            break;
        }
        if (m.A.degree() != degA || m.B.degree() != degB) throw std::logic_error("sieve: intersection degree mismatch");
        if (detail::small_enough(m.A, cfg.kappa) && detail::small_enough(m.B, cfg.kappa)) res[i] = std::move(m);
      });
      cs.tested = cands.size();
      cs.linear_classes = 1;
      for (auto& r : res) {
        if (!r) continue;
        ++cs.smooth;
        if (sink(*r)) stop = true;
      }
    } else {
      const std::vector<BiPoly> basis = lspace_vanishing_basis(R, cls.d1, cls.d2, cls.xi);
      if (basis.size() < 2) throw std::invalid_argument("sieve: pencil of class " + cls.to_string() + " is trivial");
      const long N = R.norm(cls.xi);
      const std::size_t nfree = basis.size() - 1;
      std::size_t ncand = 1;
      for (std::size_t i = 0; i < nfree; ++i) ncand *= F.modulus();
      const auto pairs = translation_pairs(S, cfg.translations);
      const Place inf = Place::infinite(F);
      for (const auto& tp : pairs) {
        ++cs.linear_classes;
        std::vector<FFElem> eA, eB;
        for (auto& b : basis) {
          eA.push_back(S.restrict_to_A(b, tp.sA));
          eB.push_back(S.restrict_to_B(b, tp.sB));
        }
        Divisor pgA = (cls.d1 + N) * Divisor::of(inf) + (cls.d2 + 1) * R.pullback(S.alpha(), E.neg(tp.sA), inf) -
                      R.pullback(R.add(S.alpha(), cls.xi), E.neg(tp.sA), inf);
        Divisor pgB = (cls.d1 + N) * R.pullback(S.beta(), tp.sB, inf) + (cls.d2 + 1) * Divisor::of(inf) -
                      R.pullback(R.add(one, R.mul(cls.xi, S.beta())), R.eval(cls.xi, tp.sB), inf);
        detail::PencilSide PA = detail::make_pencil_side(eA, pgA, f, degA);
        detail::PencilSide PB = detail::make_pencil_side(eB, pgB, f, degB);
        std::vector<std::optional<Member>> res(ncand);
        detail::parallel_for(ncand, cfg.jobs, [&](std::size_t idx) {
          std::vector<Fp> coef{Fp{1}};
          std::size_t t = idx;
          std::vector<std::uint32_t> lam;
          for (std::size_t i = 0; i < nfree; ++i) {
            lam.push_back(static_cast<std::uint32_t>(t % F.modulus()));
            t /= F.modulus();
          }
          std::reverse(lam.begin(), lam.end());
          for (auto l : lam) coef.push_back(Fp{l});
          auto DA = detail::pencil_member(PA, coef, f, cfg.kappa);
          if (!DA) return;
          auto DB = detail::pencil_member(PB, coef, f, cfg.kappa);
          if (!DB) return;
          Member m;
          m.cls = cls;
          std::ostringstream os;
          os << "lambda=";
          for (std::size_t i = 0; i < lam.size(); ++i) os << (i ? "," : "") << lam[i];
          os << " Z1=" << E.to_string(tp.Z1) << " Z2=" << E.to_string(tp.Z2);
          m.tag = os.str();
          BiPoly eps = basis[0];
          for (std::size_t i = 1; i < coef.size(); ++i) eps = eps + basis[i].scaled(coef[i]);
          m.eps = eps;
          m.Z1 = tp.Z1;
          m.Z2 = tp.Z2;
          m.A = translate_divisor(E, *DA, tp.Z1);
          m.B = translate_divisor(E, *DB, tp.Z2);
          res[idx] = std::move(m);
        });
        cs.tested += ncand;
        for (auto& r : res) {
          if (!r) continue;
          ++cs.smooth;
          if (sink(*r)) stop = true;
        }
        if (stop) break;
      }
    }
    stats.classes.push_back(cs);
    if (stop) {
      stats.stopped_early = true;
      break;
    }
  }
  return stats;
}

}  // namespace gsieve
