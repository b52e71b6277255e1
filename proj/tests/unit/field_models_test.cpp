#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "../support/golden61.hpp"
#include "gsieve/models/field_model.hpp"

using namespace gsieve;

namespace {

Poly from_desc(PrimeField F, std::vector<std::int64_t> c) {
  std::reverse(c.begin(), c.end());
  return Poly::from_ints(F, c);
}

/// Trace through the minimal polynomial, independent of the conjugate sum.
Fp trace_via_minpoly(const ResidueField& K, const ResidueElem& z) {
  const PrimeField& F = K.base();
  Poly m = min_poly(K, z);
  const int e = m.degree();
  return F.mul(F.from_int(K.degree() / e), F.neg(m[static_cast<std::size_t>(e - 1)]));
}

CurveFp curve11() {
  PrimeField F(11);
  return CurveFp(F, F.from_int(1), F.zero(), F.zero(), F.from_int(2), F.from_int(8));
}

PointFp first_affine(const CurveFp& E) {
  for (auto& P : ec_points(E)) {
    if (!P.inf) return P;
  }
  return E.infinity();
}

void expect_galois_invariant(const FieldModel& M, std::uint64_t seed) {
  const ResidueField& K = M.field();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i) {
    auto z = K.random(rng);
    EXPECT_EQ(model_degree(K.frobenius(z), M), model_degree(z, M)) << K.to_string(z);
  }
}

}  // namespace

TEST(Kummer, GoldenP43) {
  auto M = kummer_model(43, 6, 3);
  PrimeField F(43);
  EXPECT_EQ(M.modulus(), from_desc(F, {1, 0, 0, 0, 0, 0, -3}));
  EXPECT_EQ(M.zeta().v, 37u);
  EXPECT_EQ(M.m(), 7u);
  EXPECT_TRUE(M.certify());
}

TEST(Kummer, GoldenP370801) {
  auto M = kummer_model(370801, 30, 17);
  EXPECT_EQ(M.zeta().v, 172960u);
  EXPECT_TRUE(M.certify());
}

TEST(Kummer, TrivialDegree) {
  auto M = kummer_model(43, 1, 5);
  EXPECT_EQ(M.modulus(), from_desc(PrimeField(43), {1, -5}));
  EXPECT_EQ(M.zeta().v, 1u);
  EXPECT_TRUE(M.certify());
}

TEST(Kummer, Errors) {
  try {
    kummer_model(43, 5, 3);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.code, ModelErrorCode::UnsupportedDegree);
  }
  try {
    kummer_model(43, 6, 1);  // X^6 - 1 splits
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.code, ModelErrorCode::InvalidGenerator);
  }
}

TEST(Kummer, DegreeOfMonomial) {
  auto M = kummer_model(43, 6, 3);
  EXPECT_EQ(model_degree(M.field().pow(M.field().gen(), 2), M), 2);
  EXPECT_EQ(model_degree(M.field().from_int(9), M), 0);
  expect_galois_invariant(M, 1);
}

TEST(ArtinSchreier, GoldenP7) {
  auto M = artin_schreier_model(7, 1);
  PrimeField F(7);
  EXPECT_EQ(M.modulus(), from_desc(F, {1, 0, 0, 0, 0, 0, -1, -1}));
  EXPECT_EQ(residue_pow(M.field(), M.field().gen(), 7), M.field().gen() + Poly::one(F));
  EXPECT_TRUE(M.certify());
}

TEST(ArtinSchreier, ShiftTwo) {
  auto M = artin_schreier_model(7, 2);
  PrimeField F(7);
  EXPECT_EQ(M.shift().v, 2u);
  EXPECT_EQ(residue_pow(M.field(), M.field().gen(), 7), M.field().gen() + Poly::constant(F, Fp{2}));
  expect_galois_invariant(M, 2);
}

TEST(ArtinSchreier, ZeroRejected) {
  try {
    artin_schreier_model(7, 0);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.code, ModelErrorCode::ReducibleModulus);
  }
}

TEST(ArtinSchreier, AbsoluteTrace) {
  ResidueField K = standard_extension(PrimeField(7), 3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto z = K.random(rng);
    EXPECT_EQ(absolute_trace(K, z), trace_via_minpoly(K, z));
  }
}

TEST(Torus, AddLaw) {
  PrimeField F(13);
  const Fp D{2};
  EXPECT_EQ(torus_add(F, Fp{8}, std::nullopt, D), TorusU(Fp{8}));
  EXPECT_EQ(torus_add(F, Fp{8}, F.neg(Fp{8}), D), TorusU());
  // doubling: (u^2 + D) / (2u)
  EXPECT_EQ(torus_add(F, Fp{8}, Fp{8}, D), TorusU(F.div(F.add(F.sqr(Fp{8}), D), F.add(Fp{8}, Fp{8}))));
}

TEST(Torus, OrderOfUCoordinate) {
  // 3 + 2 sqrt(2) has order 14 in F_169^*, its 7th power is -1, so its u-coordinate 8 has order 7
  PrimeField F(13);
  ResidueField L(from_desc(F, {1, 0, -2}));
  auto a = L.add(L.from_int(3), L.scale(L.gen(), Fp{2}));
  EXPECT_EQ(L.pow(a, 14), L.one());
  EXPECT_EQ(L.pow(a, 7), L.from_int(-1));
  EXPECT_EQ(F.div(Fp{3}, Fp{2}).v, 8u);
  EXPECT_EQ(torus_order(F, Fp{8}, Fp{2}), 7u);
  EXPECT_EQ(torus_mul(F, 7, Fp{8}, Fp{2}), TorusU());
}

TEST(Torus, GoldenP13) {
  auto M = torus_model(13, 7, 2, 8);
  PrimeField F(13);
  Poly A = from_desc(F, {1, 0, 3, 0, 10, 0, 4, 0}) - from_desc(F, {7, 0, 5, 0, 6, 0, 8}).scaled(Fp{8});
  EXPECT_EQ(M.modulus(), A);
  ASSERT_TRUE(M.tau());
  EXPECT_EQ(M.tau()->v, 4u);
  const ResidueField& K = M.field();
  auto x = K.gen();
  EXPECT_EQ(K.x_to_p(), K.div(K.add(K.scale(x, Fp{4}), K.from_int(2)), K.add(x, K.from_int(4))));
  EXPECT_TRUE(M.certify());
}

TEST(Torus, TauTwoWays) {
  for (auto [p, d, D, u] : std::vector<std::tuple<std::uint32_t, int, int, int>>{{13, 7, 2, 8}, {13, 7, 5, 3}, {19, 5, 2, 3}, {29, 3, 2, 5}}) {
    auto M = torus_model(p, d, D, u);
    EXPECT_EQ(M.tau_from_modulus(), M.tau()) << p << " " << d;
    EXPECT_TRUE(M.certify());
  }
}

TEST(Torus, Errors) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const ModelError& e) {
      return static_cast<int>(e.code);
    }
    return -1;
  };
  EXPECT_EQ(code([] { torus_model(13, 5, 2, 8); }), static_cast<int>(ModelErrorCode::UnsupportedDegree));
  EXPECT_EQ(code([] { torus_model(13, 7, 3, 8); }), static_cast<int>(ModelErrorCode::SquareParameter));
  EXPECT_EQ(code([] { torus_model(13, 7, 2, 0); }), static_cast<int>(ModelErrorCode::InvalidGenerator));
}

TEST(Torus, Degrees) {
  auto M = torus_model(13, 7, 2, 8);
  const ResidueField& K = M.field();
  EXPECT_EQ(model_degree(K.x_to_p(), M), 1);
  EXPECT_EQ(model_degree(K.from_int(5), M), 0);
  auto rep = torus_representation(K, K.x_to_p(), 1);
  ASSERT_TRUE(rep);
  const auto& v = *rep;
  Poly U(K.base(), {v[0], v[1]}), V(K.base(), {v[2], v[3]});
  EXPECT_EQ(K.mul(K.x_to_p(), K.reduce(V)), K.reduce(U));
  expect_galois_invariant(M, 4);
}

TEST(Torus, ExhaustiveDegreeRange) {
  auto M = torus_model(13, 7, 2, 8);
  auto t0 = std::chrono::steady_clock::now();
  auto h = torus_degree_histogram(M);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ASSERT_EQ(h.size(), 4u);
  std::uint64_t total = 0;
  for (auto c : h) total += c;
  EXPECT_EQ(total, M.field().order());
  EXPECT_EQ(h[0], 13u);
  EXPECT_EQ(h[1], 13u * (13u * 13u - 1u));  // Moebius images of x: |PGL2(F_13)|
  EXPECT_GT(h[3], 0u);
  EXPECT_LT(secs, 60.0);
  // the rank test agrees with the enumeration on random elements
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) EXPECT_LE(model_degree(M.field().random(rng), M), 3);
}

TEST(Torus, SubAdditive) {
  auto M = torus_model(13, 7, 2, 8);
  const ResidueField& K = M.field();
  std::mt19937_64 rng(6);
  auto ratio = [&](int k) {
    for (;;) {
      Poly V = detail::random_poly(K.base(), k + 1, rng);
      if (V.is_zero()) continue;
      return K.div(K.reduce(detail::random_poly(K.base(), k + 1, rng)), K.reduce(V));
    }
  };
  for (int i = 0; i < 60; ++i) {
    int kw = 1 + i % 2, kz = 1 + (i / 2) % 3;
    auto w = ratio(kw), z = ratio(kz);
    int dw = model_degree(w, M), dz = model_degree(z, M);
    ASSERT_LE(dw, kw);
    ASSERT_LE(dz, kz);
    if (dw + dz <= M.d() - 1) {
      EXPECT_LE(model_degree(K.mul(w, z), M), dw + dz);
    }
  }
}

TEST(Elliptic, CurveOverF11) {
  CurveFp E = curve11();
  EXPECT_EQ(ec_count(E), 7u);
  EXPECT_EQ(ec_trace(E), 5);
}

TEST(Elliptic, ResidueModelF11) {
  CurveFp E = curve11();
  PointFp a = first_affine(E);
  auto M = elliptic_residue_model(E, a);
  EXPECT_EQ(M.d(), 7);
  EXPECT_TRUE(is_irreducible(M.modulus()));
  EXPECT_TRUE(M.certify());
  EXPECT_EQ(M.translation(), a);
  expect_galois_invariant(M, 7);
}

TEST(Elliptic, EveryNonzeroPointGivesAField) {
  CurveFp E = curve11();
  for (auto& a : ec_points(E)) {
    if (a.inf) continue;
    auto M = elliptic_residue_model(E, a);
    EXPECT_EQ(M.d(), 7);
    EXPECT_TRUE(M.certify());
  }
}

TEST(Elliptic, DegreesAndSubAdditivity) {
  CurveFp E = curve11();
  auto M = elliptic_residue_model(E, first_affine(E));
  const ResidueField& K = M.field();
  const ResidueElem x = K.gen(), y = M.fiber_y();
  EXPECT_EQ(model_degree(K.from_int(3), M), 0);
  EXPECT_EQ(model_degree(x, M), 2);
  EXPECT_EQ(model_degree(y, M), 3);
  EXPECT_EQ(model_degree(K.frobenius(x), M), 2);
  std::mt19937_64 rng(8);
  auto fn = [&](int k) {
    // a + b x (+ c y) has at most k poles
    auto r = [&] { return K.from_int(static_cast<std::int64_t>(rng() % 11)); };
    auto f = K.add(r(), K.mul(K.add(r(), K.one()), x));
    if (k >= 3) f = K.add(f, K.mul(r(), y));
    return f;
  };
  for (int i = 0; i < 40; ++i) {
    int kw = 2 + i % 2, kz = 2 + (i / 2) % 2;
    auto w = fn(kw), z = fn(kz);
    int dw = model_degree(w, M), dz = model_degree(z, M);
    ASSERT_LE(dw, kw);
    ASSERT_LE(dz, kz);
    if (dw + dz <= M.d()) {
      EXPECT_LE(model_degree(K.mul(w, z), M), dw + dz);
    }
    EXPECT_LE(model_degree(K.div(w, z), M), dw + dz);
  }
}

TEST(Elliptic, FiberOfIOverF61) {
  EndoRing R = golden61::ring();
  PointFp r = make_point(R.curve(), 57, 11);
  auto M = elliptic_residue_model(R, golden61::kI, r);
  EXPECT_EQ(M.modulus(), golden61::hP());
  EXPECT_TRUE(M.certify());
  // phi(P) = P + t with t = -F1
  EXPECT_EQ(M.translation(), make_point(R.curve(), 11, 13));
}

TEST(Elliptic, DegenerateDegreeOne) {
  EndoRing R = golden61::ring();
  auto M = elliptic_residue_model(R, {1, 0}, golden61::a());
  EXPECT_EQ(M.d(), 1);
  EXPECT_EQ(M.modulus(), from_desc(PrimeField(61), {1, -52}));
  EXPECT_TRUE(M.certify());
}
