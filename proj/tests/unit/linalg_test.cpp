#include <gtest/gtest.h>

#include <random>
#include <string>

#include "gsieve/linalg/fp_matrix.hpp"
#include "gsieve/linalg/modl.hpp"
#include "gsieve/ff/factor.hpp"

using namespace gsieve;

namespace {

const std::string kEll = "607127818287731321660577427051";

mpz_class random_below(gmp_randclass& rng, const mpz_class& n) { return rng.get_z_range(n); }

}  // namespace

TEST(BigModulus, EllIsPrime) {
  BigModulus L(kEll);
  EXPECT_EQ(L.bits(), 99u);
  EXPECT_FALSE(is_probable_prime(mpz_class(kEll) * 3));
  EXPECT_THROW(BigModulus(mpz_class(91)), std::invalid_argument);
}

TEST(BigModulus, FactorizationOfGroupOrder) {
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), 61, 19);
  n -= 1;
  auto fac = trial_factor(n, 1000);
  ASSERT_EQ(fac.size(), 5u);
  EXPECT_EQ(fac[0], std::make_pair(mpz_class(2), 2u));
  EXPECT_EQ(fac[1], std::make_pair(mpz_class(3), 1u));
  EXPECT_EQ(fac[2], std::make_pair(mpz_class(5), 1u));
  EXPECT_EQ(fac[3], std::make_pair(mpz_class(229), 1u));
  EXPECT_EQ(fac[4].first, mpz_class(kEll));
  EXPECT_EQ(mpz_class(4 * 3 * 5 * 229) * mpz_class(kEll), n);
  // p has order dividing 19 modulo ell
  BigModulus L(kEll);
  EXPECT_EQ(L.pow(61, 19), 1);
  EXPECT_NE(L.pow(61, 1), 1);
}

TEST(KernelModL, IdentityHasTrivialKernel) {
  BigModulus L(kEll);
  std::vector<ModVec> M(6, ModVec(6, 0));
  for (int i = 0; i < 6; ++i) M[i][i] = 1;
  EXPECT_TRUE(kernel_mod_l(M, 6, L).empty());
}

TEST(KernelModL, RandomMultiplyBack) {
  BigModulus L(kEll);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(12345);
  std::vector<ModVec> M(50, ModVec(60));
  for (auto& r : M) {
    for (auto& x : r) x = random_below(rng, L.value());
  }
  auto ker = kernel_mod_l(M, 60, L);
  EXPECT_EQ(ker.size(), 10u);
  for (auto& k : ker) {
    for (auto& v : mat_vec_mod_l(M, k, L)) EXPECT_EQ(v, 0);
  }
}

TEST(KernelModL, RankDeficientRows) {
  BigModulus L(kEll);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(7);
  std::vector<ModVec> M(8, ModVec(10));
  for (int i = 0; i < 5; ++i) {
    for (auto& x : M[i]) x = random_below(rng, L.value());
  }
  for (int i = 5; i < 8; ++i) {
    for (int j = 0; j < 10; ++j) M[i][j] = L.reduce(M[i - 5][j] * (i + 2) + M[i - 4][j]);
  }
  auto ker = kernel_mod_l(M, 10, L);
  EXPECT_EQ(ker.size(), 5u);
  ModlEchelon ech(L, 10);
  for (auto& r : M) ech.insert(r);
  EXPECT_EQ(ech.rank(), 5u);
  for (auto& k : ker) {
    for (auto& v : mat_vec_mod_l(M, k, L)) EXPECT_EQ(v, 0);
  }
}

TEST(ModpowBig, EdgeExponents) {
  ResidueField K(first_irreducible(PrimeField(61), 3));
  std::mt19937_64 rng(1);
  mpz_class order;
  mpz_ui_pow_ui(order.get_mpz_t(), 61, 3);
  order -= 1;
  for (int i = 0; i < 20; ++i) {
    auto z = K.random(rng);
    if (K.is_zero(z)) continue;
    EXPECT_EQ(modpow_big(K, z, 0), K.one());
    EXPECT_EQ(modpow_big(K, z, order), K.one());
    EXPECT_EQ(modpow_big(K, z, 12345), K.pow(z, 12345));
  }
}

TEST(ModpowBig, GroupOrderOfF61To19) {
  ResidueField K(first_irreducible(PrimeField(61), 19));
  mpz_class order;
  mpz_ui_pow_ui(order.get_mpz_t(), 61, 19);
  order -= 1;
  std::mt19937_64 rng(2);
  for (int i = 0; i < 3; ++i) {
    auto z = K.random(rng);
    if (K.is_zero(z)) continue;
    EXPECT_EQ(modpow_big(K, z, order), K.one());
  }
}

TEST(ExpPoly, TermwiseReduction) {
  BigModulus L(kEll);
  std::vector<mpz_class> ppow(19);
  ppow[0] = 1;
  for (int k = 1; k < 19; ++k) ppow[k] = L.reduce(ppow[k - 1] * 61);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    std::vector<long> c(19);
    for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
    mpz_class direct = 0, pk = 1;
    for (int k = 0; k < 19; ++k, pk *= 61) direct += pk * c[k];
    EXPECT_EQ(eval_exppoly(c, ppow, L), L.reduce(direct));
  }
}

TEST(FpMatrix, NullspaceAndRank) {
  PrimeField F(61);
  FpMatrix M{{Fp{1}, Fp{2}, Fp{3}}, {Fp{2}, Fp{4}, Fp{6}}, {Fp{0}, Fp{1}, Fp{1}}};
  EXPECT_EQ(rank(F, M), 2u);
  auto ns = nullspace(F, M, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (auto& row : M) {
    Fp acc{0};
    for (int j = 0; j < 3; ++j) acc = F.add(acc, F.mul(row[j], ns[0][j]));
    EXPECT_EQ(acc.v, 0u);
  }
}
