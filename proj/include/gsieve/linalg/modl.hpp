#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsieve/ff/residue_field.hpp"

namespace gsieve {

/// Miller-Rabin with the first twenty primes as witnesses.
inline bool is_probable_prime(const mpz_class& n) {
  if (n < 2) return false;
  static const unsigned kWitness[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  for (unsigned w : kWitness) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  mpz_class d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned w : kWitness) {
    mpz_class x, a = w;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (unsigned r = 1; r < s && comp; ++r) {
      x = x * x % n;
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

/// Prime modulus for the linear algebra.
class BigModulus {
 public:
  explicit BigModulus(mpz_class l) : l_(std::move(l)) {
    if (!is_probable_prime(l_)) throw std::invalid_argument("BigModulus: " + l_.get_str() + " is not prime");
  }
  explicit BigModulus(const std::string& dec) : BigModulus(mpz_class(dec)) {}

  const mpz_class& value() const noexcept { return l_; }
  std::size_t bits() const { return mpz_sizeinbase(l_.get_mpz_t(), 2); }
  mpz_class reduce(const mpz_class& a) const {
    mpz_class r = a % l_;
    if (r < 0) r += l_;
    return r;
  }
  mpz_class mul(const mpz_class& a, const mpz_class& b) const { return reduce(a * b); }
  mpz_class inv(const mpz_class& a) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), l_.get_mpz_t()) == 0) throw std::domain_error("BigModulus::inv: not invertible");
    return r;
  }
  mpz_class pow(const mpz_class& a, const mpz_class& e) const {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), l_.get_mpz_t());
    return r;
  }

 private:
  mpz_class l_;
};

using ModVec = std::vector<mpz_class>;

/// Prime factorization of n by trial division up to bound, the cofactor appended when it is > 1.
inline std::vector<std::pair<mpz_class, unsigned>> trial_factor(mpz_class n, unsigned long bound = 100000) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  for (unsigned long q = 2; q <= bound && q * q <= n; ++q) {
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e) out.emplace_back(mpz_class(q), e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Row-by-row echelon basis over Z/l: each stored row has a leading 1 at its pivot.
class ModlEchelon {
 public:
  ModlEchelon(const BigModulus& L, std::size_t cols) : L_(L), cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds v to the basis when it is independent of the current rows.
  bool insert(ModVec v) {
    if (v.size() != cols_) throw std::invalid_argument("ModlEchelon: wrong row length");
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] == 0) continue;
      auto it = rows_.find(c);
      if (it == rows_.end()) {
        const mpz_class il = L_.inv(v[c]);
        for (std::size_t j = c; j < cols_; ++j) v[j] = L_.mul(v[j], il);
        rows_.emplace(c, std::move(v));
        return true;
      }
      const mpz_class m = v[c];
      const ModVec& r = it->second;
      for (std::size_t j = c; j < cols_; ++j) {
        if (r[j] != 0) v[j] = L_.reduce(v[j] - m * r[j]);
      }
    }
    return false;
  }

  std::vector<ModVec> rows() const {
    std::vector<ModVec> out;
    for (auto& [c, r] : rows_) out.push_back(r);
    return out;
  }

 private:
  const BigModulus& L_;
  std::size_t cols_;
  std::map<std::size_t, ModVec> rows_;
};

/// Basis of the right kernel {v : M v = 0} over Z/l by Gaussian elimination, pivoting on the first nonzero entry.
inline std::vector<ModVec> kernel_mod_l(std::vector<ModVec> M, std::size_t cols, const BigModulus& L) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
    std::size_t k = r;
    while (k < M.size() && M[k][c] == 0) ++k;
    if (k == M.size()) continue;
    std::swap(M[k], M[r]);
    const mpz_class il = L.inv(M[r][c]);
    for (std::size_t j = c; j < cols; ++j) M[r][j] = L.mul(M[r][j], il);
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c] == 0) continue;
      const mpz_class m = M[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (M[r][j] != 0) M[i][j] = L.reduce(M[i][j] - m * M[r][j]);
      }
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<ModVec> out;
  for (std::size_t fcol = 0; fcol < cols; ++fcol) {
    if (is_piv[fcol]) continue;
    ModVec v(cols, 0);
    v[fcol] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = L.reduce(-M[i][fcol]);
    out.push_back(std::move(v));
  }
  return out;
}

/// M v mod l.
inline ModVec mat_vec_mod_l(const std::vector<ModVec>& M, const ModVec& v, const BigModulus& L) {
  ModVec out;
  for (auto& row : M) {
    mpz_class acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * v[j];
    out.push_back(L.reduce(acc));
  }
  return out;
}

/// z^e in a finite field for an arbitrary nonnegative exponent.
inline ResidueElem modpow_big(const ResidueField& K, const ResidueElem& z, const mpz_class& e) {
  if (e < 0) throw std::invalid_argument("modpow_big: negative exponent");
  ResidueElem r = K.one();
  const std::size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = nb; i-- > 0;) {
    r = K.sqr(r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = K.mul(r, z);
  }
  return r;
}

/// sum_k c_k p^k mod l.
inline mpz_class eval_exppoly(const std::vector<long>& c, const std::vector<mpz_class>& ppow, const BigModulus& L) {
  mpz_class acc = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) acc += ppow[k] * c[k];
  }
  return L.reduce(acc);
}

}  // namespace gsieve
