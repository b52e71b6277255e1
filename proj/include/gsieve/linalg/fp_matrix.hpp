#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gsieve/ff/prime_field.hpp"

namespace gsieve {

using FpMatrix = std::vector<std::vector<Fp>>;

/// In-place reduced row echelon form over F_p, pivoting on the first nonzero entry
/// (lowest row index) of each column. Returns the pivot columns.
inline std::vector<std::size_t> rref(const PrimeField& F, FpMatrix& M) {
  std::vector<std::size_t> piv;
  if (M.empty()) return piv;
  const std::size_t rows = M.size(), cols = M[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t k = r;
    while (k < rows && M[k][c].v == 0) ++k;
    if (k == rows) continue;
    std::swap(M[k], M[r]);
    const Fp il = F.inv(M[r][c]);
    for (auto& v : M[r]) v = F.mul(v, il);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].v == 0) continue;
      const Fp m = M[i][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] = F.sub(M[i][j], F.mul(m, M[r][j]));
    }
    piv.push_back(c);
    ++r;
  }
  M.resize(r);
  return piv;
}

inline std::size_t rank(const PrimeField& F, FpMatrix M) { return rref(F, M).size(); }

/// Basis of the right null space {v : M v = 0}, returned in reduced echelon form
/// (each vector has a leading 1 in a distinct free column, vectors ordered by that column).
inline FpMatrix nullspace(const PrimeField& F, FpMatrix M, std::size_t cols) {
  if (M.empty()) {
    FpMatrix I(cols, std::vector<Fp>(cols));
    for (std::size_t i = 0; i < cols; ++i) I[i][i] = Fp{1};
    return I;
  }
  auto piv = rref(F, M);
  std::vector<int> is_piv(cols, -1);
  for (std::size_t i = 0; i < piv.size(); ++i) is_piv[piv[i]] = static_cast<int>(i);
  FpMatrix out;
  for (std::size_t fcol = 0; fcol < cols; ++fcol) {
    if (is_piv[fcol] >= 0) continue;
    std::vector<Fp> v(cols);
    v[fcol] = Fp{1};
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(M[i][fcol]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Reduced echelon basis of the row space.
inline FpMatrix row_basis(const PrimeField& F, FpMatrix M) {
  rref(F, M);
  return M;
}

}  // namespace gsieve
