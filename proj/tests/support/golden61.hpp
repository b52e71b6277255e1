#pragma once

// Published values for the F_61^19 experiment, used as test oracles.

#include <cstdint>
#include <string>
#include <vector>

#include "gsieve/endo/endo.hpp"

namespace golden61 {

using namespace gsieve;

inline PrimeField field() { return PrimeField(61); }

/// Coefficients listed from the highest degree down.
inline Poly desc(const std::vector<std::int64_t>& c) {
  return Poly::from_ints(field(), std::vector<std::int64_t>(c.rbegin(), c.rend()));
}

inline CurveFp curve() {
  PrimeField F = field();
  return CurveFp(F, Fp{20}, Fp{21});
}

inline BaseIsogeny beta() {
  return {RatFunc(desc({20, 36, 35, 40}), desc({1, 14, 49})), RatFunc(desc({58, 59, 12, 21}), desc({1, 21, 25, 38})), 0,
          3};
}

inline EndoRing ring() { return EndoRing(curve(), beta()); }

inline const QuadEndo kAlpha{1, 1};
inline const QuadEndo kI{4, -1};
inline const QuadEndo kPhi{-7, 2};

inline PointFp a() { return make_point(curve(), 52, 24); }
inline PointFp b() { return make_point(curve(), 1, 46); }

inline const std::vector<std::pair<int, int>> kKernelI = {
    {11, 13}, {11, 48}, {14, 19}, {14, 42}, {21, 8},  {21, 53}, {35, 15}, {35, 46}, {40, 10},
    {40, 51}, {41, 10}, {41, 51}, {45, 27}, {45, 34}, {48, 2},  {48, 59}, {51, 23}, {51, 38}};

inline Poly hP() {
  return desc({1, 60, 25, 21, 23, 22, 49, 38, 30, 57, 3, 15, 26, 17, 45, 30, 48, 55, 18, 35});
}
/// The printed y-part of P is y + yP(x), so lambda = -yP.
inline Poly yP() { return desc({12, 38, 5, 1, 45, 42, 18, 34, 39, 59, 16, 18, 16, 36, 11, 9, 48, 59, 8}); }
inline Poly hQ() {
  return desc({1, 25, 34, 46, 16, 14, 58, 52, 39, 48, 18, 56, 41, 40, 11, 33, 55, 14, 5, 56});
}
inline Poly yQ() { return desc({42, 40, 23, 41, 14, 12, 30, 50, 33, 33, 60, 15, 54, 13, 17, 31, 50, 52, 3}); }
inline Poly iso() { return desc({2, 57, 21, 10, 54, 35, 45, 27, 41, 55, 27, 36, 29, 50, 44, 18, 38, 51, 18}); }

}  // namespace golden61
