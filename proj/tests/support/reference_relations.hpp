#pragma once

// Published example relations on the F_61 surface, one entry per row: class, A-side divisor in x1, y1,
// B-side divisor in x2, y2. A place (h, y + c) is given by the coefficients of h and c, highest degree first.

#include <cstdint>
#include <utility>
#include <vector>

#include "gsieve/pipeline/pipeline.hpp"

namespace refrel {

struct Term {
  long mult;
  std::vector<std::int64_t> h, y;
};

struct Row {
  gsieve::NSClass cls;
  std::vector<Term> A, B;
};

inline std::vector<Row> rows() {
  using gsieve::NSClass;
  const std::vector<Term> neg221A{{-1, {1, 1}, {0}}, {-1, {1, 54}, {4}}, {-1, {1, 17, 19}, {41, 21}},
                                  {-1, {1, 51, 53}, {44, 31}}, {-1, {1, 55, 38}, {38, 58}}};
  auto cat = [](std::vector<Term> a, const std::vector<Term>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  return {
      {NSClass{1, 0, {0, 0}},
       {{1, {1, 43}, {33}}, {-1, {1, 13}, {59}}},
       {{1, {1, 1, 52}, {10, 37}}, {1, {1, 12}, {35}}, {-1, {1, 2}, {20}}, {-1, {1, 26, 39}, {5, 27}}}},
      {NSClass{2, 0, {0, 0}},
       {{1, {1, 56, 34}, {22, 52}}, {-2, {1, 13}, {59}}},
       {{1, {1, 37, 53}, {42, 58}},
        {1, {1, 12, 19}, {52, 43}},
        {1, {1, 41, 29}, {33, 41}},
        {-2, {1, 2}, {20}},
        {-2, {1, 26, 39}, {5, 27}}}},
      {NSClass{0, 1, {0, 0}},
       {{1, {1, 4, 12}, {55, 47}},
        {1, {1, 45, 31}, {19, 23}},
        {-1, {1, 42}, {60}},
        {-1, {1, 36}, {15}},
        {-1, {1, 60, 25}, {36, 26}}},
       {{1, {1, 43}, {33}}, {-1, {1, 13}, {59}}}},
      {NSClass{0, 2, {0, 0}},
       {{1, {1, 26, 12}, {12, 32}},
        {1, {1, 48, 6}, {59}},
        {1, {1, 53, 56}, {42, 56}},
        {1, {1, 3, 38}, {17, 36}},
        {-2, {1, 42}, {60}},
        {-2, {1, 36}, {15}},
        {-2, {1, 60, 25}, {36, 26}}},
       {{1, {1, 24, 39}, {37, 27}}, {-2, {1, 13}, {59}}}},
      {NSClass{1, 1, {1, 0}},
       {{1, {1, 2}, {41}}, {1, {1, 26, 39}, {56, 34}}, {-1, {1, 48, 6}, {2}}, {-1, {1, 52}, {25}}},
       {{1, {1, 17}, {21}},
        {1, {1, 57, 11}, {33, 0}},
        {1, {1, 55}, {33}},
        {-1, {1, 49, 42}, {26}},
        {-1, {1, 3, 4}, {30, 20}}}},
      {NSClass{2, 2, {2, 0}},
       {{1, {1, 25, 42}, {5, 13}},
        {1, {1, 30, 19}, {52, 42}},
        {1, {1, 59, 30}, {28, 22}},
        {-2, {1, 48, 6}, {2}},
        {-2, {1, 52}, {25}}},
       {{1, {1, 30, 21}, {50, 52}},
        {1, {1, 41, 8}, {54, 58}},
        {1, {1, 32, 20}, {34, 28}},
        {1, {1, 42, 49}, {29, 51}},
        {-2, {1, 49, 42}, {26}},
        {-2, {1, 3, 4}, {30, 20}}}},
      {NSClass{2, 2, {1, 0}},
       cat({{1, {1, 24}, {33}},
            {1, {1, 25}, {0}},
            {1, {1, 35}, {0}},
            {1, {1, 60}, {46}},
            {1, {1, 33, 43}, {3, 34}},
            {1, {1, 53, 53}, {24, 33}}},
           neg221A),
       {{1, {1, 3}, {42}},
        {1, {1, 7, 20}, {33, 46}},
        {1, {1, 38, 12}, {58, 6}},
        {1, {1, 42, 35}, {7, 41}},
        {-1, {1, 1}, {0}},
        {-1, {1, 11}, {42}},
        {-1, {1, 16}, {34}},
        {-1, {1, 26, 12}, {49, 29}},
        {-1, {1, 47, 5}, {7, 14}}}},
      {NSClass{2, 2, {1, 0}},
       cat({{1, {1, 10}, {23}},
            {1, {1, 20}, {1, 30}},
            {1, {1, 29}, {1}},
            {1, {1, 41}, {1, 33}},
            {1, {1, 6, 17}, {25, 16}},
            {1, {1, 25, 12}, {25, 47}}},
           neg221A),
       {{1, {1, 29}, {60}},
        {1, {1, 36}, {15}},
        {1, {1, 15, 58}, {41, 39}},
        {1, {1, 23, 2}, {33, 7}},
        {1, {1, 44, 33}, {35, 28}},
        {-1, {1, 1}, {0}},
        {-1, {1, 11}, {42}},
        {-1, {1, 16}, {34}},
        {-1, {1, 50}, {13}},
        {-1, {1, 26, 12}, {49, 29}},
        {-1, {1, 47, 5}, {7, 14}}}},
  };
}

inline gsieve::Divisor to_divisor(const std::vector<Term>& terms, const gsieve::Poly& f) {
  gsieve::Divisor D;
  for (auto& t : terms) {
    D.add(gsieve::place_from_notation(f, gsieve::poly_desc(f.field(), t.h), gsieve::poly_desc(f.field(), t.y)), t.mult);
  }
  return D;
}

/// Rows as (class, (A, B)) divisor pairs.
inline std::vector<std::pair<gsieve::NSClass, std::pair<gsieve::Divisor, gsieve::Divisor>>> divisors(const gsieve::Poly& f) {
  std::vector<std::pair<gsieve::NSClass, std::pair<gsieve::Divisor, gsieve::Divisor>>> out;
  for (auto& r : rows()) out.push_back({r.cls, {to_divisor(r.A, f), to_divisor(r.B, f)}});
  return out;
}

}  // namespace refrel
