#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsieve/curve/place.hpp"
#include "gsieve/ec/curve.hpp"

namespace gsieve {

/// Image of a place under the translation P -> P + T.
inline Place translate_place(const CurveFp& E, const Place& q, const PointFp& T) {
  const PrimeField& F = E.field();
  if (T.inf) return q;
  if (q.is_infinite()) return Place::split(Poly::linear_root(F, T.x), Poly::constant(F, T.y));
  auto pp = point_of_place(q, curve_poly(E));
  CurveExt C = lift_curve(E, pp.K);
  auto img = C.add(pp.pt, C.point(pp.K.from_fp(T.x), pp.K.from_fp(T.y)));
  if (img.inf) return Place::infinite(F);
  return place_of_point(pp.K, img);
}

inline Divisor translate_divisor(const CurveFp& E, const Divisor& D, const PointFp& T) {
  if (T.inf) return D;
  Divisor r;
  for (auto& [q, m] : D.terms()) r.add(translate_place(E, q, T), m);
  return r;
}

/// One side of the Galois-reduced factor basis: places grouped into orbits under translation by F.
/// The place at position k of an orbit is rep + kF.
struct FactorBasisSide {
  PointFp F;
  int d = 1;
  std::vector<Place> reps;
  std::vector<int> lengths;
  std::map<Place, std::pair<int, int>> index;

  std::size_t size() const { return reps.size(); }
  std::size_t count_of_degree(int deg) const {
    return static_cast<std::size_t>(std::count_if(reps.begin(), reps.end(), [&](const Place& q) { return q.degree() == deg; }));
  }
  bool contains(const Place& q) const { return index.count(q) != 0; }
  std::pair<int, int> locate(const Place& q) const {
    auto it = index.find(q);
    if (it == index.end()) throw std::out_of_range("factor basis: place not in basis " + q.to_string());
    return it->second;
  }
};

/// Orbits of the places under translation by F. Representatives are the canonically least members,
/// and orbits are listed in the order of their representatives.
inline FactorBasisSide galois_reduce(const CurveFp& E, const std::vector<Place>& places, const PointFp& F, int d) {
  std::map<Place, bool> in_set;
  for (auto& q : places) in_set[q] = true;
  std::map<Place, bool> seen;
  std::vector<std::vector<Place>> orbits;
  for (auto& q : places) {
    if (seen.count(q)) continue;
    std::vector<Place> orb{q};
    seen[q] = true;
    for (;;) {
      Place nxt = translate_place(E, orb.back(), F);
      if (nxt == q) break;
      if (!in_set.count(nxt)) throw std::logic_error("galois_reduce: translation leaves the place set at " + nxt.to_string());
      if (seen.count(nxt)) throw std::logic_error("galois_reduce: translation is not a permutation");
      seen[nxt] = true;
      orb.push_back(nxt);
    }
    auto it = std::min_element(orb.begin(), orb.end());
    std::rotate(orb.begin(), it, orb.end());
    orbits.push_back(std::move(orb));
  }
  std::sort(orbits.begin(), orbits.end(), [](auto& a, auto& b) { return a[0] < b[0]; });
  FactorBasisSide S;
  S.F = F;
  S.d = d;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    S.reps.push_back(orbits[o][0]);
    S.lengths.push_back(static_cast<int>(orbits[o].size()));
    for (std::size_t k = 0; k < orbits[o].size(); ++k) S.index[orbits[o][k]] = {static_cast<int>(o), static_cast<int>(k)};
  }
  return S;
}

/// Coefficients c_k of sum_k c_k p^k, k < d.
using ExpPoly = std::vector<long>;

/// Sparse row over the concatenated orbit columns of both sides. Column 0 of each side is the orbit of
/// the infinite place, whose log is that of the normalizing function f with divisor #E (F) - #E (inf).
struct RelationRow {
  std::map<int, ExpPoly> cols;

  bool empty() const { return cols.empty(); }
  friend bool operator==(const RelationRow&, const RelationRow&) = default;
  friend bool operator<(const RelationRow& a, const RelationRow& b) { return a.cols < b.cols; }
};

inline void add_place_to_row(RelationRow& row, const FactorBasisSide& S, int offset, const Place& q, long m) {
  auto [o, k] = S.locate(q);
  const int d = S.d;
  auto& fcol = row.cols[offset];
  if (fcol.empty()) fcol.assign(d, 0);
  if (o != 0) {
    auto& c = row.cols[offset + o];
    if (c.empty()) c.assign(d, 0);
    c[k] += m;
  }
  // bookkeeping for f: deg(q) (1 + p + ... + p^(k-1))
  for (int j = 0; j < k; ++j) fcol[j] += m * q.degree();
}

inline void prune_row(RelationRow& row) {
  for (auto it = row.cols.begin(); it != row.cols.end();) {
    if (std::all_of(it->second.begin(), it->second.end(), [](long v) { return v == 0; })) it = row.cols.erase(it);
    else ++it;
  }
}

/// Row of the relation log(DA) = log(DB): A-side columns [0, nA), B-side columns [nA, nA + nB).
inline RelationRow relation_row(const FactorBasisSide& A, const FactorBasisSide& B, const Divisor& DA, const Divisor& DB) {
  RelationRow row;
  for (auto& [q, m] : DA.terms()) add_place_to_row(row, A, 0, q, m);
  for (auto& [q, m] : DB.terms()) add_place_to_row(row, B, static_cast<int>(A.size()), q, -m);
  prune_row(row);
  return row;
}

/// Multiply a row by p^j, using p^d = 1 modulo the working prime.
inline RelationRow rotate_row(const RelationRow& r, int j) {
  RelationRow out;
  for (auto& [c, e] : r.cols) {
    const int d = static_cast<int>(e.size());
    ExpPoly v(d, 0);
    for (int k = 0; k < d; ++k) v[(k + j) % d] = e[k];
    out.cols[c] = std::move(v);
  }
  return out;
}

inline RelationRow negate_row(RelationRow r) {
  for (auto& [c, e] : r.cols) {
    for (auto& v : e) v = -v;
  }
  return r;
}

/// Least row among all p-power rotations and their negatives.
inline RelationRow canonical_row(const RelationRow& r) {
  if (r.empty()) return r;
  const int d = static_cast<int>(r.cols.begin()->second.size());
  RelationRow best = r;
  for (int j = 0; j < d; ++j) {
    RelationRow t = rotate_row(r, j);
    if (t < best) best = t;
    RelationRow n = negate_row(t);
    if (n < best) best = n;
  }
  return best;
}

inline std::string exppoly_to_string(const ExpPoly& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    long a = e[k] < 0 ? -e[k] : e[k];
    os << (first ? (e[k] < 0 ? "-" : "") : (e[k] < 0 ? " - " : " + "));
    first = false;
    if (k == 0) os << a;
    else os << (a != 1 ? std::to_string(a) + "*" : "") << "p" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return first ? "0" : os.str();
}

inline std::string row_to_string(const RelationRow& r) {
  std::ostringstream os;
  bool first = true;
  for (auto& [c, e] : r.cols) {
    os << (first ? "" : " ") << c << ":[" << exppoly_to_string(e) << "]";
    first = false;
  }
  return os.str();
}

}  // namespace gsieve
