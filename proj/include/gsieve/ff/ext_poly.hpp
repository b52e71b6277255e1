#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gsieve/ff/factor.hpp"
#include "gsieve/ff/residue_field.hpp"

namespace gsieve {

/// Univariate polynomial over a residue field K. The field must outlive the polynomial.
class ExtPoly {
 public:
  using Elem = ResidueField::Elem;

  explicit ExtPoly(const ResidueField& K) : K_(&K) {}
  ExtPoly(const ResidueField& K, std::vector<Elem> c) : K_(&K), c_(std::move(c)) { trim(); }
  /// Lift a polynomial over F_p.
  static ExtPoly lift(const ResidueField& K, const Poly& f) {
    std::vector<Elem> c;
    for (auto a : f.coeffs()) c.push_back(K.from_fp(a));
    return ExtPoly(K, std::move(c));
  }

  const ResidueField& field() const noexcept { return *K_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : K_->zero(); }
  Elem lead() const { return c_.empty() ? K_->zero() : c_.back(); }

  ExtPoly monic() const {
    if (c_.empty()) return *this;
    Elem il = K_->inv(lead());
    std::vector<Elem> v;
    for (auto& a : c_) v.push_back(K_->mul(a, il));
    return ExtPoly(*K_, std::move(v));
  }

  friend ExtPoly operator+(const ExtPoly& a, const ExtPoly& b) {
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), a.K_->zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.K_->add(a[i], b[i]);
    return ExtPoly(*a.K_, std::move(v));
  }
  friend ExtPoly operator-(const ExtPoly& a, const ExtPoly& b) {
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), a.K_->zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.K_->sub(a[i], b[i]);
    return ExtPoly(*a.K_, std::move(v));
  }
  friend ExtPoly operator*(const ExtPoly& a, const ExtPoly& b) {
    if (a.is_zero() || b.is_zero()) return ExtPoly(*a.K_);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, a.K_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    for (auto& x : v) x = a.K_->reduce(x);
    return ExtPoly(*a.K_, std::move(v));
  }

  friend std::pair<ExtPoly, ExtPoly> divmod(const ExtPoly& a, const ExtPoly& b) {
    if (b.is_zero()) throw std::domain_error("ExtPoly: division by zero polynomial");
    const ResidueField& K = *a.K_;
    if (a.degree() < b.degree()) return {ExtPoly(K), a};
    std::vector<Elem> r(a.c_);
    const std::size_t db = b.c_.size() - 1;
    std::vector<Elem> q(a.c_.size() - db, K.zero());
    const Elem il = K.inv(b.lead());
    for (std::size_t i = r.size(); i-- > db;) {
      if (r[i].is_zero()) continue;
      Elem c = K.mul(r[i], il);
      q[i - db] = c;
      for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = K.sub(r[i - db + j], K.mul(c, b.c_[j]));
    }
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(db), r.end());
    return {ExtPoly(K, std::move(q)), ExtPoly(K, std::move(r))};
  }
  friend ExtPoly operator%(const ExtPoly& a, const ExtPoly& b) { return divmod(a, b).second; }
  friend ExtPoly operator/(const ExtPoly& a, const ExtPoly& b) { return divmod(a, b).first; }

  Elem eval(const Elem& x) const {
    Elem r = K_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = K_->add(K_->mul(r, x), *it);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  const ResidueField* K_;
  std::vector<Elem> c_;
};

inline ExtPoly gcd(ExtPoly a, ExtPoly b) {
  while (!b.is_zero()) {
    ExtPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline ExtPoly powmod(ExtPoly base, std::uint64_t e, const ExtPoly& m) {
  ExtPoly r(m.field(), {m.field().one()});
  r = r % m;
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return r;
}

namespace detail {

inline void split_linear(const ExtPoly& f, std::mt19937_64& rng, std::vector<ExtPoly>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(f);
    return;
  }
  const ResidueField& K = f.field();
  const std::uint32_t p = K.characteristic();
  for (;;) {
    ExtPoly a(K, {K.random(rng), K.one()});
    ExtPoly t = a % f, n = t;
    for (int i = 1; i < K.degree(); ++i) {
      t = powmod(t, p, f);
      n = (n * t) % f;
    }
    ExtPoly w = powmod(n, (p - 1) / 2, f);
    ExtPoly g = gcd(w - ExtPoly(K, {K.one()}), f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_linear(g, rng, out);
      split_linear(f / g, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// All roots of f (over F_p) lying in K, in canonical order.
inline std::vector<ResidueElem> poly_roots_ext(const Poly& f, const ResidueField& K,
                                               std::uint64_t seed = kDefaultSeed) {
  if (f.is_zero()) throw std::domain_error("poly_roots_ext: zero polynomial");
  std::vector<ResidueElem> out;
  if (f.degree() < 1) return out;
  std::mt19937_64 rng(seed);
  // only irreducible factors with degree dividing [K:F_p] contribute
  for (auto& t : poly_factor(f, seed).terms) {
    if (K.degree() % t.factor.degree() != 0) continue;
    std::vector<ExtPoly> lin;
    detail::split_linear(ExtPoly::lift(K, t.factor), rng, lin);
    for (auto& l : lin) out.push_back(K.neg(l[0]));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

}  // namespace gsieve
