#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsieve/ff/prime_field.hpp"

namespace gsieve {

/// Dense univariate polynomial over F_p, coefficients in ascending order.
///
/// Invariant: no trailing zero coefficients; the zero polynomial has an empty
/// coefficient vector and degree -1.
class Poly {
 public:
  explicit Poly(PrimeField F) : F_(F) {}
  Poly(PrimeField F, std::vector<Fp> c) : F_(F), c_(std::move(c)) { trim(); }

  static Poly from_ints(PrimeField F, const std::vector<std::int64_t>& c) {
    std::vector<Fp> v;
    v.reserve(c.size());
    for (auto x : c) v.push_back(F.from_int(x));
    return Poly(F, std::move(v));
  }
  static Poly from_ints(PrimeField F, std::initializer_list<std::int64_t> c) {
    return from_ints(F, std::vector<std::int64_t>(c));
  }
  static Poly constant(PrimeField F, Fp a) { return Poly(F, {a}); }
  static Poly one(PrimeField F) { return Poly(F, {Fp{1}}); }
  static Poly X(PrimeField F) { return Poly(F, {Fp{0}, Fp{1}}); }
  static Poly monomial(PrimeField F, Fp a, std::size_t k) {
    std::vector<Fp> v(k + 1);
    v[k] = a;
    return Poly(F, std::move(v));
  }
  /// x - a
  static Poly linear_root(PrimeField F, Fp a) { return Poly(F, {F.neg(a), Fp{1}}); }

  const PrimeField& field() const noexcept { return F_; }
  const std::vector<Fp>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].v == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().v == 1; }
  Fp operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Fp{0}; }
  Fp lead() const noexcept { return c_.empty() ? Fp{0} : c_.back(); }

  void set_coeff(std::size_t i, Fp a) {
    if (i >= c_.size()) c_.resize(i + 1);
    c_[i] = a;
    trim();
  }

  Fp eval(Fp x) const noexcept {
    Fp r{0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = F_.add(F_.mul(r, x), *it);
    return r;
  }

  Poly derivative() const {
    std::vector<Fp> d;
    if (c_.size() > 1) d.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = F_.mul(c_[i], F_.from_uint(i));
    return Poly(F_, std::move(d));
  }

  Poly monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(F_.inv(lead()));
  }

  Poly scaled(Fp a) const {
    if (a.v == 0) return Poly(F_);
    std::vector<Fp> v(c_);
    for (auto& x : v) x = F_.mul(x, a);
    return Poly(F_, std::move(v));
  }

  /// Multiply by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Fp> v(k, Fp{0});
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(F_, std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly operator-() const {
    std::vector<Fp> v(c_);
    for (auto& x : v) x = F_.neg(x);
    return Poly(F_, std::move(v));
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.F_);
    const std::uint64_t p = a.F_.modulus();
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
    const std::size_t n = a.c_.size(), m = b.c_.size();
    std::vector<Fp> r(n + m - 1);
    for (std::size_t k = 0; k < n + m - 1; ++k) {
      std::size_t lo = k >= m - 1 ? k - (m - 1) : 0;
      std::size_t hi = std::min(k, n - 1);
      std::uint64_t acc = 0;
      for (std::size_t i = lo; i <= hi; ++i) {
        acc += static_cast<std::uint64_t>(a.c_[i].v) * b.c_[k - i].v;
        if (acc >= kLimit) acc %= p;
      }
      r[k] = Fp{static_cast<std::uint32_t>(acc % p)};
    }
    return Poly(a.F_, std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(Fp s, const Poly& a) { return a.scaled(s); }

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.F_ == b.F_ && a.c_ == b.c_;
  }

  /// Quotient and remainder; throws on division by zero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    const PrimeField& F = a.F_;
    if (a.degree() < b.degree()) return {Poly(F), a};
    std::vector<Fp> r(a.c_);
    const std::size_t db = b.c_.size() - 1;
    std::vector<Fp> q(a.c_.size() - db);
    const Fp il = F.inv(b.lead());
    const bool monic = b.lead().v == 1;
    for (std::size_t i = r.size(); i-- > db;) {
      Fp c = r[i];
      if (c.v == 0) continue;
      if (!monic) c = F.mul(c, il);
      q[i - db] = c;
      const Fp nc = F.neg(c);
      for (std::size_t j = 0; j <= db; ++j) {
        r[i - db + j] = F.add(r[i - db + j], F.mul(nc, b.c_[j]));
      }
    }
    r.resize(db);
    return {Poly(F, std::move(q)), Poly(F, std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    if (a.degree() < b.degree()) return a;
    return divmod(a, b).second;
  }

  /// Ascending coefficient list, e.g. "[58,4,0,10,0,3,0,1]".
  std::string to_list() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].v;
    os << ']';
    return os.str();
  }

  /// Human-readable form, highest degree first: "x^2 + 37*x + 54".
  std::string to_string(std::string_view var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].v == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << c_[i].v;
      } else {
        if (c_[i].v != 1) os << c_[i].v << '*';
        os << var;
        if (i > 1) os << '^' << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
  }

  PrimeField F_;
  std::vector<Fp> c_;
};

/// Parse an ascending coefficient list such as "[58,4,0,10,0,3,0,1]".
inline Poly parse_coeff_list(PrimeField F, std::string_view s) {
  std::vector<std::int64_t> v;
  std::string cur;
  bool open = false;
  for (char ch : s) {
    if (ch == '[') {
      open = true;
    } else if (ch == ',' || ch == ']') {
      if (!cur.empty()) v.push_back(std::stoll(cur));
      cur.clear();
      if (ch == ']') break;
    } else if (ch == '-' || (ch >= '0' && ch <= '9')) {
      cur.push_back(ch);
    } else if (ch != ' ' && ch != '\t') {
      throw std::invalid_argument("parse_coeff_list: unexpected character in '" +
                                  std::string(s) + "'");
    }
  }
  if (!open) throw std::invalid_argument("parse_coeff_list: missing '['");
  return Poly::from_ints(F, v);
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
struct XgcdResult {
  Poly g, s, t;
};

inline XgcdResult xgcd(const Poly& a, const Poly& b) {
  const PrimeField& F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(F), s1(F);
  Poly t0(F), t1 = Poly::one(F);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Fp il = F.inv(r0.lead());
  return {r0.scaled(il), s0.scaled(il), t0.scaled(il)};
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline Poly invmod(const Poly& a, const Poly& m) {
  auto r = xgcd(a % m, m);
  if (!r.g.is_one()) throw std::domain_error("invmod: polynomial is not invertible modulo m");
  return r.s % m;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::one(m.field()) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return r;
}

/// f(g) by Horner's rule.
inline Poly compose(const Poly& f, const Poly& g) {
  Poly r(f.field());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = r * g + Poly::constant(f.field(), c[i]);
  return r;
}

/// f(g) mod m.
inline Poly compose_mod(const Poly& f, const Poly& g, const Poly& m) {
  Poly r(f.field());
  const Poly gm = g % m;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    r = mulmod(r, gm, m) + Poly::constant(f.field(), c[i]);
  }
  return r % m;
}

/// Multiplicity of the irreducible h in f (f nonzero).
inline int valuation(Poly f, const Poly& h) {
  if (f.is_zero()) throw std::domain_error("valuation of the zero polynomial");
  int v = 0;
  for (;;) {
    auto [q, r] = divmod(f, h);
    if (!r.is_zero()) return v;
    f = std::move(q);
    ++v;
  }
}

/// Lexicographic comparison from the highest coefficient down; degree first.
inline bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace gsieve
