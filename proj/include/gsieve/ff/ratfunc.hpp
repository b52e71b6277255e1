#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "gsieve/ff/poly.hpp"

namespace gsieve {

/// Rational function num/den over F_p, kept with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  explicit RatFunc(PrimeField F) : num_(F), den_(Poly::one(F)) {}
  RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}  // NOLINT
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc constant(PrimeField F, Fp a) { return RatFunc(Poly::constant(F, a)); }
  static RatFunc X(PrimeField F) { return RatFunc(Poly::X(F)); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  const PrimeField& field() const noexcept { return num_.field(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  /// max(deg num, deg den); the degree of the induced map P^1 -> P^1.
  int degree() const noexcept { return std::max(num_.degree(), den_.degree()); }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::one(den_.field());
      return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    if (!den_.is_monic()) {
      Fp il = field().inv(den_.lead());
      num_ = num_.scaled(il);
      den_ = den_.scaled(il);
    }
  }

  std::optional<Fp> eval(Fp x) const {
    Fp d = den_.eval(x);
    if (d.v == 0) return std::nullopt;
    return field().div(num_.eval(x), d);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc inv() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(std::string_view var = "x") const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  Poly num_, den_;
};

/// f(g) for rational f and g.
inline RatFunc compose(const RatFunc& f, const RatFunc& g) {
  const PrimeField& F = f.field();
  const int n = f.degree();
  std::vector<Poly> gn{Poly::one(F)}, gd{Poly::one(F)};
  for (int i = 1; i <= n; ++i) {
    gn.push_back(gn.back() * g.num());
    gd.push_back(gd.back() * g.den());
  }
  Poly num(F), den(F);
  for (int i = 0; i <= n; ++i) {
    Poly term = gn[i] * gd[n - i];
    num += term.scaled(f.num()[i]);
    den += term.scaled(f.den()[i]);
  }
  return RatFunc(num, den);
}

}  // namespace gsieve
