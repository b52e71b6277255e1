#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsieve {

/// Element of a prime field, always kept in [0, p).
struct Fp {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Fp, Fp) = default;
  friend constexpr auto operator<=>(Fp, Fp) = default;
};

inline std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v; }

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t q = 17; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

}  // namespace detail

/// Arithmetic context for F_p with an odd prime p < 2^31.
///
/// The context is a small value type; polynomials and residue fields carry a
/// copy of it. Primality is checked once at construction.
class PrimeField {
 public:
  using Elem = Fp;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !detail::is_prime_u64(p)) {
      throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                  " is not an odd prime below 2^31");
    }
  }

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Fp zero() const noexcept { return Fp{0}; }
  Fp one() const noexcept { return Fp{1}; }

  Fp from_int(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fp{static_cast<std::uint32_t>(r)};
  }
  Fp from_fp(Fp a) const noexcept { return a; }
  Fp from_uint(std::uint64_t x) const noexcept {
    return Fp{static_cast<std::uint32_t>(x % p_)};
  }

  /// Signed representative in (-p/2, p/2].
  std::int64_t to_signed(Fp a) const noexcept {
    return a.v > p_ / 2 ? static_cast<std::int64_t>(a.v) - p_ : a.v;
  }

  bool is_zero(Fp a) const noexcept { return a.v == 0; }
  bool is_one(Fp a) const noexcept { return a.v == 1; }

  Fp add(Fp a, Fp b) const noexcept {
    std::uint32_t s = a.v + b.v;
    return Fp{s >= p_ ? s - p_ : s};
  }
  Fp sub(Fp a, Fp b) const noexcept {
    return Fp{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
  }
  Fp neg(Fp a) const noexcept { return Fp{a.v == 0 ? 0 : p_ - a.v}; }
  Fp mul(Fp a, Fp b) const noexcept {
    return Fp{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
  }

  Fp pow(Fp a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1, x = a.v;
    while (e) {
      if (e & 1) r = r * x % p_;
      x = x * x % p_;
      e >>= 1;
    }
    return Fp{static_cast<std::uint32_t>(r)};
  }

  Fp inv(Fp a) const {
    if (a.v == 0) throw std::domain_error("PrimeField::inv: zero is not invertible");
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, nt = 1, r = p_, nr = a.v;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return from_int(t);
  }

  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }
  Fp sqr(Fp a) const noexcept { return mul(a, a); }

  bool is_square(Fp a) const noexcept {
    return a.v == 0 || pow(a, (p_ - 1) / 2).v == 1;
  }

  /// Square root; uses the p = 3 mod 4 shortcut when available and
  /// Tonelli-Shanks otherwise. Returns the root with the smaller value.
  std::optional<Fp> sqrt(Fp a) const {
    if (a.v == 0) return Fp{0};
    if (!is_square(a)) return std::nullopt;
    Fp r;
    if (p_ % 4 == 3) {
      r = pow(a, (p_ + 1) / 4);
    } else {
      std::uint32_t q = p_ - 1, s = 0;
      while ((q & 1) == 0) {
        q >>= 1;
        ++s;
      }
      Fp z{2};
      while (is_square(z)) z = Fp{z.v + 1};
      Fp c = pow(z, q);
      r = pow(a, (q + 1) / 2);
      Fp t = pow(a, q);
      std::uint32_t m = s;
      while (t.v != 1) {
        std::uint32_t i = 0;
        Fp tt = t;
        while (tt.v != 1) {
          tt = mul(tt, tt);
          ++i;
        }
        Fp b = c;
        for (std::uint32_t j = 0; j + 1 < m - i; ++j) b = mul(b, b);
        r = mul(r, b);
        c = mul(b, b);
        t = mul(t, c);
        m = i;
      }
    }
    Fp other = neg(r);
    return other.v < r.v ? other : r;
  }

  /// Multiplicative order of a nonzero element, given the factorization of p-1.
  template <class PrimeList>
  std::uint64_t order(Fp a, const PrimeList& primes_of_p_minus_1) const {
    std::uint64_t n = p_ - 1;
    for (std::uint64_t q : primes_of_p_minus_1) {
      while (n % q == 0 && pow(a, n / q).v == 1) n /= q;
    }
    return n;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
};

/// Distinct prime factors of n by trial division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace gsieve
