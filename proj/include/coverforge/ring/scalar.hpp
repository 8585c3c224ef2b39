#pragma once

// Coefficient domains: arbitrary precision integers and rationals (GMP) and
// prime fields with a runtime modulus.
//
// Every ring type in the library provides the same free-function protocol:
//   zero_like(x), one_like(x), from_integer(x, n), is_zero(x), to_string(x),
//   try_inverse(x), is_unit(x), divides(a, b)
// and Euclidean domains additionally euclid_norm(x), divmod(a, b),
// unit_normal(x).  The overloads for the GMP classes live here so that they
// are visible before any template that calls them is defined.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "coverforge/error.hpp"

namespace coverforge {

using Integer = mpz_class;
using Rational = mpq_class;

// ---------------------------------------------------------------- Integer

inline Integer zero_like(const Integer&) { return 0; }
inline Integer one_like(const Integer&) { return 1; }
inline Integer from_integer(const Integer&, const Integer& n) { return n; }
inline bool is_zero(const Integer& a) { return sgn(a) == 0; }
inline std::string to_string(const Integer& a) { return a.get_str(); }

inline std::optional<Integer> try_inverse(const Integer& a) {
  if (a == 1 || a == -1) return a;
  return std::nullopt;
}
inline bool is_unit(const Integer& a) { return a == 1 || a == -1; }

/// q with b = a*q, if it exists.
inline std::optional<Integer> divides(const Integer& a, const Integer& b) {
  if (sgn(a) == 0) {
    if (sgn(b) == 0) return Integer(0);
    return std::nullopt;
  }
  if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return std::nullopt;
  Integer q;
  mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
  return q;
}

inline Integer euclid_norm(const Integer& a) { return abs(a); }

/// Floor division: b != 0, r in [0, |b|).
inline std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) < 0) {  // b < 0 leaves r in (b, 0]
    r -= b;
    q += 1;
  }
  return {q, r};
}

/// Unit u with u*a in canonical (non-negative) form.
inline Integer unit_normal(const Integer& a) { return sgn(a) < 0 ? -1 : 1; }

// --------------------------------------------------------------- Rational

inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }
inline Rational from_integer(const Rational&, const Integer& n) {
  return Rational(n);
}
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline std::string to_string(const Rational& a) { return a.get_str(); }

inline std::optional<Rational> try_inverse(const Rational& a) {
  if (sgn(a) == 0) return std::nullopt;
  Rational r = 1 / a;
  return r;
}
inline bool is_unit(const Rational& a) { return sgn(a) != 0; }

inline std::optional<Rational> divides(const Rational& a, const Rational& b) {
  if (sgn(a) == 0) {
    if (sgn(b) == 0) return Rational(0);
    return std::nullopt;
  }
  Rational q = b / a;
  return q;
}

inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
  r.canonicalize();
  return r;
}

// ------------------------------------------------------------ prime field

/// Element of Z/p, p prime, value kept in [0, p).
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::int64_t p) : p_(p) {
    if (p < 2) throw InvalidInput("GF(p) needs p >= 2");
    value_ = value % p;
    if (value_ < 0) value_ += p;
  }

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    check(a, b);
    std::int64_t v = a.value_ + b.value_;
    if (v >= a.p_) v -= a.p_;
    return raw(v, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check(a, b);
    std::int64_t v = a.value_ - b.value_;
    if (v < 0) v += a.p_;
    return raw(v, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check(a, b);
    auto v = static_cast<__int128>(a.value_) * b.value_ % a.p_;
    return raw(static_cast<std::int64_t>(v), a.p_);
  }
  Fp operator-() const { return raw(value_ == 0 ? 0 : p_ - value_, p_); }
  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }

  friend bool operator==(const Fp& a, const Fp& b) {
    check(a, b);
    return a.value_ == b.value_;
  }

  std::optional<Fp> inverse() const {
    if (value_ == 0) return std::nullopt;
    // extended Euclid on (value, p)
    std::int64_t r0 = p_, r1 = value_, t0 = 0, t1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      std::int64_t t2 = t0 - q * t1;
      r0 = r1, r1 = r2, t0 = t1, t1 = t2;
    }
    if (r0 != 1) throw InvalidInput("GF(p) modulus is not prime");
    return Fp(t0, p_);
  }

 private:
  static Fp raw(std::int64_t v, std::int64_t p) {
    Fp r;
    r.value_ = v;
    r.p_ = p;
    return r;
  }
  static void check(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_)
      throw RingMismatch("GF(" + std::to_string(a.p_) + ") vs GF(" +
                         std::to_string(b.p_) + ")");
  }

  std::int64_t value_ = 0;
  std::int64_t p_ = 2;
};

inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline Fp from_integer(const Fp& a, const Integer& n) {
  Integer r = n % a.modulus();
  return Fp(r.get_si(), a.modulus());
}
inline bool is_zero(const Fp& a) { return a.value() == 0; }
inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }
inline std::optional<Fp> try_inverse(const Fp& a) { return a.inverse(); }
inline bool is_unit(const Fp& a) { return a.value() != 0; }
inline std::optional<Fp> divides(const Fp& a, const Fp& b) {
  if (is_zero(a)) {
    if (is_zero(b)) return zero_like(a);
    return std::nullopt;
  }
  return b * *a.inverse();
}
inline std::ostream& operator<<(std::ostream& os, const Fp& a) {
  return os << a.value();
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ------------------------------------------------------------------ traits

template <class K>
struct is_field : std::false_type {};
template <>
struct is_field<Rational> : std::true_type {};
template <>
struct is_field<Fp> : std::true_type {};
template <class K>
inline constexpr bool is_field_v = is_field<K>::value;

}  // namespace coverforge
