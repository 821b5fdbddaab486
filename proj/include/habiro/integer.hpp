#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace habiro {

using BigInt = mpz_class;
using BigRat = mpq_class;

// A 64-bit integer that refuses to wrap around. The tensor contraction runs
// on this type first and restarts on BigInt when CoefficientOverflow escapes.
class Checked64 {
 public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT: implicit by design

  constexpr std::int64_t value() const { return v_; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (b.v_ == -1) return Checked64(0) - a;
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const { return Checked64(0) - *this; }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }
  friend bool operator==(Checked64 a, Checked64 b) { return a.v_ == b.v_; }
  friend bool operator<(Checked64 a, Checked64 b) { return a.v_ < b.v_; }

 private:
  [[noreturn]] static void overflow() { throw CoefficientOverflow("64-bit fast path overflowed"); }
  std::int64_t v_ = 0;
};

// Small adapters so templates can treat both coefficient types alike.
inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }
inline bool is_zero(Checked64 a) { return a.value() == 0; }
inline int sign_of(const BigInt& a) { return sgn(a); }
inline int sign_of(Checked64 a) { return (a.value() > 0) - (a.value() < 0); }
inline bool divides(const BigInt& d, const BigInt& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }
inline bool divides(Checked64 d, Checked64 a) { return d.value() != 0 && a.value() % d.value() == 0; }
inline BigInt to_bigint(const BigInt& a) { return a; }
inline BigInt to_bigint(Checked64 a) { return BigInt(static_cast<long>(a.value())); }

template <class C>
C coeff_from_bigint(const BigInt& a);

template <>
inline BigInt coeff_from_bigint<BigInt>(const BigInt& a) {
  return a;
}

template <>
inline Checked64 coeff_from_bigint<Checked64>(const BigInt& a) {
  if (!a.fits_slong_p()) throw CoefficientOverflow("value does not fit 64 bits");
  return Checked64(a.get_si());
}

inline BigInt binomial(long n, long k) {
  // Generalized binomial n(n-1)...(n-k+1)/k!, valid for negative n.
  if (k < 0) return 0;
  BigInt num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return num / den;
}

// a mod m in [0, m)
inline BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline BigRat make_rat(long a, long b) {
  BigRat r(a, b);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

inline std::string to_string(const BigRat& a) {
  BigRat c = a;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace habiro
