#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace habiro {

// Laurent polynomial in one anonymous variable with coefficients in C.
// Stored densely from the lowest nonzero exponent; the zero polynomial has
// no coefficients. Which variable it stands for (u, v = u^2 or q = u^4) is a
// convention of the caller; see the aliases below.
template <class C>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) {  // NOLINT: constants convert implicitly
    if (c != 0) c_.push_back(C(c));
  }

  static LaurentPoly monomial(C c, int exp) {
    LaurentPoly p;
    if (!habiro::is_zero(c)) {
      p.min_ = exp;
      p.c_.push_back(std::move(c));
    }
    return p;
  }
  static LaurentPoly x_pow(int exp) { return monomial(C(1), exp); }
  static LaurentPoly from_coeffs(int min_exp, std::vector<C> coeffs) {
    LaurentPoly p;
    p.min_ = min_exp;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int min_exp() const { return is_zero() ? 0 : min_; }
  int max_exp() const { return is_zero() ? 0 : min_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(int e) const {
    if (e < min_ || e > max_exp() || is_zero()) return C(0);
    return c_[e - min_];
  }
  const C& leading() const { return c_.back(); }
  const C& trailing() const { return c_.front(); }
  bool is_monomial() const { return c_.size() == 1; }
  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const C& a) { return !habiro::is_zero(a); }));
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, true); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.add_product(a, b);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_ == b.c_ && (a.is_zero() || a.min_ == b.min_);
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly scaled(const C& s) const {
    if (habiro::is_zero(s)) return {};
    LaurentPoly r = *this;
    for (auto& a : r.c_) a = a * s;
    return r;
  }

  // *this += a * b without a temporary. Zero coefficients of the shorter
  // factor are skipped, which matters for polynomials in u that only use
  // every second or fourth exponent.
  void add_product(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const LaurentPoly& s = a.c_.size() <= b.c_.size() ? a : b;
    const LaurentPoly& l = a.c_.size() <= b.c_.size() ? b : a;
    const int lo = s.min_ + l.min_;
    const int hi = s.max_exp() + l.max_exp();
    reserve_range(lo, hi);
    const std::size_t off = static_cast<std::size_t>(lo - min_);
    for (std::size_t i = 0; i < s.c_.size(); ++i) {
      if (habiro::is_zero(s.c_[i])) continue;
      const C& si = s.c_[i];
      C* dst = c_.data() + off + i;
      for (std::size_t j = 0; j < l.c_.size(); ++j) {
        if (habiro::is_zero(l.c_[j])) continue;
        dst[j] += si * l.c_[j];
      }
    }
    normalize();
  }

  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_ += k;
    return r;
  }
  // x -> x^{-1}
  LaurentPoly conj() const {
    LaurentPoly r;
    if (is_zero()) return r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.min_ = -max_exp();
    return r;
  }
  // x -> x^s for s >= 1
  LaurentPoly stretched(int s) const {
    if (is_zero() || s == 1) return *this;
    LaurentPoly r;
    r.min_ = min_ * s;
    r.c_.assign((c_.size() - 1) * s + 1, C(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * s] = c_[i];
    return r;
  }
  bool exponents_divisible_by(int s) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!habiro::is_zero(c_[i]) && (min_ + static_cast<int>(i)) % s != 0) return false;
    return true;
  }
  // Inverse of stretched; the caller guarantees divisibility.
  LaurentPoly compressed(int s) const {
    if (is_zero() || s == 1) return *this;
    LaurentPoly r;
    r.min_ = min_ / s;
    r.c_.reserve(c_.size() / s + 1);
    for (std::size_t i = 0; i < c_.size(); i += s) r.c_.push_back(c_[i]);
    return r;
  }

  template <class D>
  LaurentPoly<D> convert() const {
    std::vector<D> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(coeff_from_bigint<D>(to_bigint(a)));
    return LaurentPoly<D>::from_coeffs(min_, std::move(out));
  }

  // Exact quotient in the Laurent ring; throws NonExactDivision otherwise.
  LaurentPoly exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw NonExactDivision("division by zero");
    if (is_zero()) return {};
    if (d.c_.size() > c_.size()) throw NonExactDivision("divisor has larger span");
    std::vector<C> rem = c_;
    const std::size_t qn = c_.size() - d.c_.size() + 1;
    std::vector<C> quo(qn, C(0));
    const C& lead = d.c_.back();
    for (std::size_t k = qn; k-- > 0;) {
      C& top = rem[k + d.c_.size() - 1];
      if (habiro::is_zero(top)) continue;
      if (!divides(lead, top)) throw NonExactDivision("leading coefficient does not divide");
      C f = top / lead;
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        if (!habiro::is_zero(d.c_[j])) rem[k + j] -= f * d.c_[j];
      quo[k] = std::move(f);
    }
    for (const auto& r : rem)
      if (!habiro::is_zero(r)) throw NonExactDivision("nonzero remainder");
    return from_coeffs(min_ - d.min_, std::move(quo));
  }

 private:
  LaurentPoly& accumulate(const LaurentPoly& o, bool subtract) {
    if (o.is_zero()) return *this;
    reserve_range(o.min_, o.max_exp());
    const std::size_t off = static_cast<std::size_t>(o.min_ - min_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (subtract)
        c_[off + i] -= o.c_[i];
      else
        c_[off + i] += o.c_[i];
    }
    normalize();
    return *this;
  }

  void reserve_range(int lo, int hi) {
    if (is_zero()) {
      min_ = lo;
      c_.assign(static_cast<std::size_t>(hi - lo + 1), C(0));
      return;
    }
    if (lo < min_) {
      c_.insert(c_.begin(), static_cast<std::size_t>(min_ - lo), C(0));
      min_ = lo;
    }
    if (hi > max_exp()) c_.resize(static_cast<std::size_t>(hi - min_ + 1), C(0));
  }

  void normalize() {
    std::size_t b = 0;
    while (b < c_.size() && habiro::is_zero(c_[b])) ++b;
    if (b == c_.size()) {
      c_.clear();
      min_ = 0;
      return;
    }
    std::size_t e = c_.size();
    while (habiro::is_zero(c_[e - 1])) --e;
    c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(e), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(b));
    min_ += static_cast<int>(b);
  }

  int min_ = 0;
  std::vector<C> c_;
};

// Polynomials in u = q^{1/4}. Most of the library works in this ring; helpers
// that speak about q or v translate exponents by the factors 4 and 2.
using LaurentU = LaurentPoly<BigInt>;
// Laurent polynomial whose variable is q itself (compressed storage).
using QPoly = LaurentPoly<BigInt>;

inline LaurentU u_pow(int k) { return LaurentU::x_pow(k); }
inline LaurentU v_pow(int k) { return LaurentU::x_pow(2 * k); }
inline LaurentU q_pow(int k) { return LaurentU::x_pow(4 * k); }

inline LaurentU q_to_u(const QPoly& p) { return p.stretched(4); }
inline QPoly u_to_q(const LaurentU& p) {
  if (!p.exponents_divisible_by(4)) throw NotInQ("polynomial has exponents of u outside 4Z");
  return p.compressed(4);
}

// Integer content (gcd of coefficients, sign of the leading coefficient).
inline BigInt content(const LaurentU& p) {
  BigInt g = 0;
  for (const auto& a : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  if (!p.is_zero() && sgn(p.leading()) < 0) g = -g;
  return g;
}

inline LaurentU primitive_part(const LaurentU& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  std::vector<BigInt> c = p.coeffs();
  for (auto& a : c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return LaurentU::from_coeffs(p.min_exp(), std::move(c));
}

// Greatest common divisor in Z[x, x^{-1}], normalized to have minimal
// exponent 0 and positive leading coefficient. Primitive remainder sequence.
inline LaurentU poly_gcd(const LaurentU& a0, const LaurentU& b0) {
  if (a0.is_zero() && b0.is_zero()) return {};
  if (a0.is_zero() || b0.is_zero()) {
    LaurentU p = a0.is_zero() ? b0 : a0;
    p = p.shifted(-p.min_exp());
    return sgn(p.leading()) < 0 ? -p : p;
  }
  BigInt ca = content(a0), cb = content(b0);
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  std::vector<BigInt> a = primitive_part(a0.shifted(-a0.min_exp())).coeffs();
  std::vector<BigInt> b = primitive_part(b0.shifted(-b0.min_exp())).coeffs();
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // pseudo-remainder of a by b
    const BigInt lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
      const BigInt la = a.back();
      const std::size_t shift = a.size() - b.size();
      for (auto& x : a) x *= lb;
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
      while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
    }
    if (!a.empty()) a = primitive_part(LaurentU::from_coeffs(0, a)).coeffs();
    // from_coeffs strips low zeros; gcd is only up to units x^k so that is fine
    std::swap(a, b);
  }
  LaurentU g = LaurentU::from_coeffs(0, std::move(a));
  g = primitive_part(g.shifted(-g.min_exp()));
  return g.scaled(cg);
}

}  // namespace habiro
