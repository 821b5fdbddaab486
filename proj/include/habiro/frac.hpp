#pragma once

#include <utility>

#include "laurent.hpp"

namespace habiro {

// Element of the fraction field Q(u). Kept in lowest terms: the polynomial
// gcd is cancelled, the denominator has minimal exponent 0, positive leading
// coefficient and the common integer content is removed.
class LaurentFrac {
 public:
  LaurentFrac() : den_(1) {}
  LaurentFrac(long c) : num_(c), den_(1) {}  // NOLINT
  LaurentFrac(LaurentU n) : num_(std::move(n)), den_(1) {}  // NOLINT
  LaurentFrac(LaurentU n, LaurentU d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw ZeroDenominator("LaurentFrac with zero denominator");
    reduce();
  }

  const LaurentU& num() const { return num_; }
  const LaurentU& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_monomial(); }

  // The Laurent polynomial this fraction equals; throws if it is not one.
  LaurentU to_laurent() const {
    if (!den_.is_monomial() || (den_.leading() != 1 && den_.leading() != -1))
      throw NonExactDivision("fraction is not a Laurent polynomial");
    LaurentU r = num_.shifted(-den_.min_exp());
    return den_.leading() == 1 ? r : -r;
  }

  friend LaurentFrac operator+(const LaurentFrac& a, const LaurentFrac& b) {
    if (a.den_ == b.den_) return LaurentFrac(a.num_ + b.num_, a.den_);
    return LaurentFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LaurentFrac operator-(const LaurentFrac& a, const LaurentFrac& b) { return a + (-b); }
  LaurentFrac operator-() const {
    LaurentFrac r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend LaurentFrac operator*(const LaurentFrac& a, const LaurentFrac& b) {
    return LaurentFrac(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend LaurentFrac operator/(const LaurentFrac& a, const LaurentFrac& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero fraction");
    return LaurentFrac(a.num_ * b.den_, a.den_ * b.num_);
  }
  LaurentFrac& operator+=(const LaurentFrac& o) { return *this = *this + o; }
  LaurentFrac& operator-=(const LaurentFrac& o) { return *this = *this - o; }
  LaurentFrac& operator*=(const LaurentFrac& o) { return *this = *this * o; }

  friend bool operator==(const LaurentFrac& a, const LaurentFrac& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  friend bool operator!=(const LaurentFrac& a, const LaurentFrac& b) { return !(a == b); }

  LaurentFrac conj() const { return LaurentFrac(num_.conj(), den_.conj()); }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = LaurentU(1);
      return;
    }
    if (!den_.is_monomial()) {
      LaurentU g = poly_gcd(num_, den_);
      if (g.max_exp() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
    const int shift = den_.min_exp();
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
    BigInt cn = content(num_), cd = content(den_);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (sgn(den_.leading()) < 0) g = -g;
    if (g != 1) {
      num_ = num_.exact_div(LaurentU::monomial(g, 0));
      den_ = den_.exact_div(LaurentU::monomial(g, 0));
    }
  }

  LaurentU num_;
  LaurentU den_;
};

}  // namespace habiro
