#pragma once

#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace habiro {

// Coefficient ring of a quotient ring B[x]/(f).
struct BaseRing {
  enum class Kind { Integers, IntegersMod, PrimeField, Rationals };
  Kind kind = Kind::Integers;
  BigInt modulus = 0;  // for IntegersMod and PrimeField

  static BaseRing Z() { return {}; }
  static BaseRing Q() { return {Kind::Rationals, 0}; }
  static BaseRing Zmod(const BigInt& m) {
    if (m < 2) throw DomainError("modulus must be at least 2");
    return {Kind::IntegersMod, m};
  }
  static BaseRing Fp(const BigInt& p) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw DomainError("F_p needs a prime, got " + p.get_str());
    return {Kind::PrimeField, p};
  }
  bool is_field() const { return kind == Kind::Rationals || kind == Kind::PrimeField; }
  bool modular() const { return kind == Kind::IntegersMod || kind == Kind::PrimeField; }

  std::string name() const {
    switch (kind) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      case Kind::IntegersMod: return "Z/" + modulus.get_str();
      case Kind::PrimeField: return "F_" + modulus.get_str();
    }
    return "?";
  }

  BigRat normalize(const BigRat& a0) const {
    BigRat a = a0;
    a.canonicalize();
    switch (kind) {
      case Kind::Rationals: return a;
      case Kind::Integers:
        if (a.get_den() != 1) throw DomainError("non-integral coefficient in a Z-algebra");
        return a;
      default: {
        BigInt inv;
        if (mpz_invert(inv.get_mpz_t(), a.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0)
          throw NotAUnit("denominator not invertible modulo " + modulus.get_str());
        BigInt r = a.get_num() * inv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
        return BigRat(r);
      }
    }
  }

  BigRat inverse(const BigRat& a) const {
    BigRat n = normalize(a);
    if (sgn(n) == 0) throw NotAUnit("zero is not invertible");
    if (kind == Kind::Rationals) return 1 / n;
    if (kind == Kind::Integers) {
      if (n == 1 || n == -1) return n;
      throw NotAUnit(n.get_num().get_str() + " is not a unit in Z");
    }
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), n.get_num().get_mpz_t(), modulus.get_mpz_t()) == 0)
      throw NotAUnit(n.get_num().get_str() + " is not a unit modulo " + modulus.get_str());
    return BigRat(inv);
  }
  bool is_unit(const BigRat& a) const {
    BigRat n = normalize(a);
    if (sgn(n) == 0) return false;
    if (kind == Kind::Rationals) return true;
    if (kind == Kind::Integers) return n == 1 || n == -1;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), n.get_num().get_mpz_t(), modulus.get_mpz_t());
    return g == 1;
  }

  friend bool operator==(const BaseRing& a, const BaseRing& b) { return a.kind == b.kind && a.modulus == b.modulus; }
};

namespace polyops {

using Vec = std::vector<BigRat>;

inline void trim(Vec& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline Vec normalized(Vec a, const BaseRing& R) {
  for (auto& c : a) c = R.normalize(c);
  trim(a);
  return a;
}

inline Vec mul(const Vec& a, const Vec& b, const BaseRing& R) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return normalized(std::move(r), R);
}

// Division with remainder; requires the leading coefficient of d to be a unit.
inline std::pair<Vec, Vec> divmod(Vec a, const Vec& d, const BaseRing& R) {
  if (d.empty()) throw DomainError("polynomial division by zero");
  BigRat inv = R.inverse(d.back());
  Vec q(a.size() >= d.size() ? a.size() - d.size() + 1 : 0, BigRat(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    BigRat f = R.normalize(a[k + d.size() - 1] * inv);
    if (sgn(f) == 0) continue;
    q[k] = f;
    for (std::size_t j = 0; j < d.size(); ++j) a[k + j] = R.normalize(a[k + j] - f * d[j]);
  }
  a.resize(std::min(a.size(), d.size() - 1));
  trim(a);
  trim(q);
  return {q, a};
}

inline Vec sub(Vec a, const Vec& b, const BaseRing& R) {
  if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return normalized(std::move(a), R);
}

// Monic gcd over a field.
inline Vec gcd(Vec a, Vec b, const BaseRing& R) {
  if (!R.is_field()) throw DomainError("gcd requires a field");
  a = normalized(std::move(a), R);
  b = normalized(std::move(b), R);
  while (!b.empty()) {
    Vec r = divmod(a, b, R).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    BigRat inv = R.inverse(a.back());
    for (auto& c : a) c = R.normalize(c * inv);
  }
  return a;
}

// Inverse of a modulo f over a field, via the extended Euclidean algorithm.
inline Vec inverse_mod(const Vec& a0, const Vec& f, const BaseRing& R) {
  Vec r0 = f, r1 = divmod(a0, f, R).second;
  Vec s0, s1{BigRat(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, R);
    Vec s = sub(s0, mul(q, s1, R), R);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw NotAUnit("element is a zero divisor in the quotient ring");
  BigRat inv = R.inverse(r0[0]);
  for (auto& c : s0) c = R.normalize(c * inv);
  return divmod(s0, f, R).second;
}

}  // namespace polyops

// Element of B[x]/(f) with f monic. The variable x is recorded as the power
// of u it stands for (1: u, 2: v, 4: q); it only matters for printing and for
// reducing Laurent polynomials given in u.
class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(BaseRing base, LaurentU modulus, std::vector<BigRat> coeffs, int var_step = 4)
      : base_(std::move(base)), var_step_(var_step) {
    if (modulus.is_zero() || modulus.min_exp() != 0 || modulus.max_exp() < 1)
      throw DomainError("modulus must be a polynomial of positive degree");
    if (modulus.leading() != 1) throw DomainError("modulus must be monic");
    for (const auto& c : modulus.coeffs()) mod_.push_back(BigRat(c));
    mod_ = polyops::normalized(mod_, base_);
    c_ = polyops::divmod(polyops::normalized(std::move(coeffs), base_), mod_, base_).second;
  }

  const BaseRing& base() const { return base_; }
  int var_step() const { return var_step_; }
  const std::vector<BigRat>& coeffs() const { return c_; }
  const std::vector<BigRat>& modulus_coeffs() const { return mod_; }
  int degree_bound() const { return static_cast<int>(mod_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(0); }

  ModPoly with_coeffs(std::vector<BigRat> c) const {
    ModPoly r = *this;
    r.c_ = polyops::divmod(polyops::normalized(std::move(c), base_), mod_, base_).second;
    return r;
  }
  ModPoly constant(const BigRat& a) const { return with_coeffs({a}); }

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    a.check_compatible(b);
    std::vector<BigRat> c = a.c_;
    if (c.size() < b.c_.size()) c.resize(b.c_.size(), BigRat(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return a.with_coeffs(std::move(c));
  }
  ModPoly operator-() const {
    std::vector<BigRat> c = c_;
    for (auto& x : c) x = -x;
    return with_coeffs(std::move(c));
  }
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b) { return a + (-b); }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    a.check_compatible(b);
    return a.with_coeffs(polyops::mul(a.c_, b.c_, a.base_));
  }
  friend bool operator==(const ModPoly& a, const ModPoly& b) {
    return a.base_ == b.base_ && a.mod_ == b.mod_ && a.c_ == b.c_;
  }
  friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }

  ModPoly inverse() const {
    if (!base_.is_field()) throw DomainError("inverse needs a field base");
    return with_coeffs(polyops::inverse_mod(c_, mod_, base_));
  }
  ModPoly pow(long e) const {
    ModPoly r = constant(1), b = *this;
    if (e < 0) {
      b = b.inverse();
      e = -e;
    }
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }
  // The class of the variable x.
  ModPoly x() const { return with_coeffs({BigRat(0), BigRat(1)}); }

  // Change of base: reduce integer or rational coefficients into another ring.
  ModPoly rebased(const BaseRing& to) const {
    LaurentU m;
    std::vector<BigInt> mc;
    for (const auto& c : mod_) {
      if (c.get_den() != 1) throw DomainError("modulus not integral");
      mc.push_back(c.get_num());
    }
    return ModPoly(to, LaurentU::from_coeffs(0, mc), c_, var_step_);
  }

  bool is_constant() const { return c_.size() <= 1; }

 private:
  void check_compatible(const ModPoly& o) const {
    if (!(base_ == o.base_) || mod_ != o.mod_) throw ShapeMismatch("ModPoly operands live in different rings");
  }

  BaseRing base_;
  std::vector<BigRat> mod_;
  std::vector<BigRat> c_;
  int var_step_ = 4;
};

// Image of a in B[x]/(f) where x = u^{var_step}. Negative powers use the
// inverse of x modulo f, which exists iff f(0) is a unit of B.
inline ModPoly reduce_mod(const LaurentU& a, const LaurentU& f, const BaseRing& base, int var_step = 4) {
  if (!a.exponents_divisible_by(var_step)) throw NotInQ("exponents of u not divisible by the variable step");
  LaurentU p = a.compressed(var_step);
  ModPoly zero(base, f, {}, var_step);
  int lo = p.min_exp();
  std::vector<BigRat> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  ModPoly body = zero.with_coeffs(std::move(c));
  if (lo >= 0) return body * zero.x().pow(lo);
  BigRat f0 = BigRat(f.coeff(0));
  if (!base.is_unit(f0)) throw NonInvertibleVariable("constant term of the modulus is not a unit");
  // x^{-1} = -(f(x) - f(0)) / (x f(0))
  std::vector<BigRat> g;
  BigRat inv0 = base.inverse(f0);
  for (int i = 1; i <= f.max_exp(); ++i) g.push_back(-BigRat(f.coeff(i)) * inv0);
  ModPoly xinv = zero.with_coeffs(std::move(g));
  return body * xinv.pow(-lo);
}

}  // namespace habiro
