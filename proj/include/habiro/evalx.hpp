#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "format.hpp"
#include "habiro_ring.hpp"

namespace habiro {

// A specialization of a Habiro element: an integer residue modulo `modulus`,
// or (kind ModP) an element of F_p[q]/(Phi_r mod p).
struct ResidueValue {
  enum class Kind { Rational, PAdic, ModP };
  Kind kind = Kind::Rational;
  BigInt modulus = 1;  // m or p^e; p for ModP
  BigInt p = 0;
  int e = 0, r = 0;
  BigInt residue = 0;
  ModPoly poly;
  int terms_used = 0;  // number of (q)_n-terms that contributed (n0)
};

namespace detail {

inline BigInt pow_mod_signed(const BigInt& base, long e, const BigInt& m, const BigInt& base_inv) {
  BigInt r;
  const BigInt& b = e >= 0 ? base : base_inv;
  const unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e);
  mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), k, m.get_mpz_t());
  return r;
}

// c(alpha) mod m for a Laurent polynomial in q.
inline BigInt eval_at(const QPoly& c, const BigInt& alpha, const BigInt& alpha_inv, const BigInt& m) {
  BigInt s = 0;
  if (c.is_zero()) return s;
  for (int k = c.min_exp(); k <= c.max_exp(); ++k) {
    const BigInt& a = c.coeffs()[static_cast<std::size_t>(k - c.min_exp())];
    if (sgn(a) == 0) continue;
    s += a * pow_mod_signed(alpha, k, m, alpha_inv);
    s %= m;
  }
  return mod_nonneg(s, m);
}

inline BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw NotCoprime("not invertible modulo " + m.get_str());
  return r;
}

// sum_n c_n(alpha) (alpha)_n mod m, stopping once (alpha)_n is 0 mod m.
inline ResidueValue sum_until_vanishing(const HabiroElem& x, const BigInt& alpha, const BigInt& m, const std::string& what) {
  ResidueValue v;
  v.modulus = m;
  if (m == 1) return v;
  const BigInt alpha_inv = inverse_mod(alpha, m);
  BigInt poch = 1, total = 0;
  int n = 0;
  for (;; ++n) {
    if (n > 0) poch = mod_nonneg(poch * (1 - pow_mod_signed(alpha, n, m, alpha_inv)), m);
    if (poch == 0) break;
    if (n >= x.depth())
      throw DepthExceeded(what + " needs more than depth " + std::to_string(x.depth()) + " terms");
    total = mod_nonneg(total + eval_at(x.term(n), alpha, alpha_inv, m) * poch, m);
  }
  v.residue = total;
  v.terms_used = n;
  return v;
}

}  // namespace detail

// Value at q = a/b in Z/m. Terms stop at the first n with (a/b)_n = 0 mod m,
// which exists because a/b has finite multiplicative order modulo m.
inline ResidueValue eval_rational(const HabiroElem& x, const BigInt& a, const BigInt& b, const BigInt& m) {
  if (m < 1) throw DomainError("modulus must be positive");
  BigInt g;
  const BigInt ab = a * b;
  mpz_gcd(g.get_mpz_t(), ab.get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw NotCoprime("gcd(m, ab) = " + g.get_str() + " for m = " + m.get_str());
  if (m == 1) return ResidueValue{};
  const BigInt alpha = mod_nonneg(mod_nonneg(a, m) * detail::inverse_mod(mod_nonneg(b, m), m), m);
  ResidueValue v = detail::sum_until_vanishing(x, alpha, m, "eval_rational");
  v.kind = ResidueValue::Kind::Rational;
  return v;
}

// Value at q = s in Z/p^e for a p-adic unit s.
inline ResidueValue eval_padic(const HabiroElem& x, const BigInt& s, const BigInt& p, int e) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 25) == 0) throw DomainError("p must be prime");
  if (e < 1) throw DomainError("precision e must be positive");
  if (mod_nonneg(s, p) == 0) throw NotAUnit(s.get_str() + " is not a unit modulo " + p.get_str());
  BigInt m;
  mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  ResidueValue v = detail::sum_until_vanishing(x, mod_nonneg(s, m), m, "eval_padic");
  v.kind = ResidueValue::Kind::PAdic;
  v.p = p;
  v.e = e;
  return v;
}

// Value on all primitive r-th roots of unity in the algebraic closure of F_p.
inline ResidueValue modp_value(const HabiroElem& x, const BigInt& p, int r) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 25) == 0) throw DomainError("p must be prime");
  if (r < 1) throw DomainError("r must be positive");
  if (mod_nonneg(BigInt(r), p) == 0) throw NotCoprime("p divides r");
  if (r > x.depth()) throw DepthExceeded("modp_value at r = " + std::to_string(r) + " needs depth " + std::to_string(r));
  ResidueValue v;
  v.kind = ResidueValue::Kind::ModP;
  v.modulus = p;
  v.p = p;
  v.r = r;
  v.poly = reduce_mod(q_to_u(x.partial_sum(r)), cyclotomic(r), BaseRing::Fp(p), 4);
  v.terms_used = r;
  return v;
}

// True iff the mod-p value is nonzero at every primitive r-th root.
inline bool modp_nonvanishing(const HabiroElem& x, const BigInt& p, int r) {
  const ResidueValue v = modp_value(x, p, r);
  if (v.poly.is_zero()) return false;
  const auto g = polyops::gcd(v.poly.coeffs(), v.poly.modulus_coeffs(), v.poly.base());
  return g.size() == 1;
}

inline std::string to_string(const ResidueValue& v) {
  switch (v.kind) {
    case ResidueValue::Kind::ModP:
      return to_string(v.poly) + " in F_" + v.p.get_str() + "[q]/Phi_" + std::to_string(v.r);
    case ResidueValue::Kind::PAdic:
      return v.residue.get_str() + " mod " + v.p.get_str() + "^" + std::to_string(v.e);
    case ResidueValue::Kind::Rational:
      break;
  }
  return v.residue.get_str() + " mod " + v.modulus.get_str();
}

// CSV table of mod-p values: modulus-type, p, r, value-encoding, nonvanishing-flag.
inline std::string modp_scan_csv(const HabiroElem& x, const std::vector<long>& primes, const std::vector<int>& orders) {
  std::ostringstream os;
  os << "modulus-type,p,r,value,nonvanishing\n";
  for (long p : primes)
    for (int r : orders) {
      if (r % p == 0 || r > x.depth()) continue;
      const ResidueValue v = modp_value(x, BigInt(p), r);
      os << "modp," << p << "," << r << "," << to_string(v.poly) << "," << (modp_nonvanishing(x, BigInt(p), r) ? "true" : "false")
         << "\n";
    }
  return os.str();
}

}  // namespace habiro
