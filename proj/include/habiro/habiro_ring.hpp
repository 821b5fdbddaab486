#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "cyclotomic.hpp"
#include "modpoly.hpp"
#include "qcomb.hpp"

namespace habiro {

inline constexpr int kDefaultDepth = 10;

// (q)_n as a polynomial in q (compressed storage), cached.
inline const QPoly& qpoch(int n) {
  static std::mutex mutex;
  static std::vector<QPoly> cache{QPoly(1)};
  std::lock_guard<std::mutex> g(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    const int j = static_cast<int>(cache.size());
    cache.push_back(cache.back() * (QPoly(1) - QPoly::x_pow(j)));
  }
  return cache[static_cast<std::size_t>(n)];
}

// Truncated element of the Habiro ring: sum_{n < depth} c_n(q) (q)_n, known
// modulo (q)_depth. The c_n are Laurent polynomials in q.
class HabiroElem {
 public:
  HabiroElem() : HabiroElem(kDefaultDepth) {}
  explicit HabiroElem(int depth) : terms_(static_cast<std::size_t>(check_depth(depth))) {}
  HabiroElem(int depth, std::vector<QPoly> terms) : terms_(std::move(terms)) {
    check_depth(depth);
    if (static_cast<int>(terms_.size()) > depth) throw ShapeMismatch("more terms than depth");
    terms_.resize(static_cast<std::size_t>(depth));
  }
  static HabiroElem constant(const QPoly& c, int depth = kDefaultDepth) {
    HabiroElem r(depth);
    r.terms_[0] = c;
    return r;
  }
  static HabiroElem one(int depth = kDefaultDepth) { return constant(QPoly(1), depth); }

  int depth() const { return static_cast<int>(terms_.size()); }
  const std::vector<QPoly>& terms() const { return terms_; }
  const QPoly& term(int n) const { return terms_.at(static_cast<std::size_t>(n)); }
  QPoly& term(int n) { return terms_.at(static_cast<std::size_t>(n)); }

  HabiroElem truncated(int d) const {
    if (d > depth()) throw DepthExceeded("cannot raise depth from " + std::to_string(depth()) + " to " + std::to_string(d));
    return HabiroElem(d, std::vector<QPoly>(terms_.begin(), terms_.begin() + d));
  }

  friend HabiroElem operator+(const HabiroElem& a, const HabiroElem& b) {
    const int d = std::min(a.depth(), b.depth());
    HabiroElem r(d);
    for (int n = 0; n < d; ++n) r.term(n) = a.term(n) + b.term(n);
    return r;
  }
  HabiroElem operator-() const {
    HabiroElem r = *this;
    for (auto& t : r.terms_) t = -t;
    return r;
  }
  friend HabiroElem operator-(const HabiroElem& a, const HabiroElem& b) { return a + (-b); }

  // (q)_m (q)_n = (q)_max * (q)_min, so the product lands in slot max(m, n).
  friend HabiroElem operator*(const HabiroElem& a, const HabiroElem& b) {
    const int d = std::min(a.depth(), b.depth());
    HabiroElem r(d);
    for (int m = 0; m < d; ++m) {
      if (a.term(m).is_zero()) continue;
      for (int n = 0; n < d; ++n) {
        if (b.term(n).is_zero()) continue;
        const int hi = std::max(m, n), lo = std::min(m, n);
        r.term(hi) += a.term(m) * b.term(n) * qpoch(lo);
      }
    }
    return r;
  }

  // Sum of the first k terms as a Laurent polynomial in q.
  QPoly partial_sum(int k) const {
    if (k > depth()) throw DepthExceeded("need depth " + std::to_string(k) + ", have " + std::to_string(depth()));
    QPoly s;
    for (int n = 0; n < k; ++n)
      if (!terms_[static_cast<std::size_t>(n)].is_zero()) s += terms_[static_cast<std::size_t>(n)] * qpoch(n);
    return s;
  }

 private:
  static int check_depth(int d) {
    if (d < 1) throw DomainError("depth must be at least 1");
    return d;
  }
  std::vector<QPoly> terms_;
};

// Canonical representative of x modulo (q)_d: a polynomial in q with
// nonnegative exponents and degree < d(d+1)/2.
inline QPoly reduce(const HabiroElem& x, int d) {
  if (d < 1) throw DomainError("reduce needs d >= 1");
  QPoly s = x.partial_sum(d);
  const QPoly& f = qpoch(d);
  if (s.is_zero()) return s;
  if (s.min_exp() < 0) {
    // (q)_d = 1 + q g(q) gives q^{-1} = -g(q) modulo (q)_d.
    QPoly g = (f - QPoly(1)).shifted(-1);
    QPoly minus_g = -g;
    QPoly factor(1);
    for (int k = 0; k < -s.min_exp(); ++k) factor = factor * minus_g;
    s = s.shifted(-s.min_exp()) * factor;
  }
  ModPoly m = reduce_mod(q_to_u(s), f.leading() == 1 ? f : -f, BaseRing::Z(), 4);
  std::vector<BigInt> c;
  for (const auto& a : m.coeffs()) c.push_back(a.get_num());
  return QPoly::from_coeffs(0, std::move(c));
}

inline bool equals_at_depth(const HabiroElem& a, const HabiroElem& b, int d) { return reduce(a - b, d).is_zero(); }

// Image under Z[q] -> Z[q]/Phi_r(q).
inline ModPoly eval_root(const HabiroElem& x, int r) {
  if (r < 1) throw DomainError("root order must be positive");
  return reduce_mod(q_to_u(x.partial_sum(r)), cyclotomic(r), BaseRing::Z(), 4);
}

// Image of a Laurent polynomial in q under the same map.
inline ModPoly eval_root(const QPoly& p, int r) { return reduce_mod(q_to_u(p), cyclotomic(r), BaseRing::Z(), 4); }

// Truncated power series in h = q - zeta with coefficients in Z[zeta].
class TaylorSeries {
 public:
  TaylorSeries(int r, int d) : r_(r), d_(d) {
    zero_ = ModPoly(BaseRing::Z(), cyclotomic(r), {}, 4);
    c_.assign(static_cast<std::size_t>(d), zero_);
  }
  static TaylorSeries q_series(int r, int d) {
    TaylorSeries s(r, d);
    s.c_[0] = s.zero_.x();
    if (d > 1) s.c_[1] = s.zero_.constant(1);
    return s;
  }
  static TaylorSeries constant(int r, int d, const BigInt& a) {
    TaylorSeries s(r, d);
    s.c_[0] = s.zero_.constant(BigRat(a));
    return s;
  }
  // (zeta + h)^{-1} = sum_k (-1)^k zeta^{-k-1} h^k
  static TaylorSeries q_inverse_series(int r, int d) {
    TaylorSeries s(r, d);
    ModPoly zinv = reduce_mod(u_pow(-4), cyclotomic(r), BaseRing::Z(), 4);
    ModPoly p = zinv;
    for (int k = 0; k < d; ++k) {
      s.c_[static_cast<std::size_t>(k)] = (k % 2) ? -p : p;
      p = p * zinv;
    }
    return s;
  }

  friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) {
    for (int k = 0; k < a.d_; ++k) a.c_[k] = a.c_[k] + b.c_[k];
    return a;
  }
  friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
    TaylorSeries r(a.r_, a.d_);
    for (int i = 0; i < a.d_; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j < a.d_; ++j)
        if (!b.c_[j].is_zero()) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    return r;
  }
  TaylorSeries scaled(const BigInt& a) const {
    TaylorSeries r = *this;
    for (auto& c : r.c_) c = c * zero_.constant(BigRat(a));
    return r;
  }
  const std::vector<ModPoly>& coeffs() const { return c_; }

 private:
  int r_, d_;
  ModPoly zero_;
  std::vector<ModPoly> c_;
};

// Coefficients of (q - zeta_r)^k, k < d, in Z[zeta_r] = Z[x]/Phi_r(x).
inline std::vector<ModPoly> taylor(const HabiroElem& x, int r, int d) {
  if (r < 1 || d < 1) throw DomainError("taylor needs r, d >= 1");
  const int need = r * d;
  if (need > x.depth()) throw DepthExceeded("taylor at order " + std::to_string(r) + " to " + std::to_string(d) + " terms needs depth " + std::to_string(need));
  const TaylorSeries Q = TaylorSeries::q_series(r, d);
  const TaylorSeries Qi = TaylorSeries::q_inverse_series(r, d);
  // powers of Q and Q^{-1}, grown on demand
  std::vector<TaylorSeries> pos{TaylorSeries::constant(r, d, 1)}, neg{TaylorSeries::constant(r, d, 1)};
  auto power = [&](int e) -> const TaylorSeries& {
    auto& v = e >= 0 ? pos : neg;
    const TaylorSeries& base = e >= 0 ? Q : Qi;
    const std::size_t k = static_cast<std::size_t>(std::abs(e));
    while (v.size() <= k) v.push_back(v.back() * base);
    return v[k];
  };
  auto series_of = [&](const QPoly& p) {
    TaylorSeries s(r, d);
    for (int e = p.min_exp(); e <= p.max_exp() && !p.is_zero(); ++e) {
      const BigInt& c = p.coeffs()[static_cast<std::size_t>(e - p.min_exp())];
      if (sgn(c) != 0) s = s + power(e).scaled(c);
    }
    return s;
  };
  TaylorSeries total(r, d);
  TaylorSeries poch = TaylorSeries::constant(r, d, 1);
  for (int n = 0; n < need; ++n) {
    if (n > 0) poch = poch * (TaylorSeries::constant(r, d, 1) + power(n).scaled(-1));
    if (!x.term(n).is_zero()) total = total + series_of(x.term(n)) * poch;
  }
  return total.coeffs();
}

// d/dq; the result is known modulo (q)_{floor(N/2)}.
inline HabiroElem derivative(const HabiroElem& x) {
  const int N = x.depth();
  const int M = N / 2;
  if (M < 1) throw DepthExceeded("derivative needs depth at least 2");
  HabiroElem r(M);
  auto deriv = [](const QPoly& p) {
    QPoly out;
    for (int e = p.min_exp(); e <= p.max_exp() && !p.is_zero(); ++e) {
      const BigInt& c = p.coeffs()[static_cast<std::size_t>(e - p.min_exp())];
      if (sgn(c) != 0 && e != 0) out += QPoly::monomial(c * e, e - 1);
    }
    return out;
  };
  for (int n = 0; n < N; ++n) {
    const QPoly& c = x.term(n);
    if (c.is_zero()) continue;
    if (n < M) r.term(n) += deriv(c);
    const int k = n / 2;
    if (k >= M) continue;
    // (q)_n' = -sum_j j q^{j-1} prod_{i != j} (1 - q^i), each summand divisible by (q)_{floor(n/2)}
    for (int j = 1; j <= n; ++j) {
      QPoly prod(1);
      for (int i = 1; i <= n; ++i)
        if (i != j) prod = prod * (QPoly(1) - QPoly::x_pow(i));
      QPoly t = QPoly::monomial(BigInt(-j), j - 1) * prod;
      r.term(k) += c * t.exact_div(qpoch(k));
    }
  }
  return r;
}

// Number of leading vanishing Taylor coefficients at zeta_n, capped at kmax.
inline int phi_order(const HabiroElem& x, int n, int kmax) {
  auto t = taylor(x, n, kmax);
  int k = 0;
  while (k < kmax && t[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

}  // namespace habiro
