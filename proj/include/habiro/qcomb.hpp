#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "laurent.hpp"

// Quantum integers, factorials and binomials. Everything returned here is an
// element of Z[u, u^{-1}] with v = u^2 and q = u^4.
namespace habiro::qc {

// {i}_q = q^i - 1
inline LaurentU qint_q(int i) { return q_pow(i) - LaurentU(1); }
// {i} = v^i - v^{-i}
inline LaurentU qint_bal(int i) { return v_pow(i) - v_pow(-i); }

// [i] = {i}/{1}
inline LaurentU qnum(int i) {
  if (i < 0) return -qnum(-i);
  std::vector<BigInt> c(i == 0 ? 0 : static_cast<std::size_t>(4 * (i - 1) + 1), BigInt(0));
  for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(4 * j)] = 1;
  return LaurentU::from_coeffs(-2 * (i - 1), std::move(c));
}

// [i]_q = 1 + q + ... + q^{i-1} for i >= 0
inline LaurentU qnum_q(int i) {
  if (i < 0) return -qnum_q(-i).shifted(-4 * (-i));
  LaurentU r;
  for (int j = 0; j < i; ++j) r += q_pow(j);
  return r;
}

// {i}_{q,n} = prod_{j=0}^{n-1} {i-j}_q
inline LaurentU falling_q(int i, int n) {
  LaurentU r(1);
  for (int j = 0; j < n; ++j) r = r * qint_q(i - j);
  return r;
}

// {i}_n = prod_{j=0}^{n-1} {i-j}
inline LaurentU falling_bal(int i, int n) {
  LaurentU r(1);
  for (int j = 0; j < n; ++j) r = r * qint_bal(i - j);
  return r;
}

inline LaurentU qfact_q(int n) { return falling_q(n, n); }
inline LaurentU qfact_bal(int n) { return falling_bal(n, n); }

// (q)_n = (1-q)(1-q^2)...(1-q^n)
inline LaurentU pochhammer(int n) {
  LaurentU r(1);
  for (int j = 1; j <= n; ++j) r = r * (LaurentU(1) - q_pow(j));
  return r;
}

namespace detail {
inline std::mutex& binom_mutex() {
  static std::mutex m;
  return m;
}
inline std::map<std::pair<int, int>, LaurentU>& binom_cache() {
  static std::map<std::pair<int, int>, LaurentU> c;
  return c;
}
}  // namespace detail

// Gaussian binomial {i}_{q,n}/{n}_q!. For 0 <= n <= i this is the usual
// polynomial in q with nonnegative coefficients.
inline LaurentU qbinom_q(int i, int n) {
  if (n < 0) return {};
  if (n == 0) return LaurentU(1);
  {
    std::lock_guard<std::mutex> g(detail::binom_mutex());
    auto it = detail::binom_cache().find({i, n});
    if (it != detail::binom_cache().end()) return it->second;
  }
  LaurentU r;
  if (i >= n) {
    // Pascal: [i, n] = [i-1, n-1] + q^n [i-1, n]
    r = qbinom_q(i - 1, n - 1) + qbinom_q(i - 1, n).shifted(4 * n);
  } else if (i >= 0) {
    r = LaurentU();
  } else {
    r = falling_q(i, n).exact_div(qfact_q(n));
  }
  std::lock_guard<std::mutex> g(detail::binom_mutex());
  detail::binom_cache().emplace(std::make_pair(i, n), r);
  return r;
}

// Balanced binomial {i}_n/{n}! = v^{-n(i-n)} qbinom_q(i, n).
inline LaurentU qbinom_bal(int i, int n) {
  if (n < 0) return {};
  return qbinom_q(i, n).shifted(-2 * n * (i - n));
}

// q-multinomial [n]_q! / prod [i_j]_q! for a composition i of n.
inline LaurentU multinomial_q(const std::vector<int>& parts) {
  LaurentU r(1);
  int total = 0;
  for (int p : parts) {
    total += p;
    r = r * qbinom_q(total, p);
  }
  return r;
}

}  // namespace habiro::qc
