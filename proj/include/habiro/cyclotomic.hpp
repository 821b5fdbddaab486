#pragma once

#include <map>
#include <mutex>

#include "laurent.hpp"

namespace habiro {

// n-th cyclotomic polynomial as a polynomial in an anonymous variable x.
inline const LaurentU& cyclotomic(int n) {
  static std::mutex mutex;
  static std::map<int, LaurentU> cache;
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  {
    std::lock_guard<std::mutex> g(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  LaurentU num = LaurentU::x_pow(n) - LaurentU(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = num.exact_div(cyclotomic(d));
  std::lock_guard<std::mutex> g(mutex);
  return cache.emplace(n, std::move(num)).first->second;
}

inline int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace habiro
