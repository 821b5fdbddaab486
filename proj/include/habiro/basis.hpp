#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "frac.hpp"
#include "qcomb.hpp"

namespace habiro {

// Bases of the representation ring. Pp = P', Ppp = P'', tPp = the rescaled
// P' basis v^{-n(n-1)/2} P'_n.
enum class Basis { V, P, Pp, Ppp, tPp, S };

inline std::string basis_name(Basis b) {
  switch (b) {
    case Basis::V: return "V";
    case Basis::P: return "P";
    case Basis::Pp: return "P'";
    case Basis::Ppp: return "P''";
    case Basis::tPp: return "tP'";
    case Basis::S: return "S";
  }
  return "?";
}

inline Basis basis_from_name(const std::string& s) {
  if (s == "V") return Basis::V;
  if (s == "P") return Basis::P;
  if (s == "P'") return Basis::Pp;
  if (s == "P''") return Basis::Ppp;
  if (s == "tP'" || s == "t̃P'") return Basis::tPp;
  if (s == "S") return Basis::S;
  throw UnknownName("unknown basis '" + s + "'");
}

inline bool is_p_family(Basis b) { return b == Basis::P || b == Basis::Pp || b == Basis::Ppp || b == Basis::tPp; }

// Finite linear combination sum c_i B_i with coefficients in Q(u).
struct BasisCombo {
  Basis basis = Basis::V;
  std::map<int, LaurentFrac> terms;

  BasisCombo() = default;
  explicit BasisCombo(Basis b) : basis(b) {}
  static BasisCombo single(Basis b, int n, LaurentFrac c = LaurentFrac(1)) {
    BasisCombo r(b);
    r.add(n, std::move(c));
    return r;
  }

  void add(int n, const LaurentFrac& c) {
    if (n < 0) throw DomainError("basis index must be nonnegative");
    if (c.is_zero()) return;
    auto it = terms.find(n);
    if (it == terms.end()) {
      terms.emplace(n, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  LaurentFrac coeff(int n) const {
    auto it = terms.find(n);
    return it == terms.end() ? LaurentFrac() : it->second;
  }
  int max_index() const { return terms.empty() ? -1 : terms.rbegin()->first; }

  BasisCombo scaled(const LaurentFrac& s) const {
    BasisCombo r(basis);
    for (const auto& [n, c] : terms) r.add(n, c * s);
    return r;
  }
  friend BasisCombo operator+(BasisCombo a, const BasisCombo& b) {
    if (a.basis != b.basis) throw ShapeMismatch("adding combos in different bases");
    for (const auto& [n, c] : b.terms) a.add(n, c);
    return a;
  }
  friend BasisCombo operator-(const BasisCombo& a, const BasisCombo& b) { return a + b.scaled(LaurentFrac(-1)); }
  friend bool operator==(const BasisCombo& a, const BasisCombo& b) { return a.basis == b.basis && a.terms == b.terms; }
};

namespace detail {

// Product in the V-basis: V_m V_n = V_{|m-n|} + V_{|m-n|+2} + ... + V_{m+n}.
inline BasisCombo v_mul(const BasisCombo& a, const BasisCombo& b) {
  BasisCombo r(Basis::V);
  for (const auto& [m, c] : a.terms)
    for (const auto& [n, d] : b.terms) {
      const LaurentFrac cd = c * d;
      for (int k = std::abs(m - n); k <= m + n; k += 2) r.add(k, cd);
    }
  return r;
}

template <class F>
const std::vector<LaurentU>& cached_row(int n, std::map<int, std::vector<LaurentU>>& cache, std::mutex& mu, F make) {
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<LaurentU> row = make(n);
  std::lock_guard<std::mutex> g(mu);
  return cache.emplace(n, std::move(row)).first->second;
}

}  // namespace detail

// V-coefficients of P_n. The division by [n+i+2] is exact.
inline const std::vector<LaurentU>& p_in_v(int n) {
  static std::map<int, std::vector<LaurentU>> cache;
  static std::mutex mu;
  return detail::cached_row(n, cache, mu, [](int n) {
    std::vector<LaurentU> row;
    for (int i = 0; i <= n; ++i) {
      LaurentU c = (qc::qnum(2 * i + 2) * qc::qbinom_bal(2 * n + 1, n + 1 + i)).exact_div(qc::qnum(n + i + 2));
      row.push_back((n - i) % 2 ? -c : c);
    }
    return row;
  });
}

// V-coefficients of S_n = prod_{i=1}^n (V_1^2 - (v^i + v^{-i})^2).
inline const std::vector<LaurentU>& s_in_v(int n) {
  static std::map<int, std::vector<LaurentU>> cache;
  static std::mutex mu;
  return detail::cached_row(n, cache, mu, [](int n) {
    BasisCombo acc = BasisCombo::single(Basis::V, 0);
    const BasisCombo v1sq = detail::v_mul(BasisCombo::single(Basis::V, 1), BasisCombo::single(Basis::V, 1));
    for (int i = 1; i <= n; ++i) {
      const LaurentU t = v_pow(i) + v_pow(-i);
      BasisCombo factor = v1sq - BasisCombo::single(Basis::V, 0, LaurentFrac(t * t));
      acc = detail::v_mul(acc, factor);
    }
    std::vector<LaurentU> row(static_cast<std::size_t>(2 * n + 1));
    for (const auto& [k, c] : acc.terms) row[static_cast<std::size_t>(k)] = c.to_laurent();
    return row;
  });
}

// B_i = p_scale(B, i) * P_i for B in the P family.
inline LaurentFrac p_scale(Basis b, int i) {
  switch (b) {
    case Basis::P: return LaurentFrac(1);
    case Basis::Pp: return LaurentFrac(LaurentU(1), qc::qfact_bal(i));
    case Basis::Ppp: return LaurentFrac(LaurentU(1), qc::falling_bal(2 * i + 1, 2 * i));
    case Basis::tPp: return LaurentFrac(v_pow(-i * (i - 1) / 2), qc::qfact_bal(i));
    default: throw DomainError("p_scale: not a P-family basis");
  }
}

// Rewrites a P-family combination in the P basis without expanding.
inline BasisCombo as_P(const BasisCombo& x) {
  if (!is_p_family(x.basis)) throw DomainError("as_P: not a P-family basis");
  if (x.basis == Basis::P) return x;
  BasisCombo r(Basis::P);
  for (const auto& [i, c] : x.terms) r.add(i, c * p_scale(x.basis, i));
  return r;
}

inline BasisCombo to_V(const BasisCombo& x) {
  if (x.basis == Basis::V) return x;
  BasisCombo r(Basis::V);
  if (x.basis == Basis::S) {
    for (const auto& [n, c] : x.terms) {
      const auto& row = s_in_v(n);
      for (std::size_t k = 0; k < row.size(); ++k)
        if (!row[k].is_zero()) r.add(static_cast<int>(k), c * LaurentFrac(row[k]));
    }
    return r;
  }
  for (const auto& [n, c] : as_P(x).terms) {
    const auto& row = p_in_v(n);
    for (std::size_t i = 0; i < row.size(); ++i) r.add(static_cast<int>(i), c * LaurentFrac(row[i]));
  }
  return r;
}

// V_n = sum_{i=0}^n bb(n+i+1, 2i+1) P_i
inline BasisCombo to_P(const BasisCombo& x) {
  if (is_p_family(x.basis)) return as_P(x);
  const BasisCombo xv = to_V(x);
  BasisCombo r(Basis::P);
  for (const auto& [n, c] : xv.terms)
    for (int i = 0; i <= n; ++i) r.add(i, c * LaurentFrac(qc::qbinom_bal(n + i + 1, 2 * i + 1)));
  return r;
}

// Rewrites x in the target basis. The S basis spans only the even part
// of the representation ring, so odd V components there are an error.
inline BasisCombo change_basis(const BasisCombo& x, Basis target) {
  if (x.basis == target) return x;
  if (target == Basis::V) return to_V(x);
  if (target == Basis::S) {
    BasisCombo rest = to_V(x);
    BasisCombo r(Basis::S);
    while (!rest.terms.empty()) {
      const auto [k, c] = *rest.terms.rbegin();
      if (k % 2) throw DomainError("combination has odd V components; not in the span of the S basis");
      const int n = k / 2;
      r.add(n, c);
      const auto& row = s_in_v(n);
      for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) rest.add(static_cast<int>(j), -(c * LaurentFrac(row[j])));
    }
    return r;
  }
  BasisCombo p = to_P(x);
  if (target == Basis::P) return p;
  BasisCombo r(target);
  for (const auto& [i, c] : p.terms) r.add(i, c / p_scale(target, i));
  return r;
}

// Hopf pairing by bilinear extension of <V_m, V_n> = [(m+1)(n+1)].
inline LaurentFrac pairing_bilinear(const BasisCombo& x, const BasisCombo& y) {
  const BasisCombo a = to_V(x), b = to_V(y);
  LaurentFrac r;
  for (const auto& [m, c] : a.terms)
    for (const auto& [n, d] : b.terms) r += c * d * LaurentFrac(qc::qnum((m + 1) * (n + 1)));
  return r;
}

namespace detail {

inline bool all_even(const BasisCombo& x) {
  return std::all_of(x.terms.begin(), x.terms.end(), [](const auto& t) { return t.first % 2 == 0; });
}

// Closed forms; returns false when no closed form covers the pair.
inline bool pairing_fast(const BasisCombo& x, const BasisCombo& y, LaurentFrac& out) {
  if (is_p_family(x.basis) && y.basis == Basis::S) {
    out = LaurentFrac();
    const BasisCombo p = as_P(x);
    for (const auto& [m, c] : p.terms) {
      auto it = y.terms.find(m);
      if (it != y.terms.end()) out += c * it->second * LaurentFrac(qc::falling_bal(2 * m + 1, 2 * m));
    }
    return true;
  }
  if (is_p_family(x.basis) && y.basis == Basis::V && all_even(y)) {
    out = LaurentFrac();
    const BasisCombo p = as_P(x);
    for (const auto& [m, c] : p.terms)
      for (const auto& [k, d] : y.terms) {
        const int n = k / 2;
        if (m > n) continue;
        out += c * d * LaurentFrac(qc::qnum(2 * n + 1) * qc::falling_bal(n + m, 2 * m));
      }
    return true;
  }
  if (x.basis == Basis::V && y.basis == Basis::S) {
    out = LaurentFrac();
    for (const auto& [m, c] : x.terms)
      for (const auto& [n, d] : y.terms)
        out += c * d * LaurentFrac(qc::falling_bal(m + n + 1, 2 * n + 1).exact_div(qc::qint_bal(1)));
    return true;
  }
  return false;
}

}  // namespace detail

// Hopf pairing, through a closed form where one applies.
inline LaurentFrac pairing(const BasisCombo& x, const BasisCombo& y) {
  LaurentFrac r;
  if (detail::pairing_fast(x, y, r) || detail::pairing_fast(y, x, r)) return r;
  return pairing_bilinear(x, y);
}

namespace detail {

// Compositions of n into p nonnegative parts, in lexicographic order.
inline const std::vector<std::vector<int>>& compositions(int n, int p) {
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find({n, p});
    if (it != cache.end()) return it->second;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int slots) -> void {
    if (slots == 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur.push_back(a);
      self(self, left - a, slots - 1);
      cur.pop_back();
    }
  };
  if (p > 0) rec(rec, n, p);
  std::lock_guard<std::mutex> g(mu);
  return cache.emplace(std::make_pair(n, p), std::move(out)).first->second;
}

}  // namespace detail

// Coefficient of P'_n in omega^p.
inline LaurentU omega_coeff(int p, int n) {
  if (n < 0) throw DomainError("omega_coeff: negative index");
  if (p == 0) return n == 0 ? LaurentU(1) : LaurentU();
  const int ap = std::abs(p);
  LaurentU s;
  for (const auto& parts : detail::compositions(n, ap)) {
    long f = 0, sj = 0, cross = 0, seen = 0;
    for (int j = 0; j + 1 < ap; ++j) {
      sj += parts[static_cast<std::size_t>(j)];
      f += sj * sj + sj;
    }
    for (int part : parts) {
      cross += seen * part;
      seen += part;
    }
    LaurentU m = qc::multinomial_q(parts);
    if (p > 0)
      s += m * q_pow(static_cast<int>(f));
    else
      s += m * q_pow(static_cast<int>(-cross - f));
  }
  const int e = n * (n + 3) / 2;
  if (p > 0) return s * v_pow(e);
  s = s * v_pow(-e);
  return n % 2 ? -s : s;
}

// omega^p truncated to P'_0, ..., P'_{N-1}.
inline BasisCombo omega_truncated(int p, int N) {
  BasisCombo r(Basis::Pp);
  for (int n = 0; n < N; ++n) r.add(n, LaurentFrac(omega_coeff(p, n)));
  return r;
}

// Omega_r = sum_{i=0}^{r-2} [i+1] V_i
inline BasisCombo Omega_r(int r) {
  if (r < 2) throw DomainError("Omega_r needs r >= 2");
  BasisCombo x(Basis::V);
  for (int i = 0; i <= r - 2; ++i) x.add(i, LaurentFrac(qc::qnum(i + 1)));
  return x;
}

// P'_m P'_n in the P' basis:
// sum_{i=0}^{min(m,n)} {m+n}! / ({i}! {m-i}! {n-i}!) P'_{m+n-i}
inline BasisCombo pprime_mul(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("pprime_mul: negative index");
  BasisCombo r(Basis::Pp);
  const LaurentU top = qc::qfact_bal(m + n);
  for (int i = 0; i <= std::min(m, n); ++i) {
    LaurentU d = qc::qfact_bal(i) * qc::qfact_bal(m - i) * qc::qfact_bal(n - i);
    r.add(m + n - i, LaurentFrac(top.exact_div(d)));
  }
  return r;
}

// Product of two P'-combinations, dropping indices >= N (N < 0: keep all).
inline BasisCombo pprime_product(const BasisCombo& a, const BasisCombo& b, int N = -1) {
  if (a.basis != Basis::Pp || b.basis != Basis::Pp) throw ShapeMismatch("pprime_product needs P' combinations");
  BasisCombo r(Basis::Pp);
  for (const auto& [m, c] : a.terms)
    for (const auto& [n, d] : b.terms) {
      if (N >= 0 && std::max(m, n) >= N) continue;
      const LaurentFrac cd = c * d;
      for (const auto& [k, e] : pprime_mul(m, n).terms)
        if (N < 0 || k < N) r.add(k, cd * e);
    }
  return r;
}

}  // namespace habiro
