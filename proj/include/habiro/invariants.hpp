#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "habiro_ring.hpp"
#include "multilinear.hpp"

namespace habiro {

// Integral surgery on an algebraically split, +-1-framed link given as a
// diagram, or the Borromean family M_{i,j,k} (framings -1/i, -1/j, -1/k;
// 0 leaves a component out).
struct Surgery {
  enum class Kind { Diagram, Borromean };
  Kind kind = Kind::Diagram;
  Diagram diagram;
  std::vector<int> framings;
  std::array<int, 3> params{0, 0, 0};

  static Surgery empty() { return Surgery{}; }
  static Surgery from_diagram(Diagram d, std::vector<int> framings) {
    Surgery s;
    s.diagram = std::move(d);
    s.framings = std::move(framings);
    return s;
  }
  // Framings read off the blackboard writhe.
  static Surgery blackboard(Diagram d) {
    std::vector<int> f;
    for (long w : writhes(d)) f.push_back(static_cast<int>(w));
    return from_diagram(std::move(d), std::move(f));
  }
  static Surgery borromean(int i, int j, int k) {
    Surgery s;
    s.kind = Kind::Borromean;
    s.params = {i, j, k};
    return s;
  }
};

// For the Borromean family with params in {-1, 0, 1}: the diagram form.
// Returns false if some |param| > 1, where no integral framing exists.
inline bool as_integral(const Surgery& s, Diagram& d, std::vector<int>& framings, std::vector<bool>& active) {
  if (s.kind == Surgery::Kind::Diagram) {
    d = s.diagram;
    framings = s.framings;
    active.assign(framings.size(), true);
    return true;
  }
  d = builtin("borromean");
  framings.clear();
  active.clear();
  for (int p : s.params) {
    if (std::abs(p) > 1) return false;
    framings.push_back(p == 0 ? 0 : -p);
    active.push_back(p != 0);
  }
  return true;
}

inline void check_admissible(const Diagram& d, const std::vector<int>& framings, const std::vector<bool>& active) {
  if (static_cast<int>(framings.size()) != d.components)
    throw NotAdmissible("need one framing per component (" + std::to_string(d.components) + "), got " +
                        std::to_string(framings.size()));
  const auto lk = linking_data(d);
  for (std::size_t i = 0; i < lk.size(); ++i) {
    if (active[i] && framings[i] != 1 && framings[i] != -1)
      throw NotAdmissible("framing of component " + std::to_string(i) + " is " + std::to_string(framings[i]) +
                          ", expected +1 or -1");
    for (std::size_t j = 0; j < lk.size(); ++j)
      if (i != j && lk[i][j] != 0)
        throw NotAdmissible("components " + std::to_string(i) + " and " + std::to_string(j) + " have linking number " +
                            std::to_string(lk[i][j]));
  }
}

namespace detail {

// Places a Laurent polynomial in u that is divisible by (q)_k into slot k.
inline void add_to_slot(HabiroElem& x, int k, const LaurentU& term_u) {
  if (term_u.is_zero()) return;
  x.term(k) += u_to_q(term_u).exact_div(qpoch(k));
}

}  // namespace detail

// J_M from a diagram presentation: the link colored by omega^{-f_i}, expanded
// in the P' basis and truncated at index N.
inline HabiroElem jm_from_surgery(const Diagram& d, const std::vector<int>& framings, int N,
                                  std::vector<bool> active = {}) {
  if (active.empty()) active.assign(framings.size(), true);
  check_admissible(d, framings, active);
  HabiroElem out(N);
  const int m = d.components;
  if (m == 0) {
    out.term(0) = QPoly(1);
    return out;
  }
  const VTable table(d, N);
  std::vector<std::vector<LaurentU>> rows;
  for (int k = 0; k < N; ++k) rows.push_back(p_in_v(k));
  const std::vector<LaurentU> jp = table.transformed(rows);  // J(P_{k_1}, ..., P_{k_m})
  std::vector<LaurentU> fact;
  for (int k = 0; k < N; ++k) fact.push_back(qc::qfact_bal(k));
  std::vector<std::vector<LaurentU>> weight(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < N; ++k)
      weight[static_cast<std::size_t>(i)].push_back(active[static_cast<std::size_t>(i)]
                                                        ? omega_coeff(-framings[static_cast<std::size_t>(i)], k)
                                                        : omega_coeff(0, k));
  std::vector<int> ks(static_cast<std::size_t>(m), 0);
  for (std::size_t idx = 0; idx < jp.size(); ++idx) {
    bool skip = jp[idx].is_zero();
    LaurentU w(1), den(1);
    int kmax = 0;
    for (int i = 0; i < m && !skip; ++i) {
      const int k = ks[static_cast<std::size_t>(i)];
      const LaurentU& wi = weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (wi.is_zero()) skip = true;
      w = w * wi;
      den = den * fact[static_cast<std::size_t>(k)];
      kmax = std::max(kmax, k);
    }
    if (!skip) detail::add_to_slot(out, kmax, jp[idx].exact_div(den) * w);
    for (int i = m - 1; i >= 0; --i) {
      if (++ks[static_cast<std::size_t>(i)] < N) break;
      ks[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

// (-1)^l {2l+1}_{l+1} / {1}
inline LaurentU borromean_diagonal(int l) {
  LaurentU c = qc::falling_bal(2 * l + 1, l + 1).exact_div(qc::qint_bal(1));
  return l % 2 ? -c : c;
}

inline HabiroElem jm_borromean(int i, int j, int k, int N) {
  HabiroElem out(N);
  for (int l = 0; l < N; ++l) {
    LaurentU w = omega_coeff(i, l) * omega_coeff(j, l) * omega_coeff(k, l);
    if (!w.is_zero()) detail::add_to_slot(out, l, w * borromean_diagonal(l));
  }
  return out;
}

// sum_n q^n (1 - q^{n+1}) ... (1 - q^{2n+1}) / (1 - q)
inline HabiroElem poincare_series(int N) {
  HabiroElem out(N);
  for (int n = 0; n < N; ++n) {
    QPoly t = QPoly::x_pow(n);
    for (int j = n + 1; j <= 2 * n + 1; ++j) t = t * (QPoly(1) - QPoly::x_pow(j));
    t = t.exact_div(QPoly(1) - QPoly::x_pow(1));
    out.term(n) = t.exact_div(qpoch(n));
  }
  return out;
}

inline HabiroElem jm(const Surgery& s, int N) {
  if (s.kind == Surgery::Kind::Borromean) return jm_borromean(s.params[0], s.params[1], s.params[2], N);
  return jm_from_surgery(s.diagram, s.framings, N);
}

// Truncated two-variable knot invariant: c_n = J_K(P''_n), n < depth.
struct TwoVarKnot {
  std::vector<LaurentU> c;
  int depth() const { return static_cast<int>(c.size()); }
  friend bool operator==(const TwoVarKnot& a, const TwoVarKnot& b) { return a.c == b.c; }
};

inline TwoVarKnot knot_borromean(int i, int j, int N) {
  TwoVarKnot x;
  for (int l = 0; l < N; ++l) {
    LaurentU c = omega_coeff(i, l) * omega_coeff(j, l);
    x.c.push_back(l % 2 ? -c : c);
  }
  return x;
}

inline TwoVarKnot reduced_jones(const Diagram& d, int N) {
  if (d.components != 1) throw NotAKnot("reduced_jones needs a one-component diagram, got " + std::to_string(d.components));
  std::vector<LaurentU> jv;
  for (int n = 0; n < N; ++n) jv.push_back(zero_framed_jones_cached(d, {n}));
  TwoVarKnot x;
  for (int n = 0; n < N; ++n) {
    LaurentU jp;
    const auto& row = p_in_v(n);
    for (int i = 0; i <= n; ++i) jp.add_product(row[static_cast<std::size_t>(i)], jv[static_cast<std::size_t>(i)]);
    x.c.push_back(jp.exact_div(qc::falling_bal(2 * n + 1, 2 * n)));
  }
  return x;
}

// Specialization t = q^i: sum_{k < |i|} c_k prod_{j=1}^k (q^i + q^{-i} - q^j - q^{-j}).
inline LaurentU theta(const TwoVarKnot& x, int i) {
  if (i == 0) throw DomainError("theta needs i != 0; use theta0");
  const int a = std::abs(i);
  if (a > x.depth()) throw DepthExceeded("theta at " + std::to_string(i) + " needs depth " + std::to_string(a));
  LaurentU s, prod(1);
  const LaurentU t = q_pow(a) + q_pow(-a);
  for (int k = 0; k < a; ++k) {
    if (k > 0) prod = prod * (t - q_pow(k) - q_pow(-k));
    s.add_product(x.c[static_cast<std::size_t>(k)], prod);
  }
  return s;
}

// The Kashaev specialization t = 1 as a Habiro element:
// slot k holds c_k (-1)^k q^{-k(k+1)/2} (q)_k.
inline HabiroElem theta0(const TwoVarKnot& x) {
  HabiroElem out(x.depth());
  for (int k = 0; k < x.depth(); ++k) {
    QPoly c = u_to_q(x.c[static_cast<std::size_t>(k)]) * qpoch(k) * QPoly::x_pow(-k * (k + 1) / 2);
    out.term(k) = k % 2 ? -c : c;
  }
  return out;
}

// J_{-M}: conjugate every slot; conj((q)_n) = (-1)^n q^{-n(n+1)/2} (q)_n.
inline HabiroElem mirror(const HabiroElem& x) {
  HabiroElem out(x.depth());
  for (int n = 0; n < x.depth(); ++n) {
    QPoly c = x.term(n).conj() * QPoly::x_pow(-n * (n + 1) / 2);
    out.term(n) = n % 2 ? -c : c;
  }
  return out;
}

inline HabiroElem connected_sum(const HabiroElem& a, const HabiroElem& b) { return a * b; }

// q^e x
inline HabiroElem q_shift(const HabiroElem& x, int e) {
  HabiroElem out(x.depth());
  for (int n = 0; n < x.depth(); ++n) out.term(n) = x.term(n).shifted(e);
  return out;
}

namespace detail {

// Solves A y = b over Q for the unique y; throws NotInQSubring if there is no
// solution. A is given by columns.
inline std::vector<BigRat> solve_unique(const std::vector<std::vector<BigRat>>& cols, std::vector<BigRat> b) {
  const std::size_t n = cols.size();
  std::size_t rows = b.size();
  for (const auto& c : cols) rows = std::max(rows, c.size());
  b.resize(rows, BigRat(0));
  std::vector<std::vector<BigRat>> a(rows, std::vector<BigRat>(n + 1, BigRat(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) a[i][j] = cols[j][i];
  for (std::size_t i = 0; i < rows; ++i) a[i][n] = b[i];
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const BigRat f = a[i][c] / a[r][c];
      for (std::size_t k = c; k <= n; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(a[i][n]) != 0) throw NotInQSubring("value is not in the subring generated by the target variable");
  std::vector<BigRat> y(n, BigRat(0));
  for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = a[i][n] / a[i][pivot_col[i]];
  return y;
}

// I_r(L) restricted to given colors/framings, as an element of Z[u, u^-1].
inline LaurentU wrt_sum(const Diagram& d, const std::vector<int>& framings, const std::vector<bool>& active, int r) {
  const int m = d.components;
  std::vector<int> colors(static_cast<std::size_t>(m), 0);
  LaurentU total;
  while (true) {
    LaurentU w(1);
    for (int i = 0; i < m; ++i) {
      const int n = colors[static_cast<std::size_t>(i)];
      w = w * qc::qnum(n + 1) * twist_eigen(n, framings[static_cast<std::size_t>(i)]);
    }
    total.add_product(w, zero_framed_jones_cached(d, colors));
    int i = m - 1;
    for (; i >= 0; --i) {
      if (!active[static_cast<std::size_t>(i)]) continue;
      if (++colors[static_cast<std::size_t>(i)] <= r - 2) break;
      colors[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  return total;
}

}  // namespace detail

// I_r of the unknot with framing f: sum_{n <= r-2} [n+1]^2 q^{f n(n+2)/4}.
inline LaurentU wrt_unknot(int r, int f) {
  LaurentU s;
  for (int n = 0; n <= r - 2; ++n) s += qc::qnum(n + 1) * qc::qnum(n + 1) * twist_eigen(n, f);
  return s;
}

// tau_zeta for all primitive r-th roots zeta at once, as an element of
// Q[q]/(Phi_r(q)).
inline ModPoly wrt(const Surgery& s, int r) {
  if (r < 1) throw DomainError("wrt needs r >= 1");
  const ModPoly one_r(BaseRing::Q(), cyclotomic(r), {BigRat(1)}, 4);
  Diagram d;
  std::vector<int> framings;
  std::vector<bool> active;
  if (!as_integral(s, d, framings, active))
    throw NotAdmissible("Borromean parameters beyond {-1, 0, 1} are not integral surgeries");
  check_admissible(d, framings, active);
  if (r == 1) return one_r;
  const LaurentU& f4r = cyclotomic(4 * r);
  auto red = [&](const LaurentU& p) { return reduce_mod(p, f4r, BaseRing::Q(), 1); };
  ModPoly num = red(d.components == 0 ? LaurentU(1) : detail::wrt_sum(d, framings, active, r));
  ModPoly den = red(LaurentU(1));
  const ModPoly up = red(wrt_unknot(r, 1)), down = red(wrt_unknot(r, -1));
  for (std::size_t i = 0; i < framings.size(); ++i) {
    if (!active[i]) continue;
    den = den * (framings[i] > 0 ? up : down);
  }
  if (den.is_zero()) throw ZeroDenominator("I(U_+-) vanishes at the chosen root");
  const ModPoly tau = num * den.inverse();
  // find g with g(x^4) = tau
  const int phi = euler_phi(r);
  std::vector<std::vector<BigRat>> cols;
  ModPoly x4 = red(u_pow(4)), p = red(LaurentU(1));
  for (int j = 0; j < phi; ++j) {
    cols.push_back(p.coeffs());
    p = p * x4;
  }
  std::vector<BigRat> g = detail::solve_unique(cols, tau.coeffs());
  return one_r.with_coeffs(std::move(g));
}

// The Ohtsuki series coefficients lambda_0, ..., lambda_{d-1}.
inline std::vector<BigInt> ohtsuki(const HabiroElem& x, int d) {
  const auto t = taylor(x, 1, d);
  std::vector<BigInt> out;
  for (const auto& c : t) {
    const BigRat v = c.coeff(0);
    if (v.get_den() != 1) throw DomainError("non-integral Ohtsuki coefficient");
    out.push_back(v.get_num());
  }
  return out;
}

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckLine> lines;
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

// Coefficients of 1/p(h) as a power series, p given by ascending coefficients.
inline std::vector<BigRat> series_inverse(const std::vector<long>& p, int n) {
  std::vector<BigRat> a;
  for (int k = 0; k < n; ++k) {
    BigRat s = k == 0 ? BigRat(1) : BigRat(0);
    for (int i = 1; i <= k && i < static_cast<int>(p.size()); ++i) s -= BigRat(p[static_cast<std::size_t>(i)]) * a[static_cast<std::size_t>(k - i)];
    a.push_back(s / BigRat(p[0]));
  }
  return a;
}

// 1/((q+1)(q^2+q+1)) in h = q - 1
inline std::vector<BigRat> ohtsuki_a(int n) { return series_inverse({6, 9, 5, 1}, n); }
// 1/((q+1)(q^2+q+1)(q^2+1)) in h = q - 1
inline std::vector<BigRat> ohtsuki_b(int n) { return series_inverse({12, 30, 34, 21, 7, 1}, n); }

inline Report congruence_report(const std::vector<BigInt>& lambda) {
  if (lambda.size() < 5) throw DomainError("congruence_report needs at least 5 coefficients");
  auto mod = [](const BigInt& a, long m) { return mod_nonneg(a, BigInt(m)); };
  auto is_int = [](const BigRat& x) { return x.get_den() == 1; };
  Report rep;
  const BigInt& l1 = lambda[1];
  const BigInt& l2 = lambda[2];
  rep.lines.push_back({"lambda_1 = 0 mod 6", mod(l1, 6) == 0, "lambda_1 = " + l1.get_str()});
  {
    const bool ok = mod(l1, 2) == 0 && mod(l2 - l1 / 2, 6) == 0;
    rep.lines.push_back({"lambda_2 = lambda_1/2 mod 6", ok, "lambda_2 = " + l2.get_str()});
  }
  {
    const bool ok = mod(l1, 6) == 0 && mod(l2 - 3 * (l1 / 6), 12) == 0;
    rep.lines.push_back({"lambda_2 = 3 lambda mod 12", ok, "lambda = lambda_1/6"});
  }
  const int n = static_cast<int>(lambda.size());
  const auto a = ohtsuki_a(n);
  for (int k = 0; k + 1 < n; ++k) {
    BigRat s = 0;
    for (int i = 0; i <= k; ++i) s += a[static_cast<std::size_t>(i)] * BigRat(lambda[static_cast<std::size_t>(k - i + 1)]);
    rep.lines.push_back({"a-relation k=" + std::to_string(k), is_int(s), "sum = " + to_string(s)});
  }
  const auto b = ohtsuki_b(n);
  std::vector<BigRat> lp(static_cast<std::size_t>(n), BigRat(0));
  for (int k = 2; k < n; ++k) lp[static_cast<std::size_t>(k)] = BigRat(lambda[static_cast<std::size_t>(k)] - binomial(l1.get_si(), k));
  for (int k = 0; k + 2 < n; ++k) {
    BigRat s = 0;
    for (int i = 0; i <= k; ++i) s += b[static_cast<std::size_t>(i)] * lp[static_cast<std::size_t>(k - i + 2)];
    rep.lines.push_back({"b-relation k=" + std::to_string(k), is_int(s), "sum = " + to_string(s)});
  }
  return rep;
}

// Checks s_{zeta_8}(q^{-lambda_1} x) - 1 against the lattice 2(zeta_8 - 1)Z[zeta_8]
// and against the smaller span of 4 and 2 sqrt 2 (reported only).
struct Tau8Result {
  std::vector<BigInt> value;  // coordinates in 1, zeta, zeta^2, zeta^3
  bool in_lattice = false;
  bool in_small_span = false;
};

inline Tau8Result tilde_tau8_check(const HabiroElem& x, const BigInt& lambda1) {
  if (x.depth() < 8) throw DepthExceeded("tilde_tau8_check needs depth 8");
  if (!lambda1.fits_sint_p()) throw DomainError("lambda_1 out of range");
  ModPoly v = eval_root(q_shift(x, -static_cast<int>(lambda1.get_si())), 8);
  v = v - v.constant(BigRat(1));
  Tau8Result res;
  std::vector<BigRat> b;
  for (std::size_t i = 0; i < 4; ++i) {
    b.push_back(v.coeff(i));
    res.value.push_back(v.coeff(i).get_num());
  }
  const std::vector<std::vector<BigRat>> gens = {
      {4, 0, 0, 0}, {0, 2, 0, -2}, {2, 0, 2, 0}, {2, 2, 0, 0}};
  const auto y = detail::solve_unique(gens, b);
  res.in_lattice = std::all_of(y.begin(), y.end(), [](const BigRat& t) { return t.get_den() == 1; });
  const auto& c = res.value;
  res.in_small_span = c[2] == 0 && c[1] == -c[3] && mod_nonneg(c[1], BigInt(2)) == 0 && mod_nonneg(c[0], BigInt(4)) == 0;
  return res;
}

}  // namespace habiro
