#pragma once

#include <array>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evalx.hpp"
#include "invariants.hpp"

// The acceptance suite: twelve end-to-end checks shared by the command line
// tool and the acceptance test binary.
namespace habiro::acceptance {

struct Outcome {
  int id;
  std::string title;
  bool pass;
  std::string detail;
};

namespace detail {

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << (total_ - failed_) << "/" << total_ << " checks";
    if (!ok()) os << "; first failure: " << first_failure_;
    return os.str();
  }

 private:
  int total_ = 0, failed_ = 0;
  std::string first_failure_;
};

inline std::string tuple_name(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

// e10 closed form for the Borromean rings colored (V_i, V_j, V_k).
inline LaurentU borromean_closed_form(int i, int j, int k) {
  LaurentU s;
  for (int p = 0; p <= std::min({i, j, k}); ++p) {
    LaurentU t = qc::qbinom_bal(i + 1 + p, 2 * p + 1) * qc::qbinom_bal(j + 1 + p, 2 * p + 1) *
                 qc::qbinom_bal(k + 1 + p, 2 * p + 1) * qc::qfact_bal(p) * qc::qfact_bal(p) *
                 qc::falling_bal(2 * p + 1, 2 * p);
    s += p % 2 ? -t : t;
  }
  return s;
}

inline bool same_value(const ModPoly& a, const ModPoly& b) {
  return a.modulus_coeffs() == b.modulus_coeffs() && a.coeffs() == b.coeffs();
}

inline bool is_pm_one(const ModPoly& a) {
  return a.coeffs().size() == 1 && (a.coeffs()[0] == 1 || a.coeffs()[0] == -1);
}

inline bool is_one(const ModPoly& a) { return a.coeffs().size() == 1 && a.coeffs()[0] == 1; }

struct Named {
  std::string name;
  Surgery s;
};

// unknot +-1 and the Borromean rings with framings in {+-1}^3.
inline std::vector<Named> test_presentations() {
  std::vector<Named> out;
  out.push_back({"unknot+1", Surgery::from_diagram(builtin("unknot"), {1})});
  out.push_back({"unknot-1", Surgery::from_diagram(builtin("unknot"), {-1})});
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1})
        out.push_back({"borromean" + tuple_name({a, b, c}), Surgery::from_diagram(builtin("borromean"), {a, b, c})});
  return out;
}

inline Diagram unlink2() { return parse_diagram(braid_closure_text(2, {})); }

inline std::vector<Named> s3_presentations() {
  return {{"empty", Surgery::empty()},
          {"unknot+1", Surgery::blackboard(builtin("unknot+1"))},
          {"unknot-1", Surgery::blackboard(builtin("unknot-1"))},
          {"unlink(+1,-1)", Surgery::from_diagram(unlink2(), {1, -1})}};
}

}  // namespace detail

inline Outcome hopf_golden() {
  detail::Tally t;
  const Diagram h = builtin("hopf");
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      t.check(colored_jones(h, {m, n}) == qc::qnum((m + 1) * (n + 1)), "hopf " + detail::tuple_name({m, n}));
  return {1, "Hopf pairing golden values", t.ok(), t.summary()};
}

inline Outcome borromean_oracle() {
  detail::Tally t;
  const Diagram b = builtin("borromean");
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k) {
        t.check(colored_jones(b, {i, j, k}) == detail::borromean_closed_form(i, j, k), "V" + detail::tuple_name({i, j, k}));
        const LaurentFrac got = jones_multilinear(
            b, {BasisCombo::single(Basis::Pp, i), BasisCombo::single(Basis::Pp, j), BasisCombo::single(Basis::Pp, k)});
        const LaurentFrac want = (i == j && j == k) ? LaurentFrac(borromean_diagonal(i)) : LaurentFrac();
        t.check(got == want, "P'" + detail::tuple_name({i, j, k}));
      }
  return {2, "Borromean closed-form oracle", t.ok(), t.summary()};
}

inline Outcome twist_element() {
  detail::Tally t;
  t.check(pprime_product(omega_truncated(1, 10), omega_truncated(-1, 10), 10) == BasisCombo::single(Basis::Pp, 0),
          "omega_+ omega_- = 1");
  for (int p = -3; p <= 3; ++p) {
    BasisCombo acc = omega_truncated(0, 8);
    const BasisCombo base = omega_truncated(p > 0 ? 1 : -1, 8);
    for (int i = 0; i < std::abs(p); ++i) acc = pprime_product(acc, base, 8);
    t.check(acc == omega_truncated(p, 8), "power p=" + std::to_string(p));
    for (int k = 0; k <= 5; ++k) {
      const BasisCombo vp = BasisCombo::single(Basis::V, 2 * k, LaurentFrac(LaurentU(1), qc::qnum(2 * k + 1)));
      t.check(pairing(omega_truncated(p, k + 1), vp) == LaurentFrac(q_pow(p * k * (k + 1))),
              "pairing p=" + std::to_string(p) + " k=" + std::to_string(k));
    }
  }
  return {3, "Twist element identities", t.ok(), t.summary()};
}

inline Outcome poincare_triple() {
  detail::Tally t;
  const HabiroElem a = jm_from_surgery(builtin("borromean"), {-1, -1, -1}, 8);
  const HabiroElem b = jm_borromean(1, 1, 1, 8);
  const HabiroElem c = poincare_series(8);
  t.check(equals_at_depth(a, b, 8), "surgery = closed form");
  t.check(equals_at_depth(b, c, 8), "closed form = series");
  return {4, "Poincare sphere triple agreement", t.ok(), t.summary()};
}

inline Outcome specialization() {
  detail::Tally t;
  for (const auto& [name, s] : detail::test_presentations()) {
    const HabiroElem J = jm(s, 8);
    for (int r = 1; r <= 8; ++r)
      t.check(detail::same_value(eval_root(J, r).rebased(BaseRing::Q()), wrt(s, r)), name + " r=" + std::to_string(r));
  }
  return {5, "Specialization to WRT at roots of unity", t.ok(), t.summary()};
}

inline Outcome known_wrt() {
  detail::Tally t;
  for (const auto& [name, s] : detail::test_presentations()) {
    for (int r : {1, 3, 6}) t.check(detail::is_one(wrt(s, r)), name + " r=" + std::to_string(r));
    for (int r : {2, 4}) t.check(detail::is_pm_one(wrt(s, r)), name + " r=" + std::to_string(r));
  }
  const auto s3 = detail::s3_presentations();
  const HabiroElem ref = jm(s3[0].s, 10);
  for (const auto& [name, s] : s3) {
    t.check(equals_at_depth(jm(s, 10), ref, 10), name + " J");
    for (int r = 1; r <= 8; ++r) t.check(detail::is_one(wrt(s, r)), name + " wrt r=" + std::to_string(r));
  }
  return {6, "Known WRT values and presentation independence", t.ok(), t.summary()};
}

inline std::vector<std::array<int, 3>> divisibility_family() { return {{1, 1, 1}, {1, 1, -1}, {1, -1, -1}, {2, 1, 1}}; }

inline Outcome divisibility() {
  detail::Tally t;
  for (const auto& p : divisibility_family()) {
    const std::string name = "M" + detail::tuple_name({p[0], p[1], p[2]});
    const HabiroElem J = jm_borromean(p[0], p[1], p[2], 10);
    const HabiroElem Jm1 = J - HabiroElem::one(10);
    for (int n : {1, 2, 3, 6}) t.check(phi_order(Jm1, n, 1) == 1, name + " Phi_" + std::to_string(n));
    const BigInt l1 = ohtsuki(J, 2)[1];
    const HabiroElem xt = q_shift(J, -static_cast<int>(l1.get_si())) - HabiroElem::one(10);
    t.check(phi_order(xt, 1, 2) == 2, name + " Phi_1^2");
    t.check(phi_order(xt, 4, 1) == 1, name + " Phi_4");
    t.check(tilde_tau8_check(J, l1).in_lattice, name + " tau8 lattice");
  }
  return {7, "Divisibility of J_M - 1", t.ok(), t.summary()};
}

inline Outcome ohtsuki_congruences() {
  detail::Tally t;
  for (const auto& p : divisibility_family()) {
    const std::string name = "M" + detail::tuple_name({p[0], p[1], p[2]});
    const Report rep = congruence_report(ohtsuki(jm_borromean(p[0], p[1], p[2], 10), 6));
    for (const auto& line : rep.lines) t.check(line.pass, name + " " + line.name);
  }
  return {8, "Ohtsuki series congruences", t.ok(), t.summary()};
}

inline Outcome one_over_m() {
  detail::Tally t;
  for (int k = 1; k <= 3; ++k)
    for (int i = -1; i <= 1; ++i)
      for (int j = -1; j <= 1; ++j) {
        const HabiroElem J = jm_borromean(i, j, k, 10);
        for (int r = 1; r <= 2 * k; ++r)
          if ((2 * k) % r == 0) t.check(detail::is_one(eval_root(J, r)), "M" + detail::tuple_name({i, j, k}) + " r=" + std::to_string(r));
      }
  return {9, "1/m-surgery congruence", t.ok(), t.summary()};
}

inline Outcome kashaev_coherence() {
  detail::Tally t;
  const Diagram tref = builtin("trefoil");
  const TwoVarKnot x = reduced_jones(tref, 6);
  t.check(x == knot_borromean(1, 1, 6), "reduced_jones(trefoil) = K_{1,1}");
  for (int i = 1; i <= 4; ++i)
    t.check(theta(x, i) == colored_jones_zero_framed(tref, {i - 1}).exact_div(qc::qnum(i)), "theta i=" + std::to_string(i));
  const HabiroElem k0 = theta0(x);
  for (int r = 1; r <= 6; ++r)
    t.check(detail::same_value(eval_root(k0, r), eval_root(u_to_q(theta(x, r)), r)), "theta0 r=" + std::to_string(r));
  return {10, "Two-variable and Kashaev coherence", t.ok(), t.summary()};
}

namespace detail {

inline HabiroElem random_elem(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 3), len(0, 2);
  HabiroElem x(depth);
  for (int n = 0; n < depth; ++n) {
    QPoly c;
    for (int k = len(rng); k >= 0; --k) c += QPoly::monomial(BigInt(coef(rng)), ex(rng));
    x.term(n) = c;
  }
  return x;
}

inline void property_suite(Tally& t) {
  // braiding
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int s : {1, -1}) {
          auto I = [](int n) { return SparseMatrix::identity(n + 1); };
          const SparseMatrix lhs = kron(braiding(b, c, s), I(a)) * kron(I(b), braiding(a, c, s)) * kron(braiding(a, b, s), I(c));
          const SparseMatrix rhs = kron(I(c), braiding(a, b, s)) * kron(braiding(a, c, s), I(b)) * kron(I(a), braiding(b, c, s));
          t.check(lhs == rhs, "Yang-Baxter " + tuple_name({a, b, c, s}));
        }
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      t.check(braiding(n, m, -1) * braiding(m, n, 1) == SparseMatrix::identity((m + 1) * (n + 1)),
              "psi psi^-1 " + tuple_name({m, n}));
  // Gaussian binomials
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      const LaurentU g = qc::qbinom_q(n, k);
      bool ok = g.min_exp() >= 0 && (qc::qfact_q(n) == g * qc::qfact_q(k) * qc::qfact_q(n - k));
      for (const auto& c : g.coeffs()) ok = ok && sgn(c) >= 0;
      t.check(ok, "Gaussian binomial " + tuple_name({n, k}));
    }
  // base change
  for (int n = 0; n <= 8; ++n) {
    const BasisCombo v = BasisCombo::single(Basis::V, n);
    t.check(to_V(to_P(v)) == v, "V->P->V n=" + std::to_string(n));
    for (Basis b : {Basis::Pp, Basis::Ppp, Basis::tPp}) t.check(to_V(change_basis(v, b)) == v, "round trip " + basis_name(b));
  }
  // evaluation maps as ring homomorphisms, pi-compatibility, depth stability
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 6; ++trial) {
    const HabiroElem x = random_elem(rng, 12), y = random_elem(rng, 12);
    const HabiroElem sum = x + y, prod = x * y;
    for (int r : {1, 2, 3, 5, 6, 8}) {
      t.check(eval_root(sum, r) == eval_root(x, r) + eval_root(y, r), "eval_root additive");
      t.check(eval_root(prod, r) == eval_root(x, r) * eval_root(y, r), "eval_root multiplicative");
      t.check(eval_root(x.truncated(r), r) == eval_root(x, r), "eval_root depth stable");
    }
    {
      const auto tx = taylor(x, 2, 3), ty = taylor(y, 2, 3), tp = taylor(prod, 2, 3);
      std::vector<ModPoly> conv(3, tx[0] - tx[0]);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j) conv[static_cast<std::size_t>(i + j)] = conv[static_cast<std::size_t>(i + j)] + tx[static_cast<std::size_t>(i)] * ty[static_cast<std::size_t>(j)];
      t.check(conv == tp, "taylor multiplicative");
    }
    for (const auto& [a, b, m] : std::vector<std::array<long, 3>>{{2, 1, 5}, {3, 2, 7}, {2, 3, 35}}) {
      const auto ex = eval_rational(x, a, b, m).residue, ey = eval_rational(y, a, b, m).residue;
      t.check(eval_rational(sum, a, b, m).residue == mod_nonneg(ex + ey, BigInt(m)), "eval_rational additive");
      t.check(eval_rational(prod, a, b, m).residue == mod_nonneg(ex * ey, BigInt(m)), "eval_rational multiplicative");
    }
    {
      const auto ex = eval_padic(x, 2, 5, 1).residue, ey = eval_padic(y, 2, 5, 1).residue;
      t.check(eval_padic(prod, 2, 5, 1).residue == mod_nonneg(ex * ey, BigInt(5)), "eval_padic multiplicative");
      t.check(eval_padic(sum, 2, 5, 1).residue == mod_nonneg(ex + ey, BigInt(5)), "eval_padic additive");
      t.check(eval_padic(x, 2, 5, 1).residue == eval_rational(x, 2, 1, 5).residue, "padic = rational");
    }
    for (long p : {2L, 3L, 7L})
      for (int r : {1, 3, 4, 5, 8}) {
        if (r % p == 0) continue;
        const ModPoly vx = modp_value(x, p, r).poly, vy = modp_value(y, p, r).poly;
        t.check(modp_value(prod, p, r).poly == vx * vy, "modp multiplicative");
        t.check(modp_value(sum, p, r).poly == vx + vy, "modp additive");
        t.check(eval_root(x, r).rebased(BaseRing::Fp(p)) == vx, "pi-compatibility");
      }
  }
}

}  // namespace detail

inline Outcome property_suites() {
  detail::Tally t;
  detail::property_suite(t);
  return {11, "Property suites", t.ok(), t.summary()};
}

inline Outcome negative_controls() {
  detail::Tally t;
  auto raises = [](const std::function<void()>& f) -> int {
    try {
      f();
    } catch (const NonExactDivision&) {
      return 1;
    } catch (const InterfaceMismatch&) {
      return 2;
    } catch (const NotAdmissible&) {
      return 3;
    } catch (...) {
      return -1;
    }
    return 0;
  };
  t.check(raises([] { (q_pow(2) + LaurentU(1)).exact_div(q_pow(1) + LaurentU(1)); }) == 1, "exact_div");
  t.check(raises([] { parse_diagram("U(1)\n|1^ |1_ |1^\nA(1)\n"); }) == 2, "interface mismatch");
  t.check(raises([] { wrt(Surgery::from_diagram(builtin("hopf"), {1, 1}), 3); }) == 3, "linked components");
  t.check(raises([] { wrt(Surgery::from_diagram(builtin("unknot"), {2}), 3); }) == 3, "framing 2");
  t.check(raises([] { wrt(Surgery::borromean(2, 1, 1), 3); }) == 3, "non-integral framing");
  return {12, "Negative controls", t.ok(), t.summary()};
}

inline std::vector<std::function<Outcome()>> all_criteria() {
  return {hopf_golden,        borromean_oracle, twist_element,       poincare_triple,
          specialization,     known_wrt,        divisibility,        ohtsuki_congruences,
          one_over_m,         kashaev_coherence, property_suites,    negative_controls};
}

// Runs every criterion; an exception counts as a failure of that criterion.
inline std::vector<Outcome> run_all(const std::function<void(const Outcome&)>& on_result = {}) {
  std::vector<Outcome> out;
  int id = 1;
  for (const auto& c : all_criteria()) {
    Outcome o{id, "criterion " + std::to_string(id), false, ""};
    try {
      o = c();
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    ++id;
    if (on_result) on_result(o);
    out.push_back(o);
  }
  return out;
}

inline std::string format_line(const Outcome& o) {
  return std::string(o.pass ? "PASS" : "FAIL") + " [" + std::to_string(o.id) + "] " + o.title + ": " + o.detail;
}

}  // namespace habiro::acceptance
