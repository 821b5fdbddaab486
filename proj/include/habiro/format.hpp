#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "frac.hpp"
#include "modpoly.hpp"

namespace habiro {

// The coarsest of u, v, q in which p can be written: 4 (q), 2 (v) or 1 (u).
inline int natural_step(const LaurentU& p) {
  if (p.exponents_divisible_by(4)) return 4;
  if (p.exponents_divisible_by(2)) return 2;
  return 1;
}

inline char var_name(int step) { return step == 4 ? 'q' : step == 2 ? 'v' : 'u'; }

inline int var_step_of(char c) {
  switch (c) {
    case 'u': return 1;
    case 'v': return 2;
    case 'q': return 4;
    default: throw FormatError(std::string("unknown variable '") + c + "'");
  }
}

namespace detail {
template <class Coeff, class Exps>
std::string format_terms(const std::vector<Coeff>& coeffs, Exps exp_of, char var, bool descending) {
  std::ostringstream os;
  bool first = true;
  const std::size_t n = coeffs.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = descending ? n - 1 - k : k;
    const Coeff& c = coeffs[i];
    if (sgn(c) == 0) continue;
    const long e = exp_of(i);
    Coeff a = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    const bool unit = (a == 1);
    if (e == 0) {
      os << to_string(a);
      continue;
    }
    if (!unit) os << to_string(a) << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  if (first) return "0";
  return os.str();
}
}  // namespace detail

// Human-readable form, highest power first, in the coarsest variable.
inline std::string to_string(const LaurentU& p) {
  if (p.is_zero()) return "0";
  const int s = natural_step(p);
  LaurentU c = p.compressed(s);
  const int lo = c.min_exp();
  return detail::format_terms(c.coeffs(), [lo](std::size_t i) { return lo + static_cast<long>(i); }, var_name(s), true);
}

inline std::string to_string(const LaurentFrac& f) {
  if (f.den() == LaurentU(1)) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

inline std::string to_string(const ModPoly& m) {
  return detail::format_terms(m.coeffs(), [](std::size_t i) { return static_cast<long>(i); }, var_name(m.var_step()), true);
}

// Parser for the human form: sums of terms c*x^e with x in {u, v, q},
// optionally "(numerator)/(denominator)" for fractions.
class PolyParser {
 public:
  explicit PolyParser(std::string s) : s_(std::move(s)) {}

  LaurentFrac parse_frac() {
    skip();
    LaurentFrac r;
    if (peek() == '(') {
      ++pos_;
      LaurentU n = parse_sum(')');
      expect(')');
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        expect('(');
        LaurentU d = parse_sum(')');
        expect(')');
        r = LaurentFrac(n, d);
      } else {
        r = LaurentFrac(n);
      }
    } else {
      r = LaurentFrac(parse_sum('\0'));
    }
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return r;
  }

  LaurentU parse_poly() {
    LaurentFrac f = parse_frac();
    if (!(f.den() == LaurentU(1))) fail("expected a Laurent polynomial, got a fraction");
    return f.num();
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw FormatError("cannot parse polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  BigInt parse_uint() {
    std::size_t b = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (b == pos_) fail("expected digits");
    return BigInt(s_.substr(b, pos_ - b));
  }
  long parse_exp() {
    skip();
    bool neg = false;
    bool paren = false;
    if (peek() == '(' || peek() == '{') {
      paren = true;
      ++pos_;
      skip();
    }
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    BigInt e = parse_uint();
    if (paren) {
      skip();
      if (peek() != ')' && peek() != '}') fail("unclosed exponent");
      ++pos_;
    }
    if (!e.fits_slong_p()) fail("exponent too large");
    return neg ? -e.get_si() : e.get_si();
  }
  LaurentU parse_sum(char stop) {
    LaurentU acc;
    skip();
    bool first = true;
    while (true) {
      skip();
      if (peek() == stop || peek() == '\0') break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      BigInt coef = 1;
      bool have_coef = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = parse_uint();
        have_coef = true;
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
        }
      }
      long exp = 0;
      int step = 4;
      char c = peek();
      if (c == 'u' || c == 'v' || c == 'q') {
        step = var_step_of(c);
        ++pos_;
        exp = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          exp = parse_exp();
        }
      } else if (!have_coef) {
        fail("expected a term");
      }
      acc += LaurentU::monomial(coef * sign, static_cast<int>(exp * step));
    }
    if (first) fail("empty expression");
    return acc;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline LaurentU parse_laurent(const std::string& s) { return PolyParser(s).parse_poly(); }
inline LaurentFrac parse_frac(const std::string& s) { return PolyParser(s).parse_frac(); }

}  // namespace habiro
