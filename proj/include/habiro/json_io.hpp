#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "evalx.hpp"
#include "invariants.hpp"

namespace habiro::io {

using json = nlohmann::json;

namespace detail {

inline json number(const BigInt& a) {
  if (a.fits_slong_p()) return json(a.get_si());
  return json(a.get_str());
}

inline json number(const BigRat& a) {
  if (a.get_den() == 1) return number(a.get_num());
  return json(to_string(a));
}

inline BigInt big_from(const json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    BigInt r;
    if (r.set_str(j.get<std::string>(), 10) != 0) throw FormatError("bad integer '" + j.get<std::string>() + "'");
    return r;
  }
  throw FormatError("expected an integer, got " + j.dump());
}

inline BigRat rat_from(const json& j) {
  if (j.is_string()) {
    BigRat r;
    if (r.set_str(j.get<std::string>(), 10) != 0) throw FormatError("bad rational '" + j.get<std::string>() + "'");
    r.canonicalize();
    return r;
  }
  return BigRat(big_from(j));
}

}  // namespace detail

// {"var":"q","min":-2,"coeffs":[1,0,3]} means q^-2 + 3. The variable is the
// coarsest of q, v, u in which p can be written, unless forced.
inline json laurent_to_json(const LaurentU& p, int step = 0) {
  if (step == 0) step = natural_step(p);
  const LaurentU c = p.compressed(step);
  json coeffs = json::array();
  for (const auto& a : c.coeffs()) coeffs.push_back(detail::number(a));
  return json{{"var", std::string(1, var_name(step))}, {"min", c.is_zero() ? 0 : c.min_exp()}, {"coeffs", coeffs}};
}

inline LaurentU laurent_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_laurent(j.get<std::string>());
    const std::string var = j.at("var").get<std::string>();
    if (var.size() != 1) throw FormatError("bad variable '" + var + "'");
    const int step = var_step_of(var[0]);
    std::vector<BigInt> c;
    for (const auto& a : j.at("coeffs")) c.push_back(detail::big_from(a));
    return LaurentU::from_coeffs(j.at("min").get<int>(), std::move(c)).stretched(step);
  } catch (const json::exception& e) {
    throw FormatError(std::string("polynomial encoding: ") + e.what());
  }
}

inline json habiro_to_json(const HabiroElem& x) {
  json terms = json::array();
  for (const auto& t : x.terms()) terms.push_back(laurent_to_json(q_to_u(t), 4));
  return json{{"depth", x.depth()}, {"terms", terms}};
}

inline HabiroElem habiro_from_json(const json& j) {
  try {
    const int depth = j.at("depth").get<int>();
    std::vector<QPoly> terms;
    for (const auto& t : j.at("terms")) terms.push_back(u_to_q(laurent_from_json(t)));
    return HabiroElem(depth, std::move(terms));
  } catch (const json::exception& e) {
    throw FormatError(std::string("Habiro element encoding: ") + e.what());
  }
}

// Reduced form: a single polynomial together with its modulus (q)_d.
inline json reduced_to_json(const HabiroElem& x, int d) {
  return json{{"value", laurent_to_json(q_to_u(reduce(x, d)), 4)}, {"modulus", "(q)_" + std::to_string(d)}};
}

inline json modpoly_to_json(const ModPoly& m) {
  json mod = json::array(), val = json::array();
  for (const auto& a : m.modulus_coeffs()) mod.push_back(detail::number(a));
  for (const auto& a : m.coeffs()) val.push_back(detail::number(a));
  const std::string var(1, var_name(m.var_step()));
  return json{{"base", m.base().name()},
              {"modulus", json{{"var", var}, {"min", 0}, {"coeffs", mod}}},
              {"value", json{{"var", var}, {"min", 0}, {"coeffs", val}}}};
}

inline BaseRing base_from_name(const std::string& s) {
  if (s == "Z") return BaseRing::Z();
  if (s == "Q") return BaseRing::Q();
  if (s.rfind("Z/", 0) == 0) return BaseRing::Zmod(BigInt(s.substr(2)));
  if (s.rfind("F_", 0) == 0) return BaseRing::Fp(BigInt(s.substr(2)));
  throw FormatError("unknown base ring '" + s + "'");
}

inline ModPoly modpoly_from_json(const json& j) {
  try {
    const BaseRing base = base_from_name(j.at("base").get<std::string>());
    const std::string var = j.at("value").at("var").get<std::string>();
    const int step = var_step_of(var.at(0));
    std::vector<BigInt> mod;
    for (const auto& a : j.at("modulus").at("coeffs")) mod.push_back(detail::big_from(a));
    std::vector<BigRat> val;
    for (const auto& a : j.at("value").at("coeffs")) val.push_back(detail::rat_from(a));
    return ModPoly(base, LaurentU::from_coeffs(0, std::move(mod)), std::move(val), step);
  } catch (const json::exception& e) {
    throw FormatError(std::string("ModPoly encoding: ") + e.what());
  }
}

inline json residue_to_json(const ResidueValue& v) {
  switch (v.kind) {
    case ResidueValue::Kind::ModP:
      return json{{"type", "modp"}, {"p", detail::number(v.p)}, {"r", v.r}, {"value", modpoly_to_json(v.poly)}};
    case ResidueValue::Kind::PAdic:
      return json{{"type", "padic"}, {"p", detail::number(v.p)}, {"e", v.e}, {"value", detail::number(v.residue)},
                  {"terms", v.terms_used}};
    case ResidueValue::Kind::Rational:
      break;
  }
  return json{{"type", "rational"}, {"modulus", detail::number(v.modulus)}, {"value", detail::number(v.residue)},
              {"terms", v.terms_used}};
}

// {"basis":"P'","terms":{"0":"1","2":"v^5"}}
inline json combo_to_json(const BasisCombo& x) {
  json terms = json::object();
  for (const auto& [n, c] : x.terms) terms[std::to_string(n)] = to_string(c);
  return json{{"basis", basis_name(x.basis)}, {"terms", terms}};
}

inline BasisCombo combo_from_json(const json& j) {
  try {
    BasisCombo x(basis_from_name(j.at("basis").get<std::string>()));
    for (const auto& [k, v] : j.at("terms").items()) {
      std::size_t used = 0;
      int n = 0;
      try {
        n = std::stoi(k, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != k.size() || n < 0) throw FormatError("bad basis index '" + k + "'");
      x.add(n, v.is_string() ? parse_frac(v.get<std::string>()) : LaurentFrac(laurent_from_json(v)));
    }
    return x;
  } catch (const json::exception& e) {
    throw FormatError(std::string("basis combination encoding: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A diagram given as "builtin:NAME", inline text, or a path (relative paths
// are resolved against base_dir).
inline Diagram diagram_from_ref(const std::string& ref, const std::string& base_dir) {
  if (ref.rfind("builtin:", 0) == 0) return builtin(ref.substr(8));
  if (ref.find('\n') != std::string::npos || ref.find('(') != std::string::npos) return parse_diagram(ref);
  std::filesystem::path p(ref);
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  return parse_diagram(read_file(p.string()));
}

// {"family":"borromean","params":[1,1,1]}, {"diagram":"...","framings":[1,-1]}
// or {"empty":true}. Without "framings" the blackboard framing is used.
inline Surgery surgery_from_json(const json& j, const std::string& base_dir = "") {
  try {
    if (j.contains("empty") && j.at("empty").get<bool>()) return Surgery::empty();
    if (j.contains("family")) {
      const std::string fam = j.at("family").get<std::string>();
      if (fam != "borromean") throw UnknownName("unknown surgery family '" + fam + "'");
      const auto p = j.at("params").get<std::vector<int>>();
      if (p.size() != 3) throw ShapeMismatch("borromean family needs three parameters");
      return Surgery::borromean(p[0], p[1], p[2]);
    }
    Diagram d = diagram_from_ref(j.at("diagram").get<std::string>(), base_dir);
    if (!j.contains("framings")) return Surgery::blackboard(std::move(d));
    return Surgery::from_diagram(std::move(d), j.at("framings").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw FormatError(std::string("surgery presentation: ") + e.what());
  }
}

inline Surgery surgery_from_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("surgery file '") + path + "': " + e.what());
  }
  return surgery_from_json(j, std::filesystem::path(path).parent_path().string());
}

inline json surgery_to_json(const Surgery& s) {
  if (s.kind == Surgery::Kind::Borromean)
    return json{{"family", "borromean"}, {"params", {s.params[0], s.params[1], s.params[2]}}};
  if (s.diagram.components == 0) return json{{"empty", true}};
  return json{{"diagram", to_text(s.diagram)}, {"framings", s.framings}};
}

}  // namespace habiro::io
