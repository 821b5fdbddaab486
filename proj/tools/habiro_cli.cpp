#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "habiro/habiro.hpp"

using namespace habiro;
using io::json;

namespace {

struct Common {
  int depth = kDefaultDepth;
  std::string format = "human";
  bool json_out() const { return format == "json"; }
};

// Where a 3-manifold or link comes from.
struct Source {
  std::string builtin_name, diagram_file, surgery_file, element_file;
  std::vector<int> framings, borromean;
  bool empty = false;

  void add_options(CLI::App* app, bool allow_element) {
    app->add_option("--builtin", builtin_name, "builtin diagram: unknot, unknot+1, unknot-1, hopf, trefoil, borromean");
    app->add_option("--diagram", diagram_file, "diagram file in the slice format");
    app->add_option("--surgery", surgery_file, "surgery presentation (JSON)");
    app->add_option("--framings", framings, "surgery framings, one per component (+1 or -1)")->delimiter(',');
    app->add_option("--borromean", borromean, "Borromean family parameters i,j,k")->delimiter(',')->expected(3);
    app->add_flag("--empty", empty, "the empty link (S^3)");
    if (allow_element) app->add_option("--element", element_file, "Habiro ring element (JSON)");
  }

  Diagram diagram() const {
    if (!builtin_name.empty()) return builtin(builtin_name);
    if (!diagram_file.empty()) return parse_diagram(io::read_file(diagram_file));
    throw FormatError("no diagram given; use --builtin or --diagram");
  }

  Surgery surgery() const {
    if (empty) return Surgery::empty();
    if (!surgery_file.empty()) return io::surgery_from_file(surgery_file);
    if (!borromean.empty()) return Surgery::borromean(borromean[0], borromean[1], borromean[2]);
    Diagram d = diagram();
    if (framings.empty()) return Surgery::blackboard(std::move(d));
    return Surgery::from_diagram(std::move(d), framings);
  }

  HabiroElem element(int depth) const {
    if (!element_file.empty()) {
      try {
        const json j = json::parse(io::read_file(element_file));
        // accepts the bare element or the output of `jm --format json`
        return io::habiro_from_json(j.contains("element") ? j.at("element") : j);
      } catch (const json::parse_error& e) {
        throw FormatError(std::string("element file: ") + e.what());
      }
    }
    return jm(surgery(), depth);
  }
};

void print(const Common& c, const std::string& human, const json& machine) {
  if (c.json_out())
    std::cout << machine.dump() << "\n";
  else
    std::cout << human << "\n";
}

std::string habiro_human(const HabiroElem& x) {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n < x.depth(); ++n) {
    if (x.term(n).is_zero()) continue;
    os << (first ? "" : " + ") << "(" << to_string(q_to_u(x.term(n))) << ")*(q)_" << n;
    first = false;
  }
  if (first) os << "0";
  os << "  mod (q)_" << x.depth();
  return os.str();
}

std::string ints_human(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

json ints_json(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact unified WRT invariants: colored Jones polynomials, Habiro ring elements and their specializations"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--depth", common.depth, "truncation depth N (terms modulo (q)_N)")->check(CLI::PositiveNumber);
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"human", "json"}));

  // jones
  Source jsrc;
  std::vector<int> colors;
  bool zero_framed = false;
  auto* jones = app.add_subcommand("jones", "colored Jones polynomial of a framed link");
  jsrc.add_options(jones, false);
  jones->add_option("--colors", colors, "V_n color per component")->delimiter(',')->required();
  jones->add_flag("--zero-framed", zero_framed, "undo the blackboard framing");

  // jm
  Source msrc;
  auto* jmc = app.add_subcommand("jm", "unified invariant J_M of a surgery presentation");
  msrc.add_options(jmc, false);

  // eval
  Source esrc;
  std::string mode;
  int r = 1, e = 1;
  std::string a = "1", b = "1", m = "1", s = "1", p = "2";
  auto* eval = app.add_subcommand("eval", "specialize J_M: root, rational, padic or modp");
  esrc.add_options(eval, true);
  eval->add_option("mode", mode, "root | rational | padic | modp")
      ->required()
      ->check(CLI::IsMember({"root", "rational", "padic", "modp"}));
  eval->add_option("--r", r, "root order");
  eval->add_option("--a", a, "numerator of q = a/b");
  eval->add_option("--b", b, "denominator of q = a/b");
  eval->add_option("--m", m, "modulus");
  eval->add_option("--s", s, "p-adic unit");
  eval->add_option("--p", p, "prime");
  eval->add_option("--e", e, "p-adic precision");

  // ohtsuki
  Source osrc;
  int terms = 5;
  auto* ohts = app.add_subcommand("ohtsuki", "Ohtsuki series coefficients and their congruences");
  osrc.add_options(ohts, true);
  ohts->add_option("--terms", terms, "number of coefficients")->check(CLI::PositiveNumber);

  // taylor
  Source tsrc;
  int tr = 1, tterms = 3;
  auto* tay = app.add_subcommand("taylor", "Taylor coefficients in powers of (q - zeta_r)");
  tsrc.add_options(tay, true);
  tay->add_option("--r", tr, "root order")->check(CLI::PositiveNumber);
  tay->add_option("--terms", tterms, "number of coefficients")->check(CLI::PositiveNumber);

  // wrt
  Source wsrc;
  int wr = 2;
  auto* wrtc = app.add_subcommand("wrt", "classical WRT invariant at all primitive r-th roots");
  wsrc.add_options(wrtc, false);
  wrtc->add_option("--r", wr, "root order")->required()->check(CLI::PositiveNumber);

  // kashaev
  int ki = 1, kj = 1;
  std::vector<int> kroots;
  auto* kash = app.add_subcommand("kashaev", "unified Kashaev invariant of the knot K_{i,j}");
  kash->add_option("--i", ki, "first twist parameter");
  kash->add_option("--j", kj, "second twist parameter");
  kash->add_option("--roots", kroots, "root orders at which to evaluate")->delimiter(',');

  // check
  std::string suite;
  auto* check = app.add_subcommand("check", "run a named check suite");
  check->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember({"spec-accept"}));

  // scan
  Source ssrc;
  std::vector<long> primes{2, 3, 5, 7};
  std::vector<int> orders;
  auto* scan = app.add_subcommand("scan", "CSV table of mod-p values and their nonvanishing");
  ssrc.add_options(scan, true);
  scan->add_option("--primes", primes, "primes")->delimiter(',');
  scan->add_option("--orders", orders, "root orders (default 1..depth)")->delimiter(',');

  // expand
  std::string combo, target = "V";
  auto* expand = app.add_subcommand("expand", "rewrite a basis combination in another basis");
  expand->add_option("combo", combo, "basis combination (JSON text or file)")->required();
  expand->add_option("--to", target, "target basis: V, P, P', P'', tP', S");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    const int N = common.depth;
    if (*jones) {
      const Diagram d = jsrc.diagram();
      const LaurentU v = zero_framed ? colored_jones_zero_framed(d, colors) : colored_jones(d, colors);
      print(common, to_string(v), io::laurent_to_json(v));
    } else if (*jmc) {
      const HabiroElem x = jm(msrc.surgery(), N);
      print(common, habiro_human(x) + "\nreduced: " + to_string(q_to_u(reduce(x, N))) + "  mod (q)_" + std::to_string(N),
            json{{"element", io::habiro_to_json(x)}, {"reduced", io::reduced_to_json(x, N)}});
    } else if (*eval) {
      const HabiroElem x = esrc.element(N);
      if (mode == "root") {
        const ModPoly v = eval_root(x, r);
        print(common, to_string(v) + "  mod Phi_" + std::to_string(r), io::modpoly_to_json(v));
      } else {
        ResidueValue v;
        if (mode == "rational") v = eval_rational(x, BigInt(a), BigInt(b), BigInt(m));
        if (mode == "padic") v = eval_padic(x, BigInt(s), BigInt(p), e);
        if (mode == "modp") v = modp_value(x, BigInt(p), r);
        print(common, to_string(v), io::residue_to_json(v));
      }
    } else if (*ohts) {
      const HabiroElem x = osrc.element(std::max(N, terms));
      const auto lambda = ohtsuki(x, terms);
      std::string human = "lambda: " + ints_human(lambda);
      json j{{"lambda", ints_json(lambda)}};
      if (lambda.size() >= 5) {
        const Report rep = congruence_report(lambda);
        json lines = json::array();
        for (const auto& l : rep.lines) {
          human += "\n" + std::string(l.pass ? "pass " : "FAIL ") + l.name + "  (" + l.detail + ")";
          lines.push_back(json{{"relation", l.name}, {"pass", l.pass}, {"detail", l.detail}});
        }
        j["congruences"] = lines;
      }
      print(common, human, j);
    } else if (*tay) {
      const HabiroElem x = tsrc.element(std::max(N, tr * tterms));
      const auto t = taylor(x, tr, tterms);
      std::string human;
      json arr = json::array();
      for (std::size_t k = 0; k < t.size(); ++k) {
        human += (k ? "\n" : "") + std::string("c_") + std::to_string(k) + " = " + to_string(t[k]);
        arr.push_back(io::modpoly_to_json(t[k]));
      }
      print(common, human, json{{"r", tr}, {"coefficients", arr}});
    } else if (*wrtc) {
      const ModPoly v = wrt(wsrc.surgery(), wr);
      print(common, to_string(v) + "  mod Phi_" + std::to_string(wr), io::modpoly_to_json(v));
    } else if (*kash) {
      const TwoVarKnot k = knot_borromean(ki, kj, N);
      const HabiroElem x = theta0(k);
      std::string human = habiro_human(x);
      json j{{"element", io::habiro_to_json(x)}};
      json vals = json::object();
      for (int rr : kroots) {
        const ModPoly v = eval_root(x, rr);
        human += "\nr=" + std::to_string(rr) + ": " + to_string(v);
        vals[std::to_string(rr)] = io::modpoly_to_json(v);
      }
      j["roots"] = vals;
      print(common, human, j);
    } else if (*check) {
      bool ok = true;
      json arr = json::array();
      acceptance::run_all([&](const acceptance::Outcome& o) {
        ok = ok && o.pass;
        if (common.json_out())
          arr.push_back(json{{"id", o.id}, {"title", o.title}, {"pass", o.pass}, {"detail", o.detail}});
        else
          std::cout << acceptance::format_line(o) << std::endl;
      });
      if (common.json_out()) std::cout << arr.dump() << "\n";
      return ok ? 0 : 1;
    } else if (*scan) {
      const HabiroElem x = ssrc.element(N);
      if (orders.empty())
        for (int k = 1; k <= x.depth(); ++k) orders.push_back(k);
      std::cout << modp_scan_csv(x, primes, orders);
    } else if (*expand) {
      const std::string text = combo.find('{') == std::string::npos ? io::read_file(combo) : combo;
      json j;
      try {
        j = json::parse(text);
      } catch (const json::parse_error& err) {
        throw FormatError(std::string("basis combination: ") + err.what());
      }
      const BasisCombo out = change_basis(io::combo_from_json(j), basis_from_name(target));
      std::string human;
      for (const auto& [n, c] : out.terms)
        human += (human.empty() ? "" : " + ") + std::string("(") + to_string(c) + ")*" + basis_name(out.basis) + "_" + std::to_string(n);
      print(common, human.empty() ? "0" : human, io::combo_to_json(out));
    }
  } catch (const InputError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const DomainError& err) {
    std::cerr << "domain error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
