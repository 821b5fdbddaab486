#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "habiro/habiro.hpp"

using namespace habiro;

namespace {

std::string sample(const std::string& name) {
  std::ifstream in(std::string(HABIRO_SAMPLES_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Reduced colored Jones of the trefoil from its cyclotomic expansion,
// sum_k (-1)^k q^{k(k+3)/2} prod_{j=1}^k {n+1+j}{n+1-j}.
LaurentU trefoil_reduced(int n) {
  LaurentU s;
  for (int k = 0; k <= n; ++k) {
    LaurentU t = q_pow(k * (k + 3) / 2);
    for (int j = 1; j <= k; ++j) t = t * qc::qint_bal(n + 1 + j) * qc::qint_bal(n + 1 - j);
    s += k % 2 ? -t : t;
  }
  return s;
}

void expect_error_at(const std::string& text, int line) {
  try {
    parse_diagram(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), line);
  }
}

}  // namespace

TEST(DiagramParser, CommentsAndBlankLinesAreIgnored) {
  Diagram d = parse_diagram("# a single circle\nU(1)\n\nA(1)   # closing cap\n");
  EXPECT_EQ(d.components, 1);
  EXPECT_EQ(colored_jones(d, {2}), qc::qnum(3));
}

TEST(DiagramParser, SyntaxErrorsCarryPositions) {
  expect_error_at("U(1)\nX*(1,1)\n", 2);
  expect_error_at("U(1)\nA(1\n", 2);
  expect_error_at("Q(1)\n", 1);
}

TEST(DiagramParser, StructuralErrors) {
  EXPECT_THROW(parse_diagram("U(1)\n"), OpenDiagram);
  EXPECT_THROW(parse_diagram("U(1)\nA(2)\n"), InterfaceMismatch);
  EXPECT_THROW(parse_diagram("U(1)\n|1^ |1^\nA(1)\n"), InterfaceMismatch);
  EXPECT_THROW(parse_diagram(sample("bad_interface.txt")), InterfaceMismatch);
}

TEST(DiagramParser, TextRoundTrip) {
  for (const auto& name : builtin_names()) {
    Diagram d = builtin(name);
    EXPECT_EQ(to_text(parse_diagram(to_text(d))), to_text(d)) << name;
  }
}

TEST(DiagramParser, SampleFilesMatchBuiltins) {
  for (const char* name : {"borromean", "trefoil", "hopf"})
    EXPECT_EQ(to_text(parse_diagram(sample(std::string(name) + ".txt"))), to_text(builtin(name))) << name;
}

TEST(DiagramParser, UnknownBuiltin) { EXPECT_THROW(builtin("figure-nine"), UnknownName); }

TEST(LinkingData, BuiltinLinks) {
  EXPECT_EQ(linking_data(builtin("hopf")), (LinkingMatrix{{0, -1}, {-1, 0}}));
  EXPECT_EQ(linking_data(builtin("borromean")), (LinkingMatrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(writhes(builtin("trefoil")), std::vector<long>{-3});
  EXPECT_EQ(writhes(builtin("unknot+1")), std::vector<long>{1});
  EXPECT_EQ(writhes(builtin("unknot-1")), std::vector<long>{-1});
}

TEST(ColoredJones, UnknotIsQuantumDimension) {
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(colored_jones(builtin("unknot"), {n}), qc::qnum(n + 1));
}

TEST(ColoredJones, HopfLink) {
  const Diagram h = builtin("hopf");
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(colored_jones(h, {m, n}), qc::qnum((m + 1) * (n + 1)));
}

TEST(ColoredJones, TrefoilMatchesCyclotomicExpansion) {
  const Diagram t = builtin("trefoil");
  EXPECT_EQ(colored_jones_zero_framed(t, {1}).exact_div(qc::qnum(2)), q_pow(1) + q_pow(3) - q_pow(4));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(colored_jones_zero_framed(t, {n}), trefoil_reduced(n) * qc::qnum(n + 1)) << n;
}

TEST(ColoredJones, CurlContributesTwist) {
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(colored_jones(builtin("unknot+1"), {n}), twist_eigen(n, 1) * qc::qnum(n + 1));
    EXPECT_EQ(colored_jones(builtin("unknot-1"), {n}), twist_eigen(n, -1) * qc::qnum(n + 1));
    EXPECT_EQ(colored_jones_zero_framed(builtin("unknot+1"), {n}), qc::qnum(n + 1));
  }
}

TEST(ColoredJones, FramingAdjustInvertsItself) {
  const Diagram t = builtin("trefoil");
  LaurentU j = colored_jones(t, {2});
  EXPECT_EQ(framing_adjust(framing_adjust(j, {2}, {3}), {2}, {-3}), j);
  EXPECT_EQ(framing_adjust(j, {2}, {3}), colored_jones_zero_framed(t, {2}));
}

TEST(ColoredJones, ReidemeisterTwoInsertion) {
  const Diagram plain = parse_diagram(braid_closure_text(2, {-1, -1}));
  const Diagram padded = parse_diagram(braid_closure_text(2, {1, -1, -1, -1}));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(colored_jones(padded, {m, n}), colored_jones(plain, {m, n}));
  const Diagram unlink = parse_diagram(braid_closure_text(2, {1, -1}));
  EXPECT_EQ(colored_jones(unlink, {1, 2}), qc::qnum(2) * qc::qnum(3));
}

TEST(ColoredJones, ReidemeisterThreeMove) {
  const Diagram a = parse_diagram(braid_closure_text(3, {1, 2, 1, -2}));
  const Diagram b = parse_diagram(braid_closure_text(3, {2, 1, 2, -2}));
  ASSERT_EQ(a.components, b.components);
  std::vector<int> colors(static_cast<std::size_t>(a.components), 2);
  EXPECT_EQ(colored_jones(a, colors), colored_jones(b, colors));
}

TEST(ColoredJones, ComponentRelabeling) {
  // Rename components 1 -> 2 -> 3 -> 1 in the Borromean sample.
  std::string text = sample("borromean.txt");
  for (char& c : text) {
    if (c == '1') c = 'b';
    else if (c == '2') c = 'c';
    else if (c == '3') c = 'a';
  }
  for (char& c : text) {
    if (c == 'a') c = '1';
    else if (c == 'b') c = '2';
    else if (c == 'c') c = '3';
  }
  const Diagram orig = builtin("borromean"), relabeled = parse_diagram(text);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k) EXPECT_EQ(colored_jones(relabeled, {j, k, i}), colored_jones(orig, {i, j, k}));
}

TEST(ColoredJones, TrivialColorForgetsComponent) {
  // Coloring a component by V_0 deletes it; the Borromean rings minus one
  // component is a two-component unlink.
  const Diagram b = builtin("borromean");
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(colored_jones(b, {m, n, 0}), qc::qnum(m + 1) * qc::qnum(n + 1));
}

TEST(ColoredJones, ColorCountMustMatch) {
  EXPECT_THROW(colored_jones(builtin("hopf"), {1}), ColorCountMismatch);
}

TEST(ColoredJones, MultilinearExtensionIsLinear) {
  const Diagram h = builtin("hopf");
  BasisCombo x(Basis::V), y = BasisCombo::single(Basis::V, 1);
  x.add(2, LaurentFrac(q_pow(1)));
  x.add(0, LaurentFrac(3));
  LaurentFrac expected = LaurentFrac(q_pow(1) * colored_jones(h, {2, 1})) + LaurentFrac(LaurentU(3) * colored_jones(h, {0, 1}));
  EXPECT_EQ(jones_multilinear(h, {x, y}), expected);
  EXPECT_THROW(jones_multilinear(h, {x}), ColorCountMismatch);
}
