#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace habiro {

// A strand crossing a horizontal level of the diagram: its component
// (0-based) and whether it points up the page.
struct Strand {
  int comp = 0;
  bool up = true;
  friend bool operator==(const Strand& a, const Strand& b) { return a.comp == b.comp && a.up == b.up; }
};

// Elementary pieces of a slice. Slices are read bottom to top; "below" is the
// interface an event consumes and "above" the one it produces.
struct Event {
  enum class Kind { Identity, Cup, Cap, Crossing };
  Kind kind = Kind::Identity;
  int sign = 0;               // crossings: +1 / -1 (oriented sign)
  std::vector<Strand> below;  // consumed strands, left to right
  std::vector<Strand> above;  // produced strands, left to right
  int line = 0, column = 0;   // source position (1-based)
};

struct Slice {
  std::vector<Event> events;
  std::vector<Strand> below, above;
};

struct Diagram {
  std::string name;
  std::string note;
  int components = 0;
  std::vector<Slice> slices;  // bottom first
};

// Linking numbers off the diagonal, writhe (blackboard framing) on it.
using LinkingMatrix = std::vector<std::vector<long>>;

namespace detail {

class DiagramParser {
 public:
  explicit DiagramParser(const std::string& text) : text_(text) {}

  Diagram parse() {
    Diagram d;
    std::vector<Strand> iface;
    std::istringstream in(text_);
    std::string raw;
    int line_no = 0;
    int last_line = 0;
    std::map<int, int> comp_seen;  // 1-based id -> count of uses
    while (std::getline(in, raw)) {
      ++line_no;
      std::string line = raw;
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      last_line = line_no;
      Slice s;
      s.below = iface;
      std::size_t consumed = 0;
      std::size_t pos = 0;
      while (true) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos >= line.size()) break;
        std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        const std::string tok = line.substr(start, pos - start);
        const int col = static_cast<int>(start) + 1;
        Event ev = parse_token(tok, line_no, col);
        // bind the consumed strands
        const std::size_t need = ev.kind == Event::Kind::Identity ? 1 : ev.kind == Event::Kind::Cup ? 0 : 2;
        if (consumed + need > iface.size())
          throw InterfaceMismatch("line " + std::to_string(line_no) + ", column " + std::to_string(col) +
                                  ": event consumes more strands than the interface below has");
        std::vector<Strand> got(iface.begin() + static_cast<std::ptrdiff_t>(consumed),
                                iface.begin() + static_cast<std::ptrdiff_t>(consumed + need));
        consumed += need;
        bind(ev, got, line_no, col);
        for (const auto& st : ev.above) comp_seen[st.comp]++;
        s.events.push_back(std::move(ev));
      }
      if (consumed != iface.size())
        throw InterfaceMismatch("line " + std::to_string(line_no) + ": slice consumes " + std::to_string(consumed) +
                                " strands but the interface below has " + std::to_string(iface.size()));
      iface.clear();
      for (const auto& ev : s.events) iface.insert(iface.end(), ev.above.begin(), ev.above.end());
      s.above = iface;
      d.slices.push_back(std::move(s));
    }
    if (!iface.empty())
      throw OpenDiagram("diagram ends with " + std::to_string(iface.size()) + " open strands after line " + std::to_string(last_line));
    if (d.slices.empty()) throw OpenDiagram("empty diagram");
    // components must be 1..m, each a single loop
    int m = 0;
    for (const auto& [c, n] : comp_seen) m = std::max(m, c + 1);
    for (int c = 0; c < m; ++c)
      if (!comp_seen.count(c)) throw InterfaceMismatch("component " + std::to_string(c + 1) + " is never used");
    d.components = m;
    check_loops(d);
    return d;
  }

 private:
  [[noreturn]] static void syntax(int line, int col, const std::string& msg) { throw SyntaxError(line, col, msg); }

  static int parse_comp(const std::string& tok, std::size_t& i, int line, int col) {
    std::size_t b = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (b == i) syntax(line, col + static_cast<int>(b), "expected a component number");
    if (i - b > 6) syntax(line, col + static_cast<int>(b), "component number too large");
    int c = std::stoi(tok.substr(b, i - b));
    if (c < 1) syntax(line, col + static_cast<int>(b), "component numbers start at 1");
    return c - 1;
  }

  static Event parse_token(const std::string& tok, int line, int col) {
    Event ev;
    ev.line = line;
    ev.column = col;
    std::size_t i = 0;
    auto expect = [&](char c) {
      if (i >= tok.size() || tok[i] != c) syntax(line, col + static_cast<int>(i), std::string("expected '") + c + "'");
      ++i;
    };
    if (tok[0] == '|') {
      i = 1;
      int c = parse_comp(tok, i, line, col);
      if (i >= tok.size() || (tok[i] != '^' && tok[i] != '_')) syntax(line, col + static_cast<int>(i), "expected '^' or '_'");
      ev.kind = Event::Kind::Identity;
      ev.above = {Strand{c, tok[i] == '^'}};
      ++i;
    } else if (tok[0] == 'U' || tok[0] == 'A') {
      ev.kind = tok[0] == 'U' ? Event::Kind::Cup : Event::Kind::Cap;
      i = 1;
      int orient = 0;  // 0 unspecified, 1 left leg up, -1 left leg down
      if (i < tok.size() && (tok[i] == '^' || tok[i] == '_')) {
        orient = tok[i] == '^' ? 1 : -1;
        ++i;
      }
      expect('(');
      int c = parse_comp(tok, i, line, col);
      expect(')');
      if (ev.kind == Event::Kind::Cup) {
        const bool left_up = orient >= 0;
        ev.above = {Strand{c, left_up}, Strand{c, !left_up}};
      } else {
        ev.below = {Strand{c, orient >= 0}, Strand{c, orient < 0}};
        ev.sign = orient;  // remembered for validation in bind()
      }
    } else if (tok[0] == 'X') {
      ev.kind = Event::Kind::Crossing;
      i = 1;
      if (i >= tok.size() || (tok[i] != '+' && tok[i] != '-')) syntax(line, col + static_cast<int>(i), "expected '+' or '-' after X");
      ev.sign = tok[i] == '+' ? 1 : -1;
      ++i;
      expect('(');
      int a = parse_comp(tok, i, line, col);
      expect(',');
      int b = parse_comp(tok, i, line, col);
      expect(')');
      ev.below = {Strand{a, true}, Strand{b, true}};
    } else {
      syntax(line, col, "unknown event '" + tok + "'");
    }
    if (i != tok.size()) syntax(line, col + static_cast<int>(i), "unexpected trailing characters in '" + tok + "'");
    return ev;
  }

  static void bind(Event& ev, const std::vector<Strand>& got, int line, int col) {
    const std::string where = "line " + std::to_string(line) + ", column " + std::to_string(col) + ": ";
    switch (ev.kind) {
      case Event::Kind::Identity:
        if (!(got[0] == ev.above[0]))
          throw InterfaceMismatch(where + "identity strand does not match the strand below (component/orientation)");
        ev.below = got;
        break;
      case Event::Kind::Cup:
        break;
      case Event::Kind::Cap: {
        if (got[0].comp != ev.below[0].comp || got[1].comp != ev.below[0].comp)
          throw InterfaceMismatch(where + "cap joins strands of a different component");
        if (got[0].up == got[1].up) throw InterfaceMismatch(where + "cap joins two strands with the same orientation");
        if (ev.sign != 0 && got[0].up != (ev.sign > 0))
          throw InterfaceMismatch(where + "cap orientation marker disagrees with the strands below");
        ev.sign = 0;
        ev.below = got;
        break;
      }
      case Event::Kind::Crossing:
        if (got[0].comp != ev.below[0].comp || got[1].comp != ev.below[1].comp)
          throw InterfaceMismatch(where + "crossing components do not match the strands below");
        ev.below = got;
        ev.above = {got[1], got[0]};
        break;
    }
  }

  static void check_loops(const Diagram& d) {
    // union-find over strand segments
    std::vector<int> parent;
    auto make = [&]() {
      parent.push_back(static_cast<int>(parent.size()));
      return static_cast<int>(parent.size()) - 1;
    };
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<int> ids;
    std::map<int, int> comp_of_set_rep;
    std::vector<int> seg_comp;
    for (const auto& s : d.slices) {
      std::vector<int> next;
      std::size_t k = 0;
      for (const auto& ev : s.events) {
        switch (ev.kind) {
          case Event::Kind::Identity:
            next.push_back(ids[k++]);
            break;
          case Event::Kind::Cup: {
            int n = make();
            seg_comp.push_back(ev.above[0].comp);
            next.push_back(n);
            next.push_back(n);
            break;
          }
          case Event::Kind::Cap: {
            int a = find(ids[k]), b = find(ids[k + 1]);
            parent[a] = b;
            k += 2;
            break;
          }
          case Event::Kind::Crossing:
            next.push_back(ids[k + 1]);
            next.push_back(ids[k]);
            k += 2;
            break;
        }
      }
      ids = std::move(next);
    }
    std::vector<std::set<int>> roots(static_cast<std::size_t>(d.components));
    for (std::size_t i = 0; i < parent.size(); ++i) roots[static_cast<std::size_t>(seg_comp[i])].insert(find(static_cast<int>(i)));
    for (int c = 0; c < d.components; ++c)
      if (roots[static_cast<std::size_t>(c)].size() != 1)
        throw InterfaceMismatch("component " + std::to_string(c + 1) + " is not a single closed loop");
  }

  const std::string& text_;
};

}  // namespace detail

inline Diagram parse_diagram(const std::string& text) { return detail::DiagramParser(text).parse(); }

// Writes a diagram back in the slice format; parse_diagram(to_text(d)) == d.
inline std::string to_text(const Diagram& d) {
  std::ostringstream os;
  for (const auto& s : d.slices) {
    bool first = true;
    for (const auto& ev : s.events) {
      if (!first) os << ' ';
      first = false;
      switch (ev.kind) {
        case Event::Kind::Identity:
          os << '|' << ev.above[0].comp + 1 << (ev.above[0].up ? '^' : '_');
          break;
        case Event::Kind::Cup:
          os << "U" << (ev.above[0].up ? '^' : '_') << '(' << ev.above[0].comp + 1 << ')';
          break;
        case Event::Kind::Cap:
          os << "A(" << ev.below[0].comp + 1 << ')';
          break;
        case Event::Kind::Crossing:
          os << 'X' << (ev.sign > 0 ? '+' : '-') << '(' << ev.below[0].comp + 1 << ',' << ev.below[1].comp + 1 << ')';
          break;
      }
    }
    os << '\n';
  }
  return os.str();
}

inline LinkingMatrix linking_data(const Diagram& d) {
  const auto m = static_cast<std::size_t>(d.components);
  LinkingMatrix twice(m, std::vector<long>(m, 0));
  for (const auto& s : d.slices)
    for (const auto& ev : s.events) {
      if (ev.kind != Event::Kind::Crossing) continue;
      const auto a = static_cast<std::size_t>(ev.below[0].comp), b = static_cast<std::size_t>(ev.below[1].comp);
      if (a == b) {
        twice[a][a] += 2 * ev.sign;
      } else {
        twice[a][b] += ev.sign;
        twice[b][a] += ev.sign;
      }
    }
  for (auto& row : twice)
    for (auto& x : row) {
      if (x % 2) throw DomainError("odd mixed crossing count; diagram is not closed");
      x /= 2;
    }
  return twice;
}

inline std::vector<long> writhes(const Diagram& d) {
  auto lk = linking_data(d);
  std::vector<long> w;
  for (std::size_t i = 0; i < lk.size(); ++i) w.push_back(lk[i][i]);
  return w;
}

// Closure of a braid on `width` strands; generator i > 0 is sigma_i
// (positive crossing of strands i, i+1), i < 0 its inverse. Components are
// numbered by the cycles of the braid permutation.
inline std::string braid_closure_text(int width, const std::vector<int>& word) {
  std::vector<int> perm(static_cast<std::size_t>(width));
  std::iota(perm.begin(), perm.end(), 0);
  for (int g : word) {
    const int i = std::abs(g) - 1;
    if (i < 0 || i + 1 >= width) throw DomainError("braid generator out of range");
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
  }
  // perm[pos] = starting strand now at pos; the cycle structure is the same
  std::vector<int> comp(static_cast<std::size_t>(width), -1);
  int ncomp = 0;
  for (int s = 0; s < width; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    int x = s;
    while (comp[static_cast<std::size_t>(x)] < 0) {
      comp[static_cast<std::size_t>(x)] = ncomp;
      x = perm[static_cast<std::size_t>(x)];
    }
    ++ncomp;
  }
  std::ostringstream os;
  auto ident = [&](int c, bool up) { os << '|' << c + 1 << (up ? '^' : '_'); };
  // nested cups: strand k pairs with its return strand
  for (int k = 0; k < width; ++k) {
    for (int j = 0; j < k; ++j) ident(comp[static_cast<std::size_t>(j)], true), os << ' ';
    os << "U^(" << comp[static_cast<std::size_t>(k)] + 1 << ')';
    for (int j = k - 1; j >= 0; --j) os << ' ', ident(comp[static_cast<std::size_t>(j)], false);
    os << '\n';
  }
  std::vector<int> cur = comp;  // component at each braid position
  for (int g : word) {
    const int i = std::abs(g) - 1;
    for (int j = 0; j < i; ++j) ident(cur[static_cast<std::size_t>(j)], true), os << ' ';
    os << 'X' << (g > 0 ? '+' : '-') << '(' << cur[static_cast<std::size_t>(i)] + 1 << ',' << cur[static_cast<std::size_t>(i + 1)] + 1 << ')';
    for (int j = i + 2; j < width; ++j) os << ' ', ident(cur[static_cast<std::size_t>(j)], true);
    for (int j = width - 1; j >= 0; --j) os << ' ', ident(comp[static_cast<std::size_t>(j)], false);
    os << '\n';
    std::swap(cur[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(i + 1)]);
  }
  for (int k = width - 1; k >= 0; --k) {
    for (int j = 0; j < k; ++j) ident(cur[static_cast<std::size_t>(j)], true), os << ' ';
    os << "A(" << cur[static_cast<std::size_t>(k)] + 1 << ')';
    for (int j = k - 1; j >= 0; --j) os << ' ', ident(comp[static_cast<std::size_t>(j)], false);
    os << '\n';
  }
  return os.str();
}

inline std::vector<std::string> builtin_names() {
  return {"unknot", "unknot+1", "unknot-1", "hopf", "trefoil", "borromean"};
}

inline Diagram builtin(const std::string& name) {
  Diagram d;
  if (name == "unknot")
    d = parse_diagram(braid_closure_text(1, {}));
  else if (name == "unknot+1")
    d = parse_diagram(braid_closure_text(2, {1}));
  else if (name == "unknot-1")
    d = parse_diagram(braid_closure_text(2, {-1}));
  else if (name == "hopf")
    d = parse_diagram(braid_closure_text(2, {-1, -1}));
  else if (name == "trefoil") {
    // The knot K_{1,1} obtained from the Borromean rings by -1 surgery on two
    // components. With the twist convention fixed by J(U_+) = q^{n(n+2)/4}[n+1]
    // this is the closure of sigma_1^{-3}: three negative crossings.
    d = parse_diagram(braid_closure_text(2, {-1, -1, -1}));
    d.note = "trefoil K_{1,1}; intrinsic framing -3 (blackboard writhe)";
  } else if (name == "borromean")
    d = parse_diagram(braid_closure_text(3, {1, -2, 1, -2, 1, -2}));
  else
    throw UnknownName("no builtin diagram named '" + name + "'");
  d.name = name;
  return d;
}

}  // namespace habiro
