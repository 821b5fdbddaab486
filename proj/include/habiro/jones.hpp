#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <unordered_map>
#include <vector>

#include "diagram.hpp"
#include "rep.hpp"

namespace habiro {

namespace detail {

// Index tuples of the current interface packed into 64 bits.
struct KeyCodec {
  int bits = 1;
  explicit KeyCodec(int max_color) {
    while ((1 << bits) <= max_color) ++bits;
  }
  std::uint64_t get(std::uint64_t key, std::size_t pos) const {
    return (key >> (pos * static_cast<std::size_t>(bits))) & ((std::uint64_t{1} << bits) - 1);
  }
  std::uint64_t put(std::uint64_t key, std::size_t pos, std::uint64_t v) const {
    return key | (v << (pos * static_cast<std::size_t>(bits)));
  }
};

template <class C>
struct TypedTerm {
  int first, second;
  LaurentPoly<C> coeff;
};

// Tensor of one event in the top-to-bottom reading: inputs are the strands
// above the event, outputs the strands below.
template <class C>
struct EventTensor {
  Event::Kind kind;
  std::size_t in_pos, out_pos;  // first position in the above / below interface
  int color = 0;
  std::vector<LaurentPoly<C>> diag;  // cups and caps: weight of the pair (i, i)
  const std::vector<std::vector<TypedTerm<C>>>* block = nullptr;
  int dim_right = 0;  // crossings: dimension of the upper-right strand
};

template <class C>
class Contractor {
 public:
  Contractor(const Diagram& d, const std::vector<int>& colors) : d_(d), colors_(colors) {
    int mx = 0;
    for (int c : colors) mx = std::max(mx, c);
    codec_ = KeyCodec(mx);
    std::size_t width = 0;
    for (const auto& s : d.slices) width = std::max(width, std::max(s.above.size(), s.below.size()));
    if (width * static_cast<std::size_t>(codec_.bits) > 64)
      throw DomainError("diagram too wide for the packed state representation");
  }

  LaurentPoly<C> run() {
    std::unordered_map<std::uint64_t, LaurentPoly<C>> state;
    state.emplace(0, LaurentPoly<C>(1));
    for (std::size_t si = d_.slices.size(); si-- > 0;) {
      const Slice& s = d_.slices[si];
      std::vector<EventTensor<C>> tensors = prepare(s);
      std::unordered_map<std::uint64_t, LaurentPoly<C>> next;
      next.reserve(state.size() * 2);
      std::vector<std::pair<std::uint64_t, const LaurentPoly<C>*>> partial, grown;
      for (const auto& [key, val] : state) {
        // expand event by event; coefficient pointers stay null for factor 1
        partial.assign(1, {0, nullptr});
        std::deque<LaurentPoly<C>> owned;  // products when two events both carry factors
        for (const auto& t : tensors) {
          grown.clear();
          for (const auto& [okey, fac] : partial) expand(t, key, okey, fac, grown, owned);
          partial.swap(grown);
          if (partial.empty()) break;
        }
        for (const auto& [okey, fac] : partial) {
          auto& dst = next[okey];
          if (fac)
            dst.add_product(val, *fac);
          else
            dst += val;
        }
      }
      state.clear();
      for (auto& [k, v] : next)
        if (!v.is_zero()) state.emplace(k, std::move(v));
    }
    auto it = state.find(0);
    return it == state.end() ? LaurentPoly<C>() : it->second;
  }

 private:
  Module module_of(const Strand& s) const { return Module{colors_[static_cast<std::size_t>(s.comp)], s.up}; }

  std::vector<EventTensor<C>> prepare(const Slice& s) {
    std::vector<EventTensor<C>> out;
    std::size_t in_pos = 0, out_pos = 0;
    for (const auto& ev : s.events) {
      EventTensor<C> t;
      t.kind = ev.kind;
      t.in_pos = in_pos;
      t.out_pos = out_pos;
      switch (ev.kind) {
        case Event::Kind::Identity:
          t.color = colors_[static_cast<std::size_t>(ev.above[0].comp)];
          break;
        case Event::Kind::Cap: {
          // top-down: creates the pair. Left leg down: coev = sum x_i (x) x^i.
          // Left leg up: coev' = sum x^i (x) K x_i.
          const Module M = module_of(ev.below[1]);
          t.color = M.n;
          for (int i = 0; i <= M.n; ++i)
            t.diag.push_back(ev.below[0].up ? v_pow(M.n - 2 * i).convert<C>() : LaurentPoly<C>(1));
          break;
        }
        case Event::Kind::Cup: {
          // top-down: consumes the pair. Left leg up: ev(f (x) x) = f(x).
          // Left leg down: ev'(x (x) f) = f(K^{-1} x).
          const Module M = module_of(ev.above[0]);
          t.color = M.n;
          for (int i = 0; i <= M.n; ++i)
            t.diag.push_back(ev.above[0].up ? LaurentPoly<C>(1) : v_pow(-(M.n - 2 * i)).convert<C>());
          break;
        }
        case Event::Kind::Crossing: {
          // Above: (b-strand, a-strand); below: (a-strand, b-strand). The
          // upper-left to lower-right strand carries X, the other one Y.
          const Module X = module_of(ev.above[0]);
          const Module Y = module_of(ev.above[1]);
          const bool same = ev.above[0].up == ev.above[1].up;
          const bool positive_type = ev.sign == (same ? 1 : -1);
          t.block = &typed_block(X, Y, !positive_type);
          t.dim_right = Y.dim();
          break;
        }
      }
      in_pos += ev.above.size();
      out_pos += ev.below.size();
      out.push_back(std::move(t));
    }
    return out;
  }

  const std::vector<std::vector<TypedTerm<C>>>& typed_block(const Module& X, const Module& Y, bool inverse) {
    auto key = std::make_tuple(X, Y, inverse);
    auto it = blocks_.find(key);
    if (it != blocks_.end()) return it->second;
    auto blk = braid_block(X, Y, inverse);
    std::vector<std::vector<TypedTerm<C>>> cols;
    for (const auto& col : blk->columns) {
      std::vector<TypedTerm<C>> tc;
      for (const auto& term : col) tc.push_back({term.first, term.second, term.coeff.template convert<C>()});
      cols.push_back(std::move(tc));
    }
    return blocks_.emplace(key, std::move(cols)).first->second;
  }

  void expand(const EventTensor<C>& t, std::uint64_t in_key, std::uint64_t okey, const LaurentPoly<C>* fac,
              std::vector<std::pair<std::uint64_t, const LaurentPoly<C>*>>& grown, std::deque<LaurentPoly<C>>& owned) {
    auto combine = [&](const LaurentPoly<C>* a, const LaurentPoly<C>* b) -> const LaurentPoly<C>* {
      if (!a) return b;
      if (!b) return a;
      owned.push_back(*a * *b);
      return &owned.back();
    };
    switch (t.kind) {
      case Event::Kind::Identity:
        grown.push_back({codec_.put(okey, t.out_pos, codec_.get(in_key, t.in_pos)), fac});
        break;
      case Event::Kind::Cap:
        for (int i = 0; i <= t.color; ++i) {
          std::uint64_t k = codec_.put(codec_.put(okey, t.out_pos, static_cast<std::uint64_t>(i)), t.out_pos + 1, static_cast<std::uint64_t>(i));
          const auto& w = t.diag[static_cast<std::size_t>(i)];
          grown.push_back({k, combine(fac, is_one(w) ? nullptr : &w)});
        }
        break;
      case Event::Kind::Cup: {
        const auto i = codec_.get(in_key, t.in_pos), j = codec_.get(in_key, t.in_pos + 1);
        if (i != j) break;
        const auto& w = t.diag[static_cast<std::size_t>(i)];
        grown.push_back({okey, combine(fac, is_one(w) ? nullptr : &w)});
        break;
      }
      case Event::Kind::Crossing: {
        const auto a = codec_.get(in_key, t.in_pos), b = codec_.get(in_key, t.in_pos + 1);
        const auto& col = (*t.block)[static_cast<std::size_t>(a * static_cast<std::uint64_t>(t.dim_right) + b)];
        for (const auto& term : col) {
          std::uint64_t k = codec_.put(codec_.put(okey, t.out_pos, static_cast<std::uint64_t>(term.first)), t.out_pos + 1,
                                       static_cast<std::uint64_t>(term.second));
          grown.push_back({k, combine(fac, &term.coeff)});
        }
        break;
      }
    }
  }

  static bool is_one(const LaurentPoly<C>& p) { return p.is_monomial() && p.min_exp() == 0 && p.leading() == C(1); }

  const Diagram& d_;
  std::vector<int> colors_;
  KeyCodec codec_{1};
  std::map<std::tuple<Module, Module, bool>, std::vector<std::vector<TypedTerm<C>>>> blocks_;
};

}  // namespace detail

// Colored Jones polynomial of the blackboard-framed link, components colored
// by V_{colors[i]}. Exact; the 64-bit fast path is retried with GMP
// integers if any coefficient overflows.
inline LaurentU colored_jones(const Diagram& d, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != d.components)
    throw ColorCountMismatch("diagram has " + std::to_string(d.components) + " components, got " +
                             std::to_string(colors.size()) + " colors");
  for (int c : colors)
    if (c < 0) throw DomainError("colors must be nonnegative");
  try {
    return detail::Contractor<Checked64>(d, colors).run().convert<BigInt>();
  } catch (const CoefficientOverflow&) {
    return detail::Contractor<BigInt>(d, colors).run();
  }
}

// Change of framing by delta_i on component i: multiply by the twist
// eigenvalues.
inline LaurentU framing_adjust(const LaurentU& value, const std::vector<int>& colors, const std::vector<long>& delta) {
  if (colors.size() != delta.size()) throw ColorCountMismatch("framing_adjust: size mismatch");
  LaurentU r = value;
  for (std::size_t i = 0; i < colors.size(); ++i) r = r * twist_eigen(colors[i], static_cast<int>(delta[i]));
  return r;
}

// Colored Jones of the 0-framed link: the blackboard writhe is undone.
inline LaurentU colored_jones_zero_framed(const Diagram& d, const std::vector<int>& colors) {
  auto w = writhes(d);
  for (auto& x : w) x = -x;
  return framing_adjust(colored_jones(d, colors), colors, w);
}

}  // namespace habiro
