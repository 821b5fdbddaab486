#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "basis.hpp"
#include "jones.hpp"

namespace habiro {

// Memoized blackboard-framed colored Jones values, keyed by diagram text.
inline LaurentU colored_jones_cached(const Diagram& d, const std::vector<int>& colors) {
  static std::mutex mu;
  static std::map<std::pair<std::string, std::vector<int>>, LaurentU> memo;
  auto key = std::make_pair(to_text(d), colors);
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  LaurentU v = colored_jones(d, colors);
  std::lock_guard<std::mutex> g(mu);
  return memo.emplace(std::move(key), v).first->second;
}

// Memoized colored Jones values of the 0-framed link. Keyed by the diagram
// text so that repeated surgery and WRT evaluations share work.
inline LaurentU zero_framed_jones_cached(const Diagram& d, const std::vector<int>& colors) {
  static std::mutex mu;
  static std::map<std::pair<std::string, std::vector<int>>, LaurentU> memo;
  auto key = std::make_pair(to_text(d), colors);
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  LaurentU v = colored_jones_zero_framed(d, colors);
  std::lock_guard<std::mutex> g(mu);
  return memo.emplace(std::move(key), v).first->second;
}

// J_L(x_1, ..., x_m) for formal colors, by expanding every x_i in the V basis.
// The blackboard framing of the diagram is used as is.
inline LaurentFrac jones_multilinear(const Diagram& d, const std::vector<BasisCombo>& colors) {
  if (static_cast<int>(colors.size()) != d.components)
    throw ColorCountMismatch("diagram has " + std::to_string(d.components) + " components, got " +
                             std::to_string(colors.size()) + " colors");
  std::vector<BasisCombo> vs;
  for (const auto& c : colors) vs.push_back(to_V(c));
  for (const auto& c : vs)
    if (c.terms.empty()) return LaurentFrac();
  LaurentFrac total;
  std::vector<std::map<int, LaurentFrac>::const_iterator> it;
  for (const auto& c : vs) it.push_back(c.terms.begin());
  while (true) {
    std::vector<int> tuple;
    LaurentFrac coeff(1);
    for (const auto& i : it) {
      tuple.push_back(i->first);
      coeff *= i->second;
    }
    total += coeff * LaurentFrac(colored_jones_cached(d, tuple));
    std::size_t k = 0;
    for (; k < it.size(); ++k) {
      if (++it[k] != vs[k].terms.end()) break;
      it[k] = vs[k].terms.begin();
    }
    if (k == it.size()) break;
  }
  return total;
}

// Values J_{L^0}(V_{n_1}, ..., V_{n_m}) for 0 <= n_i < N, flattened with the
// first component varying slowest.
class VTable {
 public:
  VTable(const Diagram& d, int N) : m_(d.components), N_(N) {
    std::size_t size = 1;
    for (int i = 0; i < m_; ++i) size *= static_cast<std::size_t>(N);
    values_.resize(size);
    std::vector<int> colors(static_cast<std::size_t>(m_), 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
      values_[idx] = zero_framed_jones_cached(d, colors);
      for (int k = m_ - 1; k >= 0; --k) {
        if (++colors[static_cast<std::size_t>(k)] < N) break;
        colors[static_cast<std::size_t>(k)] = 0;
      }
    }
  }
  int components() const { return m_; }
  int size() const { return N_; }
  const std::vector<LaurentU>& values() const { return values_; }

  // Applies the matrix rows[k][i] (new index k, old index i) along every axis.
  std::vector<LaurentU> transformed(const std::vector<std::vector<LaurentU>>& rows) const {
    std::vector<LaurentU> cur = values_;
    std::size_t stride = 1;
    for (int axis = m_ - 1; axis >= 0; --axis) {
      std::vector<LaurentU> next(cur.size());
      const std::size_t block = stride * static_cast<std::size_t>(N_);
      for (std::size_t base = 0; base < cur.size(); base += block)
        for (std::size_t s = 0; s < stride; ++s)
          for (int k = 0; k < N_; ++k) {
            LaurentU acc;
            const auto& row = rows[static_cast<std::size_t>(k)];
            for (std::size_t i = 0; i < row.size() && i < static_cast<std::size_t>(N_); ++i)
              if (!row[i].is_zero()) acc.add_product(row[i], cur[base + i * stride + s]);
            next[base + static_cast<std::size_t>(k) * stride + s] = std::move(acc);
          }
      cur.swap(next);
      stride = block;
    }
    return cur;
  }

 private:
  int m_, N_;
  std::vector<LaurentU> values_;
};

}  // namespace habiro
