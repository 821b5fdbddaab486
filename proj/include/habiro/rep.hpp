#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "qcomb.hpp"

namespace habiro {

// Exact sparse matrix with Laurent entries; (row, col) -> value.
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}
  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, LaurentU(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<std::pair<int, int>, LaurentU>& entries() const { return e_; }

  LaurentU at(int r, int c) const {
    auto it = e_.find({r, c});
    return it == e_.end() ? LaurentU() : it->second;
  }
  void set(int r, int c, LaurentU v) {
    if (v.is_zero())
      e_.erase({r, c});
    else
      e_[{r, c}] = std::move(v);
  }
  void add(int r, int c, const LaurentU& v) { set(r, c, at(r, c) + v); }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product dimensions");
    std::map<int, std::vector<std::pair<int, const LaurentU*>>> brows;
    for (const auto& [rc, v] : b.e_) brows[rc.first].push_back({rc.second, &v});
    SparseMatrix r(a.rows_, b.cols_);
    for (const auto& [rc, v] : a.e_) {
      auto it = brows.find(rc.second);
      if (it == brows.end()) continue;
      for (const auto& [col, w] : it->second) r.add(rc.first, col, v * *w);
    }
    return r;
  }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum dimensions");
    for (const auto& [rc, v] : b.e_) a.add(rc.first, rc.second, v);
    return a;
  }
  SparseMatrix scaled(const LaurentU& s) const {
    SparseMatrix r(rows_, cols_);
    for (const auto& [rc, v] : e_) r.set(rc.first, rc.second, v * s);
    return r;
  }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  // Kronecker product; basis (i, j) of the product is numbered i * dim2 + j.
  friend SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (const auto& [ra, va] : a.e_)
      for (const auto& [rb, vb] : b.e_)
        r.set(ra.first * b.rows_ + rb.first, ra.second * b.cols_ + rb.second, va * vb);
    return r;
  }

 private:
  int rows_, cols_;
  std::map<std::pair<int, int>, LaurentU> e_;
};

// V_n or its dual V_n^*. The basis of V_n^* is dual to the basis of V_n and
// x acts on it by the transpose of S(x).
struct Module {
  int n = 0;
  bool dual = false;
  int dim() const { return n + 1; }
  int weight(int i) const { return dual ? -(n - 2 * i) : (n - 2 * i); }
  friend bool operator<(const Module& a, const Module& b) { return std::tie(a.n, a.dual) < std::tie(b.n, b.dual); }
  friend bool operator==(const Module& a, const Module& b) { return a.n == b.n && a.dual == b.dual; }
};

// Every generator used below sends a basis vector to a multiple of a single
// basis vector; these return that (target, coefficient) pair.
struct Image {
  int index;
  LaurentU coeff;
};

// K^j
inline Image act_K(const Module& M, int j, int i) { return {i, v_pow(j * M.weight(i))}; }

// e^k
inline std::optional<Image> act_e(const Module& M, int k, int i) {
  const int n = M.n;
  if (!M.dual) {
    if (i - k < 0) return std::nullopt;
    return Image{i - k, qc::falling_q(n - i + k, k)};
  }
  // S(e^k) = (-1)^k q^{k(k-1)/2} K^{-k} e^k, transposed
  if (i + k > n) return std::nullopt;
  LaurentU c = qc::falling_q(n - i, k) * q_pow(k * (k - 1) / 2) * v_pow(-k * (n - 2 * i));
  return Image{i + k, (k % 2) ? -c : c};
}

// F~^{(k)} = F^k K^k / [k]_q!
inline std::optional<Image> act_F(const Module& M, int k, int i) {
  const int n = M.n;
  if (!M.dual) {
    if (i + k > n) return std::nullopt;
    return Image{i + k, q_pow(-k * i) * qc::qbinom_q(i + k, k)};
  }
  // S(F~^{(k)}) = (-1)^k q^{-k(k-1)/2} K^{-k} F~^{(k)}, transposed
  if (i - k < 0) return std::nullopt;
  LaurentU c = q_pow(-k * (k - 1) / 2 - k * (i - k)) * qc::qbinom_q(i, k) * v_pow(-k * (n - 2 * i));
  return Image{i - k, (k % 2) ? -c : c};
}

// Matrices of the generators on V_n.
struct IrrepAction {
  int n;
  SparseMatrix K, K_inv;
  std::vector<SparseMatrix> e;  // e[m] = e^m, m = 0..n+1
  std::vector<SparseMatrix> F;  // F[m] = F~^{(m)}
};

inline SparseMatrix operator_matrix(const Module& M, int kind, int k) {
  SparseMatrix m(M.dim(), M.dim());
  for (int i = 0; i <= M.n; ++i) {
    std::optional<Image> img;
    if (kind == 0)
      img = act_K(M, k, i);
    else if (kind == 1)
      img = act_e(M, k, i);
    else
      img = act_F(M, k, i);
    if (img) m.set(img->index, i, img->coeff);
  }
  return m;
}

inline IrrepAction irrep(int n, bool dual = false) {
  if (n < 0) throw DomainError("irrep needs n >= 0");
  Module M{n, dual};
  IrrepAction a{n, operator_matrix(M, 0, 1), operator_matrix(M, 0, -1), {}, {}};
  for (int m = 0; m <= n + 1; ++m) {
    a.e.push_back(operator_matrix(M, 1, m));
    a.F.push_back(operator_matrix(M, 2, m));
  }
  return a;
}

// One output term of a braiding: the image of x_a (x) y_b contains
// coeff * y_{first} (x) x_{second}.
struct BraidTerm {
  int first;
  int second;
  LaurentU coeff;
};

// psi_{X,Y}: X (x) Y -> Y (x) X (positive) or psi^{-1}_{Y,X}: X (x) Y -> Y (x) X
// (inverse). Column a * dim(Y) + b lists the image of x_a (x) y_b.
struct BraidBlock {
  Module X, Y;
  bool inverse;
  std::vector<std::vector<BraidTerm>> columns;
};

inline BraidBlock build_braid_block(const Module& X, const Module& Y, bool inverse) {
  BraidBlock blk{X, Y, inverse, {}};
  blk.columns.resize(static_cast<std::size_t>(X.dim() * Y.dim()));
  const int kmax = std::min(X.n, Y.n);
  for (int a = 0; a <= X.n; ++a) {
    for (int b = 0; b <= Y.n; ++b) {
      auto& col = blk.columns[static_cast<std::size_t>(a * Y.dim() + b)];
      for (int k = 0; k <= kmax; ++k) {
        if (!inverse) {
          // R = D sum_k q^{k(k-1)/2} F~^{(k)} K^{-k} (x) e^k, then swap
          auto fx = act_F(X, k, a);
          auto ey = act_e(Y, k, b);
          if (!fx || !ey) continue;
          LaurentU c = act_K(X, -k, a).coeff * fx->coeff * ey->coeff * q_pow(k * (k - 1) / 2);
          c = c * u_pow(X.weight(fx->index) * Y.weight(ey->index));
          if (!c.is_zero()) col.push_back({ey->index, fx->index, std::move(c)});
        } else {
          // R^{-1} = D^{-1} sum_k (-1)^k F~^{(k)} (x) K^{-k} e^k applied to y (x) x
          auto fy = act_F(Y, k, b);
          auto ex = act_e(X, k, a);
          if (!fy || !ex) continue;
          LaurentU c = fy->coeff * ex->coeff * act_K(X, -k, ex->index).coeff;
          if (k % 2) c = -c;
          c = c * u_pow(-Y.weight(fy->index) * X.weight(ex->index));
          if (!c.is_zero()) col.push_back({fy->index, ex->index, std::move(c)});
        }
      }
    }
  }
  return blk;
}

inline std::shared_ptr<const BraidBlock> braid_block(const Module& X, const Module& Y, bool inverse) {
  static std::mutex mutex;
  static std::map<std::tuple<Module, Module, bool>, std::shared_ptr<const BraidBlock>> cache;
  auto key = std::make_tuple(X, Y, inverse);
  {
    std::lock_guard<std::mutex> g(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto blk = std::make_shared<const BraidBlock>(build_braid_block(X, Y, inverse));
  std::lock_guard<std::mutex> g(mutex);
  return cache.emplace(key, blk).first->second;
}

inline SparseMatrix to_matrix(const BraidBlock& blk) {
  const int dx = blk.X.dim(), dy = blk.Y.dim();
  SparseMatrix m(dx * dy, dx * dy);
  for (int col = 0; col < dx * dy; ++col)
    for (const auto& t : blk.columns[static_cast<std::size_t>(col)]) m.add(t.first * dx + t.second, col, t.coeff);
  return m;
}

// Braiding on V_m (x) V_n as a matrix onto V_n (x) V_m. sign = +1 gives psi,
// sign = -1 gives the inverse braiding psi^{-1}_{V_n, V_m}.
inline SparseMatrix braiding(int m, int n, int sign) {
  if (m < 0 || n < 0) throw DomainError("braiding needs nonnegative weights");
  return to_matrix(*braid_block(Module{m, false}, Module{n, false}, sign < 0));
}

// Quantum trace tr(K^{-1} M) on V_n.
inline LaurentU qtrace(int n, const SparseMatrix& M) {
  if (M.rows() != n + 1 || M.cols() != n + 1) throw ShapeMismatch("qtrace: matrix is not (n+1)x(n+1)");
  LaurentU t;
  for (int i = 0; i <= n; ++i) t += v_pow(-(n - 2 * i)) * M.at(i, i);
  return t;
}

// Eigenvalue of the twist to the power f on V_n: q^{f n(n+2)/4}.
inline LaurentU twist_eigen(int n, int f) { return u_pow(f * n * (n + 2)); }

}  // namespace habiro
