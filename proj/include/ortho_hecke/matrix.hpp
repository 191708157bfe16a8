#pragma once

// Exact dense linear algebra on Eigen containers.  Everything is scalar-
// templated over the field (Rat or Fp); all algorithms are plain Gauss
// elimination with exact arithmetic -- no pivot-magnitude heuristics, no
// Eigen decompositions.

#include "field.hpp"

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <vector>

namespace ortho_hecke {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
bool is_zero(const S& x) { return x == S(0); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

template <class S>
bool mat_equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class S>
bool mat_is_zero(const Mat<S>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, j))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Reduced row-echelon form.
// ---------------------------------------------------------------------------
template <class S>
struct ReducedForm {
  Mat<S> mat;                   // the RREF itself
  int rank = 0;
  std::vector<int> pivot_cols;  // increasing
};

template <class S>
ReducedForm<S> reduced_form(Mat<S> m) {
  ReducedForm<S> out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index lead = 0;
  for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = lead; i < rows; ++i)
      if (!is_zero(m(i, col))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != lead) m.row(piv).swap(m.row(lead));
    const S inv = S(1) / m(lead, col);
    for (Eigen::Index j = col; j < cols; ++j) m(lead, j) = m(lead, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == lead || is_zero(m(i, col))) continue;
      const S f = m(i, col);
      for (Eigen::Index j = col; j < cols; ++j) m(i, j) = m(i, j) - f * m(lead, j);
    }
    out.pivot_cols.push_back(static_cast<int>(col));
    ++lead;
  }
  out.rank = static_cast<int>(out.pivot_cols.size());
  out.mat = std::move(m);
  return out;
}

template <class S>
int rank_of(const Mat<S>& m) { return reduced_form(m).rank; }

// Canonical basis of a column span: reduced column echelon with zero columns
// dropped.  Two matrices span the same subspace iff their canonical bases are
// equal entrywise.
template <class S>
Mat<S> column_echelon(const Mat<S>& m) {
  ReducedForm<S> rf = reduced_form(Mat<S>(m.transpose()));
  Mat<S> out(m.rows(), rf.rank);
  for (int i = 0; i < rf.rank; ++i) out.col(i) = rf.mat.row(i).transpose();
  return out;
}

template <class S>
bool spans_equal(const Mat<S>& a, const Mat<S>& b) {
  return mat_equal(column_echelon(a), column_echelon(b));
}

// ---------------------------------------------------------------------------
// Kernel, solve, span calculus.
// ---------------------------------------------------------------------------
template <class S>
Mat<S> kernel_basis(const Mat<S>& m) {
  const ReducedForm<S> rf = reduced_form(m);
  const Eigen::Index cols = m.cols();
  std::vector<int> free_cols;
  {
    std::size_t k = 0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (k < rf.pivot_cols.size() && rf.pivot_cols[k] == j) ++k;
      else free_cols.push_back(static_cast<int>(j));
    }
  }
  Mat<S> out = Mat<S>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t fc = 0; fc < free_cols.size(); ++fc) {
    out(free_cols[fc], static_cast<Eigen::Index>(fc)) = S(1);
    for (std::size_t pi = 0; pi < rf.pivot_cols.size(); ++pi)
      out(rf.pivot_cols[pi], static_cast<Eigen::Index>(fc)) =
          -rf.mat(static_cast<Eigen::Index>(pi), free_cols[fc]);
  }
  // normalize to the canonical subspace representation
  return column_echelon(out);
}

// Particular solution of A x = b, if one exists.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b) {
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const ReducedForm<S> rf = reduced_form(aug);
  Vec<S> x = Vec<S>::Zero(a.cols());
  for (std::size_t pi = 0; pi < rf.pivot_cols.size(); ++pi) {
    if (rf.pivot_cols[pi] == a.cols()) return std::nullopt;  // inconsistent
    x(rf.pivot_cols[pi]) = rf.mat(static_cast<Eigen::Index>(pi), a.cols());
  }
  return x;
}

// Particular solution of A X = B columnwise, if all columns are solvable.
template <class S>
std::optional<Mat<S>> solve_matrix(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> x(a.cols(), b.cols());
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    auto xi = solve<S>(a, Vec<S>(b.col(j)));
    if (!xi) return std::nullopt;
    x.col(j) = *xi;
  }
  return x;
}

template <class S>
bool in_span(const Mat<S>& a, const Vec<S>& v) {
  return solve<S>(a, v).has_value();
}

template <class S>
Mat<S> sum_spans(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> both(a.rows(), a.cols() + b.cols());
  both.leftCols(a.cols()) = a;
  both.rightCols(b.cols()) = b;
  return column_echelon(both);
}

template <class S>
Mat<S> intersect_spans(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("intersect_spans: ambient dimensions differ");
  // null space of [a | -b]: (x, y) with a x = b y; the intersection is a x.
  Mat<S> paired(a.rows(), a.cols() + b.cols());
  paired.leftCols(a.cols()) = a;
  paired.rightCols(b.cols()) = -b;
  const Mat<S> null_basis = kernel_basis(paired);
  Mat<S> inter(a.rows(), null_basis.cols());
  if (null_basis.cols() > 0) inter = a * null_basis.topRows(a.cols());
  return column_echelon(inter);
}

template <class S>
Mat<S> kronecker(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out = Mat<S>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j)))
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Determinant by fraction-free-enough Gauss elimination (exact field ops).
template <class S>
S exact_det(Mat<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_det: square input required");
  const Eigen::Index n = m.rows();
  S det = S(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (!is_zero(m(i, col))) { piv = i; break; }
    if (piv < 0) return S(0);
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      det = -det;
    }
    det = det * m(col, col);
    const S inv = S(1) / m(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const S f = m(i, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Finite-field enumeration: all k-dimensional subspaces of F_p^n, produced as
// canonical column-echelon bases (the same canonical form column_echelon
// yields).  Visitor returns false to abort early.
// ---------------------------------------------------------------------------
inline Int gaussian_binomial(int n, int k, std::int64_t q) {
  if (k < 0 || k > n) return Int(0);
  Int num(1), den(1);
  for (int i = 0; i < k; ++i) {
    Int qn = 1, qk = 1;
    for (int j = 0; j < n - i; ++j) qn *= q;
    for (int j = 0; j < k - i; ++j) qk *= q;
    num *= qn - 1;
    den *= qk - 1;
  }
  return num / den;
}

namespace detail {
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}
}  // namespace detail

// Enumerates canonical bases: pivot rows r_1 < ... < r_k carry the identity;
// a free entry sits at (row, col j) for every non-pivot row below r_j.
inline bool enumerate_subspaces(std::int64_t p, int n, int k,
                                const std::function<bool(const Mat<Fp>&)>& visit) {
  if (k == 0) {
    return visit(Mat<Fp>::Zero(n, 0));
  }
  if (k > n) return true;
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  do {
    std::vector<std::pair<int, int>> free_pos;  // (row, col)
    {
      std::vector<bool> is_pivot(n, false);
      for (int r : pivots) is_pivot[r] = true;
      for (int j = 0; j < k; ++j)
        for (int r = pivots[j] + 1; r < n; ++r)
          if (!is_pivot[r]) free_pos.emplace_back(r, j);
    }
    Mat<Fp> basis = Mat<Fp>::Zero(n, k);
    for (auto& e : basis.reshaped()) e = Fp(0, p);
    for (int j = 0; j < k; ++j) basis(pivots[j], j) = Fp(1, p);
    std::vector<std::int64_t> odo(free_pos.size(), 0);
    while (true) {
      if (!visit(basis)) return false;
      std::size_t d = 0;
      while (d < odo.size()) {
        odo[d] += 1;
        if (odo[d] < p) {
          basis(free_pos[d].first, free_pos[d].second) = Fp(odo[d], p);
          break;
        }
        odo[d] = 0;
        basis(free_pos[d].first, free_pos[d].second) = Fp(0, p);
        ++d;
      }
      if (d == odo.size()) break;
    }
  } while (detail::next_combination(pivots, n));
  return true;
}

}  // namespace ortho_hecke
