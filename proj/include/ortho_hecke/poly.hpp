#pragma once

// Matrices of polynomials in the local coordinate t, exact coefficients.
// Everything the lattice computations need: products, transposes, shifts by
// powers of t, exact division by t^k, small determinants and adjugates, and
// 2-jets (value and derivative at t = 0) of columns.

#include "matrix.hpp"

#include <stdexcept>
#include <vector>

namespace ortho_hecke {

template <class S>
struct PolyMat {
  Eigen::Index nrows = 0, ncols = 0;
  std::vector<Mat<S>> c;  // coefficient of t^k at index k; trailing zeros allowed

  PolyMat() = default;
  PolyMat(Eigen::Index r, Eigen::Index co) : nrows(r), ncols(co) {}

  static PolyMat constant(const Mat<S>& m) {
    PolyMat out(m.rows(), m.cols());
    out.c.push_back(m);
    return out;
  }

  Mat<S> coeff(std::size_t k) const {
    if (k < c.size()) return c[k];
    return Mat<S>::Zero(nrows, ncols);
  }

  int degree() const {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
      if (!mat_is_zero(c[k])) return k;
    return -1;
  }

  Mat<S>& at(std::size_t k) {
    while (c.size() <= k) c.push_back(Mat<S>::Zero(nrows, ncols));
    return c[k];
  }

  PolyMat col(Eigen::Index j) const {
    PolyMat out(nrows, 1);
    for (const auto& m : c) out.c.push_back(m.col(j));
    return out;
  }

  PolyMat transposed() const {
    PolyMat out(ncols, nrows);
    for (const auto& m : c) out.c.push_back(m.transpose());
    return out;
  }

  PolyMat shifted(int k) const {  // multiply by t^k
    PolyMat out(nrows, ncols);
    for (int j = 0; j < k; ++j) out.c.push_back(Mat<S>::Zero(nrows, ncols));
    for (const auto& m : c) out.c.push_back(m);
    return out;
  }

  bool divisible(int k) const {
    for (int j = 0; j < k; ++j)
      if (!mat_is_zero(coeff(j))) return false;
    return true;
  }

  PolyMat divided(int k) const {
    if (!divisible(k)) throw std::logic_error("poly: inexact division by t^k");
    PolyMat out(nrows, ncols);
    for (std::size_t j = k; j < c.size(); ++j) out.c.push_back(c[j]);
    return out;
  }

  friend PolyMat operator*(const PolyMat& a, const PolyMat& b) {
    PolyMat out(a.nrows, b.ncols);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) out.at(i + j) += a.c[i] * b.c[j];
    return out;
  }

  friend PolyMat operator*(const PolyMat& a, const Mat<S>& b) { return a * constant(b); }
  friend PolyMat operator*(const Mat<S>& a, const PolyMat& b) { return constant(a) * b; }

  friend PolyMat operator+(const PolyMat& a, const PolyMat& b) {
    PolyMat out(a.nrows, a.ncols);
    for (std::size_t k = 0; k < std::max(a.c.size(), b.c.size()); ++k)
      out.at(k) = a.coeff(k) + b.coeff(k);
    return out;
  }

  friend PolyMat operator-(const PolyMat& a, const PolyMat& b) {
    PolyMat out(a.nrows, a.ncols);
    for (std::size_t k = 0; k < std::max(a.c.size(), b.c.size()); ++k)
      out.at(k) = a.coeff(k) - b.coeff(k);
    return out;
  }
};

// Scalar polynomial as a 1x1 PolyMat convenience.
template <class S>
using PolyScalar = PolyMat<S>;

// 2-jet of a one-column polynomial: (value at 0; derivative at 0), stacked.
template <class S>
Mat<S> jet_of(const PolyMat<S>& column) {
  Mat<S> out(2 * column.nrows, 1);
  out.topRows(column.nrows) = column.coeff(0);
  out.bottomRows(column.nrows) = column.coeff(1);
  return out;
}

// Determinant by cofactor expansion; the matrices involved are small
// (rank <= 8) and the coefficient growth is tame, so this stays exact and
// fast enough.
template <class S>
PolyMat<S> poly_det(const PolyMat<S>& a) {
  const Eigen::Index n = a.nrows;
  if (n != a.ncols) throw std::invalid_argument("poly_det: square input required");
  if (n == 0) {
    PolyMat<S> one(1, 1);
    one.c.push_back(Mat<S>::Ones(1, 1));
    return one;
  }
  if (n == 1) return a.col(0);
  PolyMat<S> total(1, 1);
  for (Eigen::Index k = 0; k < n; ++k) {
    PolyMat<S> minor(n - 1, n - 1);
    for (std::size_t d = 0; d < a.c.size(); ++d) {
      Mat<S> m(n - 1, n - 1);
      for (Eigen::Index i = 1; i < n; ++i)
        for (Eigen::Index j = 0, jj = 0; j < n; ++j) {
          if (j == k) continue;
          m(i - 1, jj++) = a.c[d](i, j);
        }
      minor.at(d) = m;
    }
    PolyMat<S> entry(1, 1);
    for (const auto& mat : a.c) entry.c.push_back(mat.block(0, k, 1, 1));
    const PolyMat<S> term = entry * poly_det(minor);
    if (k % 2 == 0) total = total + term;
    else total = total - term;
  }
  return total;
}

// Adjugate: adj(A)(i,j) = (-1)^{i+j} det(A with row j, column i removed).
template <class S>
PolyMat<S> poly_adjugate(const PolyMat<S>& a) {
  const Eigen::Index n = a.nrows;
  if (n != a.ncols) throw std::invalid_argument("poly_adjugate: square input required");
  PolyMat<S> out(n, n);
  if (n == 0) return out;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      PolyMat<S> minor(n - 1, n - 1);
      for (std::size_t d = 0; d < a.c.size(); ++d) {
        Mat<S> m = Mat<S>::Zero(n - 1, n - 1);
        for (Eigen::Index r = 0, ri = 0; r < n; ++r) {
          if (r == j) continue;
          for (Eigen::Index col = 0, ci = 0; col < n; ++col) {
            if (col == i) continue;
            m(ri, ci++) = a.c[d](r, col);
          }
          ++ri;
        }
        minor.at(d) = m;
      }
      const PolyMat<S> d = poly_det(minor);
      const int sign = ((i + j) % 2 == 0) ? 1 : -1;
      for (std::size_t k = 0; k < d.c.size(); ++k)
        out.at(k)(i, j) = (sign > 0) ? d.c[k](0, 0) : S(0) - d.c[k](0, 0);
    }
  return out;
}

}  // namespace ortho_hecke
