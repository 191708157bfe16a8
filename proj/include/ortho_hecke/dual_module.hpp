#pragma once

// Modules over the dual numbers K[eps], eps^2 = 0, realized inside the
// ambient W = V + eps V of dimension 2r.  Coordinates 0..r-1 are the V-part,
// r..2r-1 the eps V-part; eps acts as the nilpotent block map (a,b) -> (0,a).
//
// A submodule is an eps-stable subspace, canonically represented by a reduced
// column-echelon basis.  Its isomorphism type K[eps]^f + K^g is read off from
// the matrix of the eps-action in module coordinates; g is the torsion
// degree.  Quotients W/L are represented on the complement coordinates (the
// non-pivot rows of the canonical basis), which keeps every object a plain
// matrix.

#include "matrix.hpp"

#include <stdexcept>
#include <vector>

namespace ortho_hecke {

template <class S>
struct Ambient {
  int r = 0;
  FieldSpec field;

  int dim() const { return 2 * r; }
};

// The nilpotent multiplication-by-eps map on W, as a 2r x 2r matrix.
template <class S>
Mat<S> eps_matrix(const Ambient<S>& amb) {
  const int r = amb.r;
  Mat<S> e = Mat<S>::Zero(2 * r, 2 * r);
  for (int i = 0; i < r; ++i) e(r + i, i) = S(1);
  return e;
}

template <class S>
struct Submodule {
  Ambient<S> ambient;
  Mat<S> basis;  // 2r x n, canonical column echelon, full column rank

  int dim() const { return static_cast<int>(basis.cols()); }
};

template <class S>
Submodule<S> make_submodule(const Ambient<S>& amb, const Mat<S>& columns) {
  if (columns.rows() != amb.dim())
    throw std::invalid_argument("make_submodule: basis rows != 2r");
  Mat<S> canon = column_echelon(columns);  // tolerate rank deficiency
  const Mat<S> eps = eps_matrix(amb);
  const Mat<S> image = eps * canon;
  if (sum_spans(canon, image).cols() != canon.cols())
    throw std::invalid_argument("not epsilon-stable");
  return Submodule<S>{amb, std::move(canon)};
}

// The eps-action written in the submodule's own coordinates: the n x n
// matrix X with  eps * basis = basis * X  (solvable exactly by stability).
template <class S>
Mat<S> eps_on_module(const Submodule<S>& L) {
  const Mat<S> image = eps_matrix(L.ambient) * L.basis;
  auto x = solve_matrix<S>(L.basis, image);
  if (!x) throw std::logic_error("eps_on_module: stability violated");
  return *x;
}

template <class S>
struct ModuleStructure {
  int f = 0;              // free rank
  int g = 0;              // torsion rank
  int torsion_degree = 0; // = g
  Mat<S> l1_basis;        // im(eps) on the module, i.e. L^(1)
  Mat<S> l2_basis;        // ker(eps) on the module, i.e. L^(2)
};

// Structure from an eps-action matrix; bases come out in the coordinates the
// action is written in.
template <class S>
ModuleStructure<S> structure_of_action(const Mat<S>& eps_action) {
  ModuleStructure<S> out;
  const int n = static_cast<int>(eps_action.cols());
  out.l1_basis = column_echelon(eps_action);
  out.l2_basis = kernel_basis(eps_action);
  out.f = static_cast<int>(out.l1_basis.cols());
  out.g = n - 2 * out.f;
  out.torsion_degree = out.g;
  return out;
}

// Structure of L itself; l1/l2 bases are returned in ambient coordinates.
template <class S>
ModuleStructure<S> module_structure(const Submodule<S>& L) {
  ModuleStructure<S> st = structure_of_action(eps_on_module(L));
  st.l1_basis = column_echelon(Mat<S>(L.basis * st.l1_basis));
  st.l2_basis = column_echelon(Mat<S>(L.basis * st.l2_basis));
  return st;
}

// ---------------------------------------------------------------------------
// Quotient W/L on complement coordinates.
// ---------------------------------------------------------------------------
template <class S>
struct Quotient {
  Ambient<S> ambient;
  Mat<S> proj;     // m x 2r, kernel = L
  Mat<S> section;  // 2r x m, proj * section = identity
  Mat<S> eps;      // m x m, induced eps-action

  int dim() const { return static_cast<int>(proj.rows()); }
};

template <class S>
std::vector<int> pivot_rows_of(const Mat<S>& canonical_basis) {
  std::vector<int> pivots;
  for (Eigen::Index j = 0; j < canonical_basis.cols(); ++j) {
    for (Eigen::Index i = 0; i < canonical_basis.rows(); ++i)
      if (!is_zero(canonical_basis(i, j))) {
        pivots.push_back(static_cast<int>(i));
        break;
      }
  }
  return pivots;
}

template <class S>
Quotient<S> quotient_of(const Submodule<S>& L) {
  const int n2 = L.ambient.dim();
  const std::vector<int> pivots = pivot_rows_of(L.basis);
  std::vector<bool> is_pivot(n2, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> complement;
  for (int i = 0; i < n2; ++i)
    if (!is_pivot[i]) complement.push_back(i);
  const int m = static_cast<int>(complement.size());

  // reduce(w) zeroes the pivot rows by subtracting basis columns; the class
  // of w is then read off the complement rows
  Mat<S> proj = Mat<S>::Zero(m, n2);
  for (int k = 0; k < m; ++k) proj(k, complement[k]) = S(1);
  for (std::size_t j = 0; j < pivots.size(); ++j) {
    // column j of the basis has a unit at its pivot row and zeros at all
    // other pivot rows, so one pass fully reduces
    for (int k = 0; k < m; ++k)
      proj(k, pivots[j]) = proj(k, pivots[j]) - L.basis(complement[k], static_cast<Eigen::Index>(j));
  }

  Mat<S> section = Mat<S>::Zero(n2, m);
  for (int k = 0; k < m; ++k) section(complement[k], k) = S(1);

  Mat<S> eps_q = proj * eps_matrix(L.ambient) * section;
  return Quotient<S>{L.ambient, std::move(proj), std::move(section), std::move(eps_q)};
}

template <class S>
ModuleStructure<S> quotient_structure(const Submodule<S>& L) {
  return structure_of_action(quotient_of(L).eps);
}

// ---------------------------------------------------------------------------
// Hom spaces.  A module is presented abstractly by its eps-action matrix;
// maps are matrices in those coordinates.
// ---------------------------------------------------------------------------
template <class S>
struct EpsModule {
  int dim = 0;
  Mat<S> eps;

  static EpsModule from_submodule(const Submodule<S>& L) {
    return EpsModule{L.dim(), eps_on_module(L)};
  }
  static EpsModule from_quotient(const Quotient<S>& Q) {
    return EpsModule{Q.dim(), Q.eps};
  }
};

template <class S>
struct HomSpace {
  std::vector<Mat<S>> basis;             // all K[eps]-linear maps
  std::vector<Mat<S>> restricted_basis;  // prefix-compatible span of the
                                         // maps with phi(L^(2)) in M^(1)

  int dim() const { return static_cast<int>(basis.size()); }
  int restricted_dim() const { return static_cast<int>(restricted_basis.size()); }
};

// All X (t x s) with X * eps_src = eps_tgt * X; the restricted part
// additionally satisfies X * ker(eps_src) inside im(eps_tgt).
template <class S>
HomSpace<S> hom_epsilon(const EpsModule<S>& src, const EpsModule<S>& tgt) {
  const int s = src.dim, t = tgt.dim;
  const Mat<S> id_s = Mat<S>::Identity(s, s);
  const Mat<S> id_t = Mat<S>::Identity(t, t);

  // vec is column-major: vec(X A) = (A^T (x) I) vec X, vec(B X) = (I (x) B) vec X
  const Mat<S> commute =
      kronecker(Mat<S>(src.eps.transpose()), id_t) - kronecker(id_s, tgt.eps);
  const Mat<S> all_maps = kernel_basis(commute);

  const Mat<S> ker_src = kernel_basis(src.eps);
  const Mat<S> left_null_tgt = kernel_basis(Mat<S>(tgt.eps.transpose()));
  Mat<S> restrict(ker_src.cols() * left_null_tgt.cols(), s * t);
  {
    Eigen::Index row = 0;
    for (Eigen::Index a = 0; a < ker_src.cols(); ++a)
      for (Eigen::Index b = 0; b < left_null_tgt.cols(); ++b, ++row)
        restrict.row(row) =
            kronecker(Mat<S>(ker_src.col(a).transpose()),
                      Mat<S>(left_null_tgt.col(b).transpose()));
  }
  Mat<S> stacked(commute.rows() + restrict.rows(), s * t);
  stacked.topRows(commute.rows()) = commute;
  stacked.bottomRows(restrict.rows()) = restrict;
  const Mat<S> restricted_maps = kernel_basis(stacked);

  const auto unvec = [&](const Vec<S>& v) {
    Mat<S> x(t, s);
    for (int j = 0; j < s; ++j)
      for (int i = 0; i < t; ++i) x(i, j) = v(i + static_cast<Eigen::Index>(t) * j);
    return x;
  };

  HomSpace<S> out;
  // adapted basis: restricted maps first, then extend to the full Hom space
  Mat<S> span(s * t, 0);
  const auto try_append = [&](const Vec<S>& v, bool restricted) {
    Mat<S> wider(s * t, span.cols() + 1);
    wider.leftCols(span.cols()) = span;
    wider.rightCols(1) = v;
    if (rank_of(wider) == wider.cols()) {
      span = std::move(wider);
      out.basis.push_back(unvec(v));
      if (restricted) out.restricted_basis.push_back(out.basis.back());
    }
  };
  for (Eigen::Index j = 0; j < restricted_maps.cols(); ++j)
    try_append(restricted_maps.col(j), true);
  for (Eigen::Index j = 0; j < all_maps.cols(); ++j) try_append(all_maps.col(j), false);
  return out;
}

}  // namespace ortho_hecke
