#pragma once

// Tangent spaces of the strata: Hom^0(L, W/L) in the plain case, its skew
// part for Lagrangians in the largest stratum of their component, and the
// fiberwise duality between the skew spaces on L -> W/L and W/L -> L.
//
// Hom^0 is the space of K[eps]-linear maps sending L^(2) into the image of
// eps on the target; its dimension equals n(r-n+i) + i(n-2i).  For the skew
// part, a map Phi: L -> W/L induces the K[eps]-valued form
// (u,v) -> b2(lift(Phi u), v) on L (well defined because L is Lagrangian and
// the lift ambiguity pairs to zero); Phi is skew when both components of
// that form are.  The mirrored construction applies to maps W/L -> L, and
// the two skew dimensions agree fiberwise.  The trace-style pairing between
// the two spaces is exploratory: its rank is reported, never asserted.

#include "dual_module.hpp"
#include "quad_space.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ortho_hecke {

struct TangentReport {
  int dim_hom0 = 0;
  int expected_dim = 0;
  std::optional<int> skew_dim;
  std::optional<int> dual_skew_dim;
  std::optional<int> pairing_rank;
};

template <class S>
TangentReport tangent_dim(const Submodule<S>& L) {
  const int r = L.ambient.r;
  const int n = L.dim();
  const int i = static_cast<int>(v_projection(L).cols());
  const auto q = quotient_of(L);
  const auto hom = hom_epsilon(EpsModule<S>::from_submodule(L), EpsModule<S>::from_quotient(q));
  TangentReport rep;
  rep.dim_hom0 = hom.restricted_dim();
  rep.expected_dim = n * (r - n + i) + i * (n - 2 * i);
  return rep;
}

namespace detail {

// Dimension and basis of the skew part of a list of Hom^0 maps, where each
// map induces the pair of forms (B0_a, Beps_a); skewness is the vanishing of
// the symmetric parts, a linear condition on coefficient vectors.
template <class S>
std::pair<int, std::vector<Mat<S>>> skew_span(const std::vector<Mat<S>>& maps,
                                              const std::vector<Mat<S>>& b0_forms,
                                              const std::vector<Mat<S>>& beps_forms) {
  const int count = static_cast<int>(maps.size());
  if (count == 0) return {0, {}};
  const Eigen::Index fdim = b0_forms[0].rows() * b0_forms[0].cols();
  Mat<S> constraints(2 * fdim, count);
  for (int a = 0; a < count; ++a) {
    const Mat<S> s0 = b0_forms[a] + b0_forms[a].transpose();
    const Mat<S> se = beps_forms[a] + beps_forms[a].transpose();
    for (Eigen::Index k = 0; k < fdim; ++k) {
      constraints(k, a) = s0(k % s0.rows(), k / s0.rows());
      constraints(fdim + k, a) = se(k % se.rows(), k / se.rows());
    }
  }
  const Mat<S> coeffs = kernel_basis(constraints);
  std::vector<Mat<S>> basis;
  for (Eigen::Index j = 0; j < coeffs.cols(); ++j) {
    Mat<S> combo = Mat<S>::Zero(maps[0].rows(), maps[0].cols());
    for (int a = 0; a < count; ++a) combo += maps[a] * coeffs(a, j);
    basis.push_back(std::move(combo));
  }
  return {static_cast<int>(coeffs.cols()), std::move(basis)};
}

}  // namespace detail

template <class S>
void require_largest_stratum(const ExtendedForm<S>& ef, const Submodule<S>& L) {
  const auto check = is_lagrangian(ef, L);
  if (!check.ok) throw std::invalid_argument("not lagrangian: " + check.reason);
  const int k = ef.parent.r / 2;
  const int i = static_cast<int>(v_projection(L).cols());
  if (i != k && i != k - 1) throw std::invalid_argument("not largest stratum");
}

// Skew part of Hom^0(L, W/L).  Returns the report plus (optionally) the skew
// basis through the out-parameter used by the duality pairing.
template <class S>
TangentReport skew_tangent_dim(const ExtendedForm<S>& ef, const Submodule<S>& L,
                               std::vector<Mat<S>>* skew_basis_out = nullptr) {
  require_largest_stratum(ef, L);
  TangentReport rep = tangent_dim(L);
  const auto q = quotient_of(L);
  const auto hom = hom_epsilon(EpsModule<S>::from_submodule(L), EpsModule<S>::from_quotient(q));

  std::vector<Mat<S>> b0_forms, beps_forms;
  for (const Mat<S>& phi : hom.restricted_basis) {
    const Mat<S> rep_w = q.section * phi;  // a lift of Phi into W coordinates
    b0_forms.push_back(Mat<S>(rep_w.transpose() * ef.b0 * L.basis));
    beps_forms.push_back(Mat<S>(rep_w.transpose() * ef.beps * L.basis));
  }
  auto [dim, basis] = detail::skew_span<S>(hom.restricted_basis, b0_forms, beps_forms);
  rep.skew_dim = dim;
  if (skew_basis_out) *skew_basis_out = std::move(basis);
  return rep;
}

// Skew part of Hom^0(W/L, L), the mirrored construction.
template <class S>
int dual_skew_dim(const ExtendedForm<S>& ef, const Submodule<S>& L,
                  std::vector<Mat<S>>* skew_basis_out = nullptr) {
  require_largest_stratum(ef, L);
  const auto q = quotient_of(L);
  const auto hom = hom_epsilon(EpsModule<S>::from_quotient(q), EpsModule<S>::from_submodule(L));

  std::vector<Mat<S>> b0_forms, beps_forms;
  for (const Mat<S>& psi : hom.restricted_basis) {
    const Mat<S> rep_w = L.basis * psi;  // Psi lands in L, already in W coordinates
    b0_forms.push_back(Mat<S>(rep_w.transpose() * ef.b0 * q.section));
    beps_forms.push_back(Mat<S>(rep_w.transpose() * ef.beps * q.section));
  }
  auto [dim, basis] = detail::skew_span<S>(hom.restricted_basis, b0_forms, beps_forms);
  if (skew_basis_out) *skew_basis_out = std::move(basis);
  return dim;
}

// eps-coefficient of the K[eps]-trace of an endomorphism given in arbitrary
// module coordinates with eps-action E: transported to an adapted basis
// (free generators, their eps-images, torsion generators), the coefficient of
// eps a_j inside C(a_j) is summed over the free generators.
template <class S>
S eps_trace(const Mat<S>& c, const Mat<S>& e) {
  const int n = static_cast<int>(e.rows());
  const Mat<S> l1 = column_echelon(e);           // eps-images, dimension f
  const int f = static_cast<int>(l1.cols());
  const auto pre = solve_matrix<S>(e, l1);
  if (!pre) throw std::logic_error("eps_trace: image basis has no preimage");
  const Mat<S> l2 = kernel_basis(e);

  // basis T: free generators a_j (columns of pre), their eps-images (l1),
  // torsion generators chosen from the kernel; express C in T and read the
  // (eps a_j, a_j) coefficients
  Mat<S> t(n, n);
  t.leftCols(f) = *pre;
  t.block(0, f, n, f) = l1;
  {
    // torsion columns: extend the first 2f columns to a basis using l2
    Mat<S> partial = t.leftCols(2 * f);
    Eigen::Index at = 2 * f;
    for (Eigen::Index j = 0; j < l2.cols() && at < n; ++j) {
      Mat<S> wider(n, partial.cols() + 1);
      wider.leftCols(partial.cols()) = partial;
      wider.rightCols(1) = l2.col(j);
      if (rank_of(wider) == wider.cols()) {
        partial = wider;
        t.col(at++) = l2.col(j);
      }
    }
    if (at != n) throw std::logic_error("eps_trace: adapted basis incomplete");
  }
  const auto cprime = solve_matrix<S>(t, Mat<S>(c * t));
  if (!cprime) throw std::logic_error("eps_trace: change of basis failed");
  S total = S(0);
  for (int j = 0; j < f; ++j) total = total + (*cprime)(f + j, j);
  return total;
}

// Fiberwise duality: the two skew dimensions agree; the rank of the
// trace-style pairing between them is reported for inspection.
template <class S>
TangentReport duality_check(const ExtendedForm<S>& ef, const Submodule<S>& L) {
  std::vector<Mat<S>> primal, dual;
  TangentReport rep = skew_tangent_dim(ef, L, &primal);
  rep.dual_skew_dim = dual_skew_dim(ef, L, &dual);

  const Mat<S> eps_l = eps_on_module(L);
  Mat<S> pairing(static_cast<Eigen::Index>(primal.size()),
                 static_cast<Eigen::Index>(dual.size()));
  for (std::size_t a = 0; a < primal.size(); ++a)
    for (std::size_t b = 0; b < dual.size(); ++b)
      pairing(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          eps_trace<S>(Mat<S>(dual[b] * primal[a]), eps_l);
  rep.pairing_rank = rank_of(pairing);
  return rep;
}

}  // namespace ortho_hecke
