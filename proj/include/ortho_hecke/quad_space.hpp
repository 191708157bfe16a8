#pragma once

// Nondegenerate symmetric bilinear forms b1 on V and their extension to the
// dual-number ambient W = V + eps V.  On second-order jets a + eps b the
// extended quadratic form is
//
//     q2(a + eps b) = q1(a) + eps * 2 b1(a, b),
//
// which splits into two K-bilinear components on W:
//     <(a,b),(a',b')>_0   = b1(a, a')
//     <(a,b),(a',b')>_eps = b1(a, b') + b1(b, a')  [+ b1'(a,a') when the
//                           Gram matrix itself varies to first order].
// Isotropy of a subspace for q2 is isotropy for both components at once.

#include "dual_module.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace ortho_hecke {

// Enumeration guard: refuse blow-ups beyond this many candidates.  The
// ORTHO_HECKE_GUARD environment variable overrides the default.
inline long long enumeration_guard() {
  if (const char* env = std::getenv("ORTHO_HECKE_GUARD")) {
    const long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 2'000'000;
}

template <class S>
struct QuadraticSpace {
  int r = 0;
  FieldSpec field;
  Mat<S> b1;  // r x r, symmetric, nondegenerate
};

template <class S>
QuadraticSpace<S> make_quadratic_space(int r, const FieldSpec& field, const Mat<S>& gram) {
  if (gram.rows() != r || gram.cols() != r)
    throw std::invalid_argument("quadratic space: Gram matrix must be r x r");
  if (!mat_equal(gram, Mat<S>(gram.transpose())))
    throw std::invalid_argument("quadratic space: Gram matrix must be symmetric");
  if (is_zero(exact_det(gram)))
    throw std::invalid_argument("quadratic space: Gram matrix must be nondegenerate");
  return QuadraticSpace<S>{r, field, gram};
}

// Split form: anti-diagonal ones, plus a central 1 when r is odd.
template <class S>
QuadraticSpace<S> hyperbolic_space(int r, const FieldSpec& field) {
  Mat<S> gram = Mat<S>::Zero(r, r);
  for (int i = 0; i < r; ++i) gram(i, r - 1 - i) = S(1);
  return make_quadratic_space(r, field, gram);
}

template <class S>
struct ExtendedForm {
  QuadraticSpace<S> parent;
  Mat<S> b0;    // 2r x 2r
  Mat<S> beps;  // 2r x 2r

  Ambient<S> ambient() const { return Ambient<S>{parent.r, parent.field}; }
};

template <class S>
ExtendedForm<S> extend_form(const QuadraticSpace<S>& qs) {
  const int r = qs.r;
  Mat<S> b0 = Mat<S>::Zero(2 * r, 2 * r);
  b0.block(0, 0, r, r) = qs.b1;
  Mat<S> beps = Mat<S>::Zero(2 * r, 2 * r);
  beps.block(0, r, r, r) = qs.b1;
  beps.block(r, 0, r, r) = qs.b1;
  return ExtendedForm<S>{qs, std::move(b0), std::move(beps)};
}

// Extension when the Gram matrix itself has a first-order part b1' at the
// point: the eps-component picks up b1'(a, a') on the V-part.  Used for
// fibers of bundles whose Gram varies with the local coordinate.
template <class S>
ExtendedForm<S> extend_form_jet(const QuadraticSpace<S>& qs, const Mat<S>& b1_prime) {
  ExtendedForm<S> ef = extend_form(qs);
  ef.beps.block(0, 0, qs.r, qs.r) = b1_prime;
  return ef;
}

template <class S>
Mat<S> orthogonal_complement(const QuadraticSpace<S>& qs, const Mat<S>& f_basis) {
  return kernel_basis(Mat<S>(f_basis.transpose() * qs.b1));
}

template <class S>
bool is_isotropic(const QuadraticSpace<S>& qs, const Mat<S>& f_basis) {
  return mat_is_zero(Mat<S>(f_basis.transpose() * qs.b1 * f_basis));
}

struct LagrangianCheck {
  bool ok = false;
  std::string reason;  // empty on success
};

template <class S>
LagrangianCheck is_lagrangian(const ExtendedForm<S>& ef, const Submodule<S>& L) {
  const int r = ef.parent.r;
  if (L.dim() != r)
    return {false, "dimension " + std::to_string(L.dim()) + " != r = " + std::to_string(r)};
  if (!mat_is_zero(Mat<S>(L.basis.transpose() * ef.b0 * L.basis)))
    return {false, "constant component of the form does not vanish"};
  if (!mat_is_zero(Mat<S>(L.basis.transpose() * ef.beps * L.basis)))
    return {false, "eps component of the form does not vanish"};
  return {true, ""};
}

// Projection of L to the V-part (the subspace F).
template <class S>
Mat<S> v_projection(const Submodule<S>& L) {
  const int r = L.ambient.r;
  return column_echelon(Mat<S>(L.basis.topRows(r)));
}

// Intersection with eps V, returned as a subspace of V (the eps dropped).
template <class S>
Mat<S> eps_part(const Submodule<S>& L) {
  const int r = L.ambient.r;
  Mat<S> eps_v = Mat<S>::Zero(2 * r, r);
  for (int i = 0; i < r; ++i) eps_v(r + i, i) = S(1);
  const Mat<S> inter = intersect_spans(L.basis, eps_v);
  return column_echelon(Mat<S>(inter.bottomRows(r)));
}

// Component label m of a Lagrangian inside the orthogonal Grassmannian of W,
// anchored by m(eps V) = 0.  Computed two ways and cross-checked.
template <class S>
int component_index(const ExtendedForm<S>& ef, const Submodule<S>& L) {
  const auto check = is_lagrangian(ef, L);
  if (!check.ok) throw std::invalid_argument("not lagrangian: " + check.reason);
  const int r = ef.parent.r;
  const int via_projection = static_cast<int>(v_projection(L).cols()) % 2;
  const int via_intersection = (r - static_cast<int>(eps_part(L).cols())) % 2;
  if (via_projection != via_intersection)
    throw std::logic_error("component index: the two computations disagree");
  return via_projection;
}

// All i-dimensional isotropic subspaces of a finite quadratic space, in
// canonical column-echelon form, deterministic order.
template <class S>
std::vector<Mat<Fp>> enumerate_isotropic(const QuadraticSpace<S>& qs, int i) {
  static_assert(std::is_same_v<S, Fp>, "enumeration needs a finite field");
  if (i < 0 || 2 * i > qs.r)
    throw std::invalid_argument("enumerate_isotropic: need 0 <= i <= r/2");
  Int estimate = 1;
  for (int k = 0; k < i * qs.r; ++k) estimate *= qs.field.p;
  if (estimate > enumeration_guard())
    throw std::runtime_error("enumeration too large");
  std::vector<Mat<Fp>> out;
  enumerate_subspaces(qs.field.p, qs.r, i, [&](const Mat<Fp>& basis) {
    if (is_isotropic(qs, basis)) out.push_back(basis);
    return true;
  });
  return out;
}

}  // namespace ortho_hecke
