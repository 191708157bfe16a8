#pragma once

// Orthogonal Hecke transformations on split orthogonal bundles over the
// projective line.  The transform point is t = 0 in the affine chart; O(m)
// twists live at infinity, so sections of E(m) are polynomial vectors with
// deg s_i <= a_i + m.  A 2-jet datum P in the fiber module cuts out the
// modified sheaf E' = {s : jet(s) in P}; splitting types are recovered from
// the h^0 scan (exact rank computations, no matrix diagonalization).  For a
// Lagrangian datum the restricted form vanishes to second order along the
// modified lattice, so dividing by t^2 and twisting by O(x) produces an
// orthogonal bundle again; the division is carried out on an explicit
// lattice basis and certified exactly.

#include "poly.hpp"
#include "strata.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ortho_hecke {

using SplittingType = std::vector<int>;  // sorted descending

inline SplittingType sorted_type(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

inline SplittingType shifted_type(SplittingType v, int by) {
  for (int& x : v) x += by;
  return v;
}

template <class S>
struct SplitOrthogonalBundle {
  std::vector<int> degrees;  // descending, sum zero
  FieldSpec field;
  Mat<S> gram;  // constant Gram in the trivialization at t = 0
  int rank() const { return static_cast<int>(degrees.size()); }
};

template <class S>
SplitOrthogonalBundle<S> make_split_bundle(std::vector<int> degrees, const FieldSpec& field,
                                           Mat<S> gram) {
  const int r = static_cast<int>(degrees.size());
  if (gram.rows() != r || gram.cols() != r)
    throw std::invalid_argument("bundle: gram size does not match degrees");
  if (!std::is_sorted(degrees.begin(), degrees.end(), std::greater<int>()))
    throw std::invalid_argument("bundle: degrees not sorted descending");
  int sum = 0;
  for (int a : degrees) sum += a;
  if (sum != 0) throw std::invalid_argument("bundle: degree sum nonzero");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (gram(i, j) != gram(j, i)) throw std::invalid_argument("bundle: gram not symmetric");
      if (!is_zero(gram(i, j)) && degrees[i] + degrees[j] != 0)
        throw std::invalid_argument("bundle: gram pairs summands of non-opposite degree");
    }
  if (is_zero(exact_det(gram))) throw std::invalid_argument("bundle: gram degenerate");
  return SplitOrthogonalBundle<S>{std::move(degrees), field, std::move(gram)};
}

// Split bundle with the anti-diagonal Gram; degree vector must pair a_i with
// -a_{r-1-i} for the form to be compatible.
template <class S>
SplitOrthogonalBundle<S> hyperbolic_bundle(std::vector<int> degrees, const FieldSpec& field) {
  const int r = static_cast<int>(degrees.size());
  Mat<S> gram = Mat<S>::Zero(r, r);
  for (int i = 0; i < r; ++i) gram(i, r - 1 - i) = scalar_one<S>(field);
  return make_split_bundle(std::move(degrees), field, std::move(gram));
}

template <class S>
std::pair<Ambient<S>, ExtendedForm<S>> fiber_module(const SplitOrthogonalBundle<S>& E) {
  const auto qs = make_quadratic_space(E.rank(), E.field, E.gram);
  return {Ambient<S>{E.rank(), E.field}, extend_form(qs)};
}

namespace detail {

// Degree multiset from the h^0 table: successive differences count the
// summands of each degree.  h0 must be defined on [lo-1, hi] with h0 == 0 at
// the low end.
inline SplittingType type_from_h0(const std::map<int, int>& h0, int lo, int hi, int r) {
  std::vector<int> out;
  int prev = h0.at(lo) - h0.at(lo - 1);
  for (int m = lo + 1; m <= hi; ++m) {
    const int d = h0.at(m) - h0.at(m - 1);
    for (int k = 0; k < d - prev; ++k) out.push_back(-m);
    prev = d;
  }
  if (static_cast<int>(out.size()) != r)
    throw std::logic_error("splitting type recovery: scan window inadequate");
  return sorted_type(out);
}

// Columns of `candidates` that extend span(base) toward full column rank;
// returns only the added columns, in candidate order.
template <class S>
Mat<S> greedy_extend(const Mat<S>& base, const Mat<S>& candidates, int want) {
  Mat<S> partial = base;
  Mat<S> added(base.rows(), want);
  int got = 0;
  for (Eigen::Index j = 0; j < candidates.cols() && got < want; ++j) {
    Mat<S> wider(partial.rows(), partial.cols() + 1);
    wider.leftCols(partial.cols()) = partial;
    wider.rightCols(1) = candidates.col(j);
    if (rank_of(wider) == wider.cols()) {
      partial = wider;
      added.col(got++) = candidates.col(j);
    }
  }
  if (got != want) throw std::logic_error("greedy_extend: candidates do not span");
  return added;
}

template <class S>
Mat<S> identity_candidates(int r, const FieldSpec& field) {
  Mat<S> id = Mat<S>::Zero(r, r);
  for (int j = 0; j < r; ++j) id(j, j) = scalar_one<S>(field);
  return id;
}

}  // namespace detail

// Splitting type of E' = {s : jet(s) in P} for an arbitrary eps-stable 2-jet
// datum P, by the h^0 scan.
template <class S>
SplittingType hecke_plain(const std::vector<int>& degrees, const Submodule<S>& P) {
  const int r = static_cast<int>(degrees.size());
  if (P.ambient.r != r) throw std::invalid_argument("hecke_plain: fiber dimension mismatch");
  const int n = P.dim();
  int amax = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
  int amin = degrees.empty() ? 0 : *std::min_element(degrees.begin(), degrees.end());
  const int lo = -amax - 3;
  const int hi = std::max(std::abs(amax), std::abs(amin)) + 3;

  std::map<int, int> h0;
  for (int m = lo - 1; m <= hi; ++m) {
    long long monomials = 0;
    std::vector<Mat<S>> jets;
    for (int i = 0; i < r; ++i) {
      const int top = degrees[i] + m;
      if (top < 0) continue;
      monomials += top + 1;
      Mat<S> j0 = Mat<S>::Zero(2 * r, 1);
      j0(i, 0) = S(1);
      jets.push_back(j0);
      if (top >= 1) {
        Mat<S> j1 = Mat<S>::Zero(2 * r, 1);
        j1(r + i, 0) = S(1);
        jets.push_back(j1);
      }
    }
    Mat<S> stacked(2 * r, static_cast<Eigen::Index>(jets.size()) + n);
    for (std::size_t k = 0; k < jets.size(); ++k) stacked.col(static_cast<Eigen::Index>(k)) = jets[k];
    stacked.rightCols(n) = P.basis;
    const int rk = static_cast<int>(rank_of(stacked));
    h0[m] = static_cast<int>(monomials) - (rk - n);
  }

  const SplittingType out = detail::type_from_h0(h0, lo, hi, r);
  int in_sum = 0, out_sum = 0;
  for (int a : degrees) in_sum += a;
  for (int b : out) out_sum += b;
  if (out_sum != in_sum - (2 * r - n)) throw std::logic_error("degree sum mismatch");
  return out;
}

inline int w2_parity(const std::vector<int>& degrees) {
  int s = 0;
  for (int a : degrees) s += std::max(0, a);
  return s % 2;
}

// Lattice basis of E' for a Lagrangian datum, with the t^{-2}-rescaled Gram
// and its value at the transform point (the orthogonality certificate).
template <class S>
struct HeckeLattice {
  PolyMat<S> v;          // r x r polynomial lattice basis, det valuation r
  int stratum = 0;       // i = dim of the V-projection of L
  PolyMat<S> gram_prime; // G'(t) = V^T G V / t^2
  S det0;                // det G'(0), nonzero
};

template <class S>
HeckeLattice<S> hecke_lattice(const SplitOrthogonalBundle<S>& E, const Submodule<S>& L) {
  const auto [amb, ef] = fiber_module(E);
  const auto check = is_lagrangian(ef, L);
  if (!check.ok) throw std::invalid_argument("not lagrangian");
  const int r = amb.r;

  const Mat<S> f = v_projection(L);
  const int i = static_cast<int>(f.cols());
  const auto lift_coords = solve_matrix<S>(Mat<S>(L.basis.topRows(r)), f);
  if (!lift_coords) throw std::logic_error("hecke: projection has no preimage");
  const Mat<S> b = L.basis.bottomRows(r) * (*lift_coords);

  const Mat<S> perp = eps_part(L);  // = F-perp, dimension r - i
  const Mat<S> torsion = detail::greedy_extend<S>(f, perp, r - 2 * i);
  Mat<S> fc(r, r - i);
  fc.leftCols(i) = f;
  fc.rightCols(r - 2 * i) = torsion;
  const Mat<S> tail =
      detail::greedy_extend<S>(fc, detail::identity_candidates<S>(r, amb.field), i);

  PolyMat<S> v(r, r);
  for (int j = 0; j < i; ++j) {
    v.at(0).col(j) = f.col(j);
    v.at(1).col(j) = b.col(j);
  }
  for (int j = 0; j < r - 2 * i; ++j) v.at(1).col(i + j) = torsion.col(j);
  for (int j = 0; j < i; ++j) v.at(2).col(r - i + j) = tail.col(j);

  const PolyMat<S> pairings = v.transposed() * E.gram * v;
  if (!pairings.divisible(2)) throw std::runtime_error("orthogonality certificate failed");
  HeckeLattice<S> out;
  out.gram_prime = pairings.divided(2);
  out.det0 = exact_det(out.gram_prime.coeff(0));
  if (is_zero(out.det0)) throw std::runtime_error("orthogonality certificate failed");
  out.v = v;
  out.stratum = i;
  return out;
}

// Two-step factorization: an elementary modification at F = pi(L), then one
// at the image of L in the intermediate fiber; the composite lattice's jet
// span drives a plain transform whose type must reproduce the one-step
// answer.
template <class S>
SplittingType hecke_two_step(const SplitOrthogonalBundle<S>& E, const Submodule<S>& L) {
  const auto [amb, ef] = fiber_module(E);
  const auto check = is_lagrangian(ef, L);
  if (!check.ok) throw std::invalid_argument("not lagrangian");
  const int r = amb.r;

  const Mat<S> f = v_projection(L);
  const int i = static_cast<int>(f.cols());
  const Mat<S> h = detail::greedy_extend<S>(f, detail::identity_candidates<S>(r, amb.field), r - i);
  Mat<S> frame(r, r);
  frame.leftCols(i) = f;
  frame.rightCols(r - i) = h;

  // fiber classes in the intermediate bundle: (F-coordinates of the value;
  // complement coordinates of the derivative mod F)
  const auto top = solve_matrix<S>(frame, Mat<S>(L.basis.topRows(r)));
  const auto bot = solve_matrix<S>(frame, Mat<S>(L.basis.bottomRows(r)));
  if (!top || !bot) throw std::logic_error("two-step: frame inversion failed");
  Mat<S> classes(r, L.dim());
  classes.topRows(i) = top->topRows(i);
  classes.bottomRows(r - i) = bot->bottomRows(r - i);
  const Mat<S> image = column_echelon(classes);
  if (image.cols() != r - i) throw std::logic_error("two-step: fiber image has wrong dimension");
  const Mat<S> rest = detail::greedy_extend<S>(image, detail::identity_candidates<S>(r, amb.field), i);

  PolyMat<S> vt(r, r);  // intermediate lattice: F columns, then t * complement
  for (int j = 0; j < i; ++j) vt.at(0).col(j) = f.col(j);
  for (int j = 0; j < r - i; ++j) vt.at(1).col(i + j) = h.col(j);

  std::vector<PolyMat<S>> cols;
  for (Eigen::Index j = 0; j < image.cols(); ++j)
    cols.push_back(vt * Mat<S>(image.col(j)));
  for (Eigen::Index j = 0; j < rest.cols(); ++j)
    cols.push_back((vt * Mat<S>(rest.col(j))).shifted(1));

  Mat<S> jets(2 * r, 2 * static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto j = static_cast<Eigen::Index>(2 * k);
    jets.col(j) = jet_of(cols[k]);
    jets.col(j + 1) = jet_of(cols[k].shifted(1));
  }
  const Mat<S> span = column_echelon(jets);
  if (span.cols() != r) throw std::logic_error("two-step: jet span has wrong dimension");
  const auto composite = make_submodule(amb, span);
  return shifted_type(hecke_plain(E.degrees, composite), 1);
}

// Reciprocity: the kernel of the fiber map H(E,L)_2x -> L is the reverse
// datum L*; transforming back must reproduce E's type and w2.
template <class S>
bool verify_reciprocity(const SplitOrthogonalBundle<S>& E, const Submodule<S>& L) {
  const auto lat = hecke_lattice(E, L);
  const auto [amb, ef] = fiber_module(E);
  const int r = amb.r;
  const Mat<S> v0 = lat.v.coeff(0), v1 = lat.v.coeff(1);

  Mat<S> mu = Mat<S>::Zero(2 * r, 2 * r);  // (c0, c1) -> jet of t * (section)
  mu.topLeftCorner(r, r) = v0;
  mu.bottomLeftCorner(r, r) = v1;
  mu.bottomRightCorner(r, r) = v0;
  const Mat<S> lstar_basis = kernel_basis(mu);
  if (lstar_basis.cols() != r) throw std::logic_error("reciprocity: reverse datum has wrong dimension");
  const auto lstar = make_submodule(amb, lstar_basis);

  // u-frame coordinates: x = V^{-1} q = adj(V) q / (t^r u(t)), u(0) != 0
  const PolyMat<S> adj = poly_adjugate(lat.v);
  const PolyMat<S> unit = poly_det(lat.v).divided(r);
  const S u0 = unit.coeff(0)(0, 0);
  const S u1 = unit.coeff(1)(0, 0);
  if (is_zero(u0)) throw std::logic_error("reciprocity: lattice determinant has wrong valuation");

  // annihilator of L, for cutting out sections of E'
  const Mat<S> ann = kernel_basis(Mat<S>(L.basis.transpose())).transpose();

  const int amax = *std::max_element(E.degrees.begin(), E.degrees.end());
  const int amin = *std::min_element(E.degrees.begin(), E.degrees.end());
  const int lo = -amax - 4;
  const int hi = std::max(std::abs(amax), std::abs(amin)) + 4;

  std::map<int, int> h0;
  for (int m = lo - 1; m <= hi; ++m) {
    // monomial basis of sections of E((m+1) at infinity): t^k e_i, k <= a_i + m + 1
    struct Mono { int i, k; };
    std::vector<Mono> monos;
    for (int i = 0; i < r; ++i)
      for (int k = 0; k <= E.degrees[i] + m + 1; ++k) monos.push_back({i, k});
    Mat<S> jet_e = Mat<S>::Zero(2 * r, static_cast<Eigen::Index>(monos.size()));
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (monos[c].k == 0) jet_e(monos[c].i, static_cast<Eigen::Index>(c)) = S(1);
      if (monos[c].k == 1) jet_e(r + monos[c].i, static_cast<Eigen::Index>(c)) = S(1);
    }
    // sections of E'' (before the jet condition of the reverse datum)
    const Mat<S> sols = kernel_basis(Mat<S>(ann * jet_e));
    const int nsol = static_cast<int>(sols.cols());

    Mat<S> jets_u(2 * r, nsol);
    for (int s = 0; s < nsol; ++s) {
      PolyMat<S> q(r, 1);
      for (std::size_t c = 0; c < monos.size(); ++c)
        q.at(monos[c].k)(monos[c].i, 0) += sols(static_cast<Eigen::Index>(c), s);
      const PolyMat<S> w = (adj * q).divided(r);
      const Mat<S> x0 = w.coeff(0) / u0;
      const Mat<S> x1 = (w.coeff(1) - x0 * u1) / u0;
      jets_u.col(s).topRows(r) = x0;
      jets_u.col(s).bottomRows(r) = x1;
    }
    Mat<S> stacked(2 * r, nsol + r);
    stacked.leftCols(nsol) = jets_u;
    stacked.rightCols(r) = lstar.basis;
    h0[m] = nsol - (static_cast<int>(rank_of(stacked)) - r);
  }

  const SplittingType back = shifted_type(detail::type_from_h0(h0, lo, hi, r), 1);
  return back == E.degrees;
}

template <class S>
struct HeckeReport {
  SplittingType input_type;
  SplittingType output_type;
  S gram_det_at_x;
  int w2_in = 0, w2_out = 0;
  int stratum_i = 0;
  bool reciprocity_ok = false;
  SplittingType two_step_type;
};

template <class S>
HeckeReport<S> hecke_orthogonal(const SplitOrthogonalBundle<S>& E, const Submodule<S>& L) {
  const auto lat = hecke_lattice(E, L);
  HeckeReport<S> rep;
  rep.input_type = E.degrees;
  rep.output_type = shifted_type(hecke_plain(E.degrees, L), 1);
  rep.gram_det_at_x = lat.det0;
  rep.w2_in = w2_parity(E.degrees);
  rep.w2_out = w2_parity(rep.output_type);
  rep.stratum_i = lat.stratum;
  rep.two_step_type = hecke_two_step(E, L);
  rep.reciprocity_ok = verify_reciprocity(E, L);
  return rep;
}

// Hecke curve: the pencil of Lagrangians through an isotropic plane F,
// parameterised by c with the c = infinity point taken through the
// desingularization's projection (it lands in a lower stratum).
template <class S>
std::vector<SplittingType> hecke_curve(const SplitOrthogonalBundle<S>& E, const Mat<S>& plane,
                                       const std::vector<std::optional<S>>& samples) {
  const auto [amb, ef] = fiber_module(E);
  const Mat<S> f = column_echelon(plane);
  if (f.rows() != amb.r || f.cols() != 2 || !is_isotropic(ef.parent, f))
    throw std::invalid_argument("not an isotropic plane");

  const S one = scalar_one<S>(amb.field);
  std::vector<SplittingType> out;
  for (const auto& c : samples) {
    Mat<S> ftilde = Mat<S>::Zero(4, 2);
    if (c) {
      ftilde(0, 0) = one;
      ftilde(1, 1) = one;
      ftilde(2, 1) = *c;  // graph of c * omega0, omega0 = [[0,1],[-1,0]]
      ftilde(3, 0) = -*c;
    } else {
      ftilde(2, 0) = one;
      ftilde(3, 1) = one;
    }
    const auto L = project_orth(ef, DesingPointOrth<S>{f, ftilde});
    out.push_back(hecke_orthogonal(E, L).output_type);
  }
  return out;
}

}  // namespace ortho_hecke
