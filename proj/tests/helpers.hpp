#pragma once

// Shared fixtures for the unit tests: literal matrix builders and random
// generators for subspaces and eps-stable submodules.

#include <ortho_hecke/dual_module.hpp>
#include <ortho_hecke/quad_space.hpp>
#include <ortho_hecke/rng.hpp>

#include <initializer_list>
#include <vector>

namespace oht {

using namespace ortho_hecke;

template <class S>
Mat<S> from_rows(std::initializer_list<std::initializer_list<int>> rows, std::int64_t p = 0) {
  const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index n = m > 0 ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  Mat<S> out(m, n);
  Eigen::Index i = 0;
  for (auto& r : rows) {
    Eigen::Index j = 0;
    for (int x : r) {
      if constexpr (std::is_same_v<S, Fp>) out(i, j) = Fp(x, p);
      else out(i, j) = S(x);
      ++j;
    }
    ++i;
  }
  return out;
}

template <class S>
S random_scalar(SplitMix64& rng, const FieldSpec& field) {
  if constexpr (std::is_same_v<S, Fp>) return rng.fp(field.p);
  else return rng.rat(5, 3);
}

template <class S>
Mat<S> random_matrix(SplitMix64& rng, int rows, int cols, const FieldSpec& field) {
  Mat<S> m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = random_scalar<S>(rng, field);
  return m;
}

// Random subspace of exact dimension k (resamples until full rank).
template <class S>
Mat<S> random_subspace(SplitMix64& rng, int ambient_dim, int k, const FieldSpec& field) {
  while (true) {
    Mat<S> cand = column_echelon(random_matrix<S>(rng, ambient_dim, k, field));
    if (cand.cols() == k) return cand;
  }
}

// Random eps-stable submodule of dimension n with projection rank i, built
// from flag data (F inside G, lift matrix for the b-parts) so stability
// holds by construction.
template <class S>
Submodule<S> random_stable_submodule(SplitMix64& rng, const Ambient<S>& amb, int n, int i) {
  const int r = amb.r;
  Mat<S> f_basis = random_subspace<S>(rng, r, i, amb.field);
  Mat<S> g_basis = f_basis;
  while (g_basis.cols() < n - i) {
    Mat<S> extra = random_matrix<S>(rng, r, 1, amb.field);
    g_basis = sum_spans(g_basis, extra);
  }
  const Mat<S> lift = random_matrix<S>(rng, r, i, amb.field);
  Mat<S> cols = Mat<S>::Zero(2 * r, n);
  cols.block(0, 0, r, i) = f_basis;
  cols.block(r, 0, r, i) = lift;
  cols.block(r, i, r, n - i) = g_basis;
  return make_submodule(amb, cols);
}

// Uniformly random stratum index i for a given submodule dimension n in
// ambient rank r: any i with i <= n/2 and n - i <= r.
inline int random_stratum_index(SplitMix64& rng, int r, int n) {
  const int lo = std::max(0, n - r);
  const int hi = n / 2;
  return static_cast<int>(rng.range(lo, hi));
}

// All eps-stable Lagrangian submodules of the hyperbolic space by brute
// force over F_3; feasible for r <= 3 (and r = 4 with a raised guard).
inline std::vector<Submodule<Fp>> brute_force_lagrangians(int r) {
  const FieldSpec f3 = FieldSpec::prime(3);
  const auto qs = hyperbolic_space<Fp>(r, f3);
  const auto ef = extend_form(qs);
  const Ambient<Fp> amb{r, f3};
  const Mat<Fp> eps = eps_matrix(amb);
  std::vector<Submodule<Fp>> found;
  enumerate_subspaces(3, 2 * r, r, [&](const Mat<Fp>& basis) {
    if (sum_spans(basis, Mat<Fp>(eps * basis)).cols() != basis.cols()) return true;
    Submodule<Fp> L{amb, basis};
    if (is_lagrangian(ef, L).ok) found.push_back(L);
    return true;
  });
  return found;
}

}  // namespace oht
