#pragma once

// Stratification of the submodule varieties by the projection dimension i.
//
// Plain side: an eps-stable L of dimension n determines a flag F < G of V
// (F the projection, eps G the intersection with eps V) together with a map
// phi: F -> V/G recording the lifts; conversely (F, G, phi) rebuilds L.
//
// Orthogonal side: a Lagrangian L determines an isotropic F plus a skew form
// omega on F; the lift of f_j is pinned down modulo F-perp by
// (F^t b1) v_j = omega e_j, and L = span{(f_j, v_j)} + eps F-perp.
//
// Both parameterizations extend to desingularization models: a point is a
// subspace Ftilde of the fiber (G + eps V/G, resp. F + eps F*), the section
// iota is a graph construction, and the projection p rebuilds a submodule
// whose stratum index can drop below l (this is where the model resolves the
// closure).  p o iota = id exactly.
//
// Census routines count Lagrangians per stratum over a prime field, both by
// the constructive (F, omega) enumeration and - in small ambients - by brute
// force over all r-dimensional subspaces of W.

#include "dual_module.hpp"
#include "quad_space.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ortho_hecke {

// ---------------------------------------------------------------------------
// Complement coordinates for a canonical subspace B of K^d: the non-pivot
// rows index a basis of K^d / span(B).  proj has kernel span(B) and
// proj * embed = identity; embed places e_{rows[k]}.
// ---------------------------------------------------------------------------
template <class S>
struct ComplementSplit {
  Mat<S> proj;            // m x d
  Mat<S> embed;           // d x m
  std::vector<int> rows;  // the complement row indices, increasing
};

template <class S>
ComplementSplit<S> complement_split(const Mat<S>& canonical_basis, int d) {
  const std::vector<int> pivots = pivot_rows_of(canonical_basis);
  std::vector<bool> is_pivot(d, false);
  for (int p : pivots) is_pivot[p] = true;
  ComplementSplit<S> out;
  for (int i = 0; i < d; ++i)
    if (!is_pivot[i]) out.rows.push_back(i);
  const int m = static_cast<int>(out.rows.size());
  out.proj = Mat<S>::Zero(m, d);
  out.embed = Mat<S>::Zero(d, m);
  for (int k = 0; k < m; ++k) {
    out.proj(k, out.rows[k]) = S(1);
    out.embed(out.rows[k], k) = S(1);
    for (std::size_t j = 0; j < pivots.size(); ++j)
      out.proj(k, pivots[j]) =
          out.proj(k, pivots[j]) - canonical_basis(out.rows[k], static_cast<Eigen::Index>(j));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Flag and skew data.
// ---------------------------------------------------------------------------
template <class S>
struct FlagDatum {
  Mat<S> F;    // r x i, canonical
  Mat<S> G;    // r x (n-i), canonical, F inside G
  Mat<S> phi;  // (r-(n-i)) x i: coordinates in the complement basis of V/G
};

template <class S>
struct SkewDatum {
  Mat<S> F;      // r x i, canonical isotropic
  Mat<S> omega;  // i x i skew
};

template <class S>
struct StratumReport {
  int i = 0;
  int torsion_degree = 0;
  std::optional<int> component;  // filled for Lagrangians
  FlagDatum<S> flag;
  std::optional<SkewDatum<S>> skew;
};

template <class S>
bool is_skew_matrix(const Mat<S>& omega) {
  if (omega.rows() != omega.cols()) return false;
  if (!mat_is_zero(Mat<S>(omega + omega.transpose()))) return false;
  for (Eigen::Index k = 0; k < omega.rows(); ++k)
    if (!is_zero(omega(k, k))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Stratum extraction.
// ---------------------------------------------------------------------------
template <class S>
StratumReport<S> stratum_data(const Submodule<S>& L) {
  const int r = L.ambient.r;
  StratumReport<S> rep;
  rep.flag.F = v_projection(L);
  rep.flag.G = eps_part(L);
  rep.i = static_cast<int>(rep.flag.F.cols());
  rep.torsion_degree = L.dim() - 2 * rep.i;

  // Lift each basis vector of F through L and read the second component
  // modulo G; the ambiguity of the lift lies in eps G, so phi is canonical.
  const Mat<S> top = L.basis.topRows(r);
  const auto x = solve_matrix<S>(top, rep.flag.F);
  if (!x) throw std::logic_error("stratum_data: projection basis did not lift");
  const Mat<S> lifts = L.basis * (*x);
  const auto split = complement_split<S>(rep.flag.G, r);
  rep.flag.phi = split.proj * Mat<S>(lifts.bottomRows(r));
  return rep;
}

// ---------------------------------------------------------------------------
// Flag -> submodule.
// ---------------------------------------------------------------------------
template <class S>
Submodule<S> submodule_from_flag(const Ambient<S>& amb, const FlagDatum<S>& d) {
  const int r = amb.r;
  const int i = static_cast<int>(d.F.cols());
  const int gdim = static_cast<int>(d.G.cols());
  for (Eigen::Index j = 0; j < d.F.cols(); ++j)
    if (!in_span<S>(d.G, Vec<S>(d.F.col(j)))) throw std::invalid_argument("flag violation");
  const auto split = complement_split<S>(d.G, r);
  if (d.phi.rows() != static_cast<Eigen::Index>(split.rows.size()) || d.phi.cols() != i)
    throw std::invalid_argument("flag phi has wrong shape");

  Mat<S> cols = Mat<S>::Zero(2 * r, i + gdim);
  cols.block(0, 0, r, i) = d.F;
  cols.block(r, 0, r, i) = split.embed * d.phi;
  cols.block(r, i, r, gdim) = d.G;
  Submodule<S> L = make_submodule(amb, cols);
  if (L.dim() != i + gdim) throw std::invalid_argument("flag data degenerate");
  return L;
}

// ---------------------------------------------------------------------------
// Skew <-> Lagrangian.
// ---------------------------------------------------------------------------
template <class S>
Submodule<S> lagrangian_from_skew(const ExtendedForm<S>& ef, const SkewDatum<S>& s) {
  const QuadraticSpace<S>& qs = ef.parent;
  const int r = qs.r;
  const int i = static_cast<int>(s.F.cols());
  if (!is_isotropic(qs, s.F)) throw std::invalid_argument("not isotropic");
  if (!is_skew_matrix(s.omega) || s.omega.rows() != i)
    throw std::invalid_argument("omega not skew of matching size");

  // (F^t b1) v_j = omega e_j fixes the lift of f_j modulo F-perp.
  const Mat<S> pair = s.F.transpose() * qs.b1;  // i x r, full row rank
  const auto lifts = solve_matrix<S>(pair, s.omega);
  if (!lifts) throw std::logic_error("lagrangian_from_skew: lift system inconsistent");
  const Mat<S> perp = orthogonal_complement(qs, s.F);

  Mat<S> cols = Mat<S>::Zero(2 * r, i + static_cast<int>(perp.cols()));
  cols.block(0, 0, r, i) = s.F;
  cols.block(r, 0, r, i) = *lifts;
  cols.block(r, i, r, perp.cols()) = perp;
  Submodule<S> L = make_submodule(Ambient<S>{r, qs.field}, cols);
  const auto check = is_lagrangian(ef, L);
  if (!check.ok) throw std::logic_error("lagrangian_from_skew: " + check.reason);
  return L;
}

template <class S>
SkewDatum<S> skew_from_lagrangian(const ExtendedForm<S>& ef, const Submodule<S>& L) {
  const auto check = is_lagrangian(ef, L);
  if (!check.ok) throw std::invalid_argument("not lagrangian");
  const QuadraticSpace<S>& qs = ef.parent;
  const int r = qs.r;
  SkewDatum<S> out;
  out.F = v_projection(L);

  const Mat<S> top = L.basis.topRows(r);
  const auto x = solve_matrix<S>(top, out.F);
  if (!x) throw std::logic_error("skew_from_lagrangian: projection did not lift");
  const Mat<S> lifts = L.basis * (*x);
  // omega_{kj} = b1(f_k, v_j); insensitive to the F-perp ambiguity of v_j.
  out.omega = out.F.transpose() * qs.b1 * Mat<S>(lifts.bottomRows(r));
  if (!is_skew_matrix(out.omega))
    throw std::logic_error("skew_from_lagrangian: extracted form is not skew");
  return out;
}

template <class S>
StratumReport<S> stratum_data(const ExtendedForm<S>& ef, const Submodule<S>& L) {
  StratumReport<S> rep = stratum_data(L);
  if (is_lagrangian(ef, L).ok) {
    rep.component = component_index(ef, L);
    rep.skew = skew_from_lagrangian(ef, L);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Plain desingularization model.  A point over a fixed G of dimension n-l is
// an l-dimensional Ftilde inside G + eps (V/G); coordinates are (n-l)
// G-coordinates followed by r-(n-l) complement coordinates of V/G.
// ---------------------------------------------------------------------------
template <class S>
struct DesingPointPlain {
  Mat<S> G;       // r x (n-l), canonical
  Mat<S> Ftilde;  // ((n-l) + (r-(n-l))) x l = r x l, canonical
};

template <class S>
DesingPointPlain<S> desingularize_plain(const Ambient<S>& amb, const FlagDatum<S>& d) {
  const int r = amb.r;
  const int i = static_cast<int>(d.F.cols());
  for (Eigen::Index j = 0; j < d.F.cols(); ++j)
    if (!in_span<S>(d.G, Vec<S>(d.F.col(j)))) throw std::invalid_argument("flag violation");
  const int gdim = static_cast<int>(d.G.cols());
  const auto g_coords = solve_matrix<S>(d.G, d.F);
  if (!g_coords) throw std::logic_error("desingularize_plain: F not inside G");
  if (d.phi.rows() != r - gdim || d.phi.cols() != i)
    throw std::invalid_argument("dimension mismatch");
  Mat<S> ft = Mat<S>::Zero(r, i);
  ft.topRows(gdim) = *g_coords;
  ft.bottomRows(r - gdim) = d.phi;
  return DesingPointPlain<S>{d.G, column_echelon(ft)};
}

template <class S>
Submodule<S> project_plain(const Ambient<S>& amb, const DesingPointPlain<S>& pt) {
  const int r = amb.r;
  const int gdim = static_cast<int>(pt.G.cols());
  const int l = static_cast<int>(pt.Ftilde.cols());
  if (pt.Ftilde.rows() != r) throw std::invalid_argument("dimension mismatch");
  const auto split = complement_split<S>(pt.G, r);

  Mat<S> cols = Mat<S>::Zero(2 * r, l + gdim);
  cols.block(0, 0, r, l) = pt.G * pt.Ftilde.topRows(gdim);
  cols.block(r, 0, r, l) = split.embed * Mat<S>(pt.Ftilde.bottomRows(r - gdim));
  cols.block(r, l, r, gdim) = pt.G;
  return make_submodule(amb, cols);
}

// ---------------------------------------------------------------------------
// Orthogonal desingularization model.  A point over an isotropic F of
// dimension l is an l-dimensional Ftilde inside F + eps F*, isotropic for the
// split form [[0,I],[I,0]] and lying in the component of [F + 0]:
// dim(Ftilde intersect F) = l mod 2.
// ---------------------------------------------------------------------------
template <class S>
struct DesingPointOrth {
  Mat<S> F;       // r x l, canonical isotropic
  Mat<S> Ftilde;  // 2l x l, canonical
};

template <class S>
void validate_orth_point(const QuadraticSpace<S>& qs, const DesingPointOrth<S>& pt) {
  const int l = static_cast<int>(pt.F.cols());
  if (!is_isotropic(qs, pt.F)) throw std::invalid_argument("not isotropic");
  if (pt.Ftilde.rows() != 2 * l || pt.Ftilde.cols() != l)
    throw std::invalid_argument("dimension mismatch");
  Mat<S> model_form = Mat<S>::Zero(2 * l, 2 * l);
  for (int k = 0; k < l; ++k) {
    model_form(k, l + k) = S(1);
    model_form(l + k, k) = S(1);
  }
  if (!mat_is_zero(Mat<S>(pt.Ftilde.transpose() * model_form * pt.Ftilde)))
    throw std::invalid_argument("model point not isotropic");
  Mat<S> f_plane = Mat<S>::Zero(2 * l, l);
  for (int k = 0; k < l; ++k) f_plane(k, k) = S(1);
  const int meet = static_cast<int>(intersect_spans<S>(pt.Ftilde, f_plane).cols());
  if ((meet - l) % 2 != 0) throw std::invalid_argument("wrong component parity");
}

template <class S>
DesingPointOrth<S> desingularize_orth(const QuadraticSpace<S>& qs, const SkewDatum<S>& s) {
  const int l = static_cast<int>(s.F.cols());
  if (!is_isotropic(qs, s.F)) throw std::invalid_argument("not isotropic");
  if (!is_skew_matrix(s.omega) || s.omega.rows() != l)
    throw std::invalid_argument("omega not skew of matching size");
  Mat<S> ft = Mat<S>::Zero(2 * l, l);
  ft.topRows(l) = Mat<S>::Identity(l, l);
  ft.bottomRows(l) = s.omega;
  DesingPointOrth<S> pt{s.F, column_echelon(ft)};
  validate_orth_point(qs, pt);
  return pt;
}

template <class S>
Submodule<S> project_orth(const ExtendedForm<S>& ef, const DesingPointOrth<S>& pt) {
  const QuadraticSpace<S>& qs = ef.parent;
  const int r = qs.r;
  const int l = static_cast<int>(pt.F.cols());
  validate_orth_point(qs, pt);

  // Dual coordinates alpha are realized as lifts v with (F^t b1) v = alpha.
  const Mat<S> pair = pt.F.transpose() * qs.b1;
  const auto v = solve_matrix<S>(pair, Mat<S>(pt.Ftilde.bottomRows(l)));
  if (!v) throw std::logic_error("project_orth: dual-coordinate system inconsistent");
  const Mat<S> perp = orthogonal_complement(qs, pt.F);

  Mat<S> cols = Mat<S>::Zero(2 * r, l + static_cast<int>(perp.cols()));
  cols.block(0, 0, r, l) = pt.F * pt.Ftilde.topRows(l);
  cols.block(r, 0, r, l) = *v;
  cols.block(r, l, r, perp.cols()) = perp;
  Submodule<S> L = make_submodule(Ambient<S>{r, qs.field}, cols);
  const auto check = is_lagrangian(ef, L);
  if (!check.ok) throw std::logic_error("project_orth: " + check.reason);
  return L;
}

// ---------------------------------------------------------------------------
// Dimension formulas.
// ---------------------------------------------------------------------------
inline std::map<std::string, long long> dim_formulas(int r, int n, int l, bool orthogonal) {
  std::map<std::string, long long> out;
  if (orthogonal) {
    const int k = r / 2;
    if (l < 0 || 2 * l > r) throw std::invalid_argument("stratum index out of range");
    out["stratum_dim"] = static_cast<long long>(l) * (r - l - 1);
    if (r % 2 == 0) {
      out["component_dim_0"] = static_cast<long long>(k) * (k - 1);
      out["component_dim_1"] = static_cast<long long>(k) * (k - 1);
    } else {
      // the largest stratum of component m is O-Sigma_k or O-Sigma_{k-1},
      // whichever has matching parity
      const long long kk = static_cast<long long>(k) * k;
      out["component_dim_0"] = (k % 2 == 0) ? kk : kk - 1;
      out["component_dim_1"] = (k % 2 == 0) ? kk - 1 : kk;
    }
  } else {
    const int lo = std::max(0, n - r);
    if (l < lo || 2 * l > n) throw std::invalid_argument("stratum index out of range");
    out["closure_dim"] =
        static_cast<long long>(n) * (r - n + l) + static_cast<long long>(l) * (n - 2 * l);
    const int k = n / 2;
    out["total_dim"] = (n % 2 == 0) ? 2LL * k * (r - k)
                                    : 2LL * k * (r - k - 1) + r - 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Census over a prime field.
// ---------------------------------------------------------------------------
struct CensusRow {
  int i = 0;
  int component = 0;  // i mod 2, except for the split maximal stratum of even
                      // r, where it labels the two families of isotropic F's
                      // (0 = the family of the first enumerated F)
  Int count = 0;
  Int predicted = 0;
};

struct CensusResult {
  int r = 0;
  long long p = 0;
  std::vector<CensusRow> rows;
  std::optional<Int> brute_force_total;
};

namespace detail {

inline std::string basis_key(const Mat<Fp>& m) {
  std::string key;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      key += std::to_string(m(i, j).v);
      key += ',';
    }
  return key;
}

}  // namespace detail

inline CensusResult census(const ExtendedForm<Fp>& ef, bool brute_force = false) {
  const QuadraticSpace<Fp>& qs = ef.parent;
  const int r = qs.r;
  const long long p = qs.field.p;
  CensusResult out;
  out.r = r;
  out.p = p;

  for (int i = 0; 2 * i <= r; ++i) {
    const std::vector<Mat<Fp>> isotropic = enumerate_isotropic(qs, i);
    Int omega_count = 1;
    for (int k = 0; k < i * (i - 1) / 2; ++k) omega_count *= p;

    const bool split_families = (r % 2 == 0 && 2 * i == r && r > 2);
    // one set of canonical Lagrangian bases per reported row
    std::vector<std::set<std::string>> buckets(split_families ? 2 : 1);
    const Mat<Fp>* anchor = isotropic.empty() ? nullptr : &isotropic.front();

    std::vector<long long> family_sizes(split_families ? 2 : 1, 0);
    for (const Mat<Fp>& f : isotropic) {
      int bucket = 0;
      if (split_families) {
        const int meet = static_cast<int>(intersect_spans<Fp>(f, *anchor).cols());
        bucket = ((meet - i) % 2 == 0) ? 0 : 1;
      }
      ++family_sizes[bucket];
      // all skew matrices on F: free strictly-upper entries
      const int pairs = i * (i - 1) / 2;
      std::vector<long long> digits(pairs, 0);
      while (true) {
        Mat<Fp> omega = Mat<Fp>::Zero(i, i);
        int idx = 0;
        for (int a = 0; a < i; ++a)
          for (int b = a + 1; b < i; ++b, ++idx) {
            omega(a, b) = Fp(digits[idx], p);
            omega(b, a) = Fp(-digits[idx], p);
          }
        const Submodule<Fp> L = lagrangian_from_skew(ef, SkewDatum<Fp>{f, omega});
        buckets[bucket].insert(detail::basis_key(L.basis));
        int pos = 0;
        while (pos < pairs && digits[pos] == p - 1) digits[pos++] = 0;
        if (pos == pairs) break;
        ++digits[pos];
      }
    }

    for (std::size_t b = 0; b < buckets.size(); ++b) {
      CensusRow row;
      row.i = i;
      row.component = split_families ? static_cast<int>(b) : i % 2;
      row.count = Int(buckets[b].size());
      row.predicted = Int(family_sizes[b]) * omega_count;
      out.rows.push_back(row);
    }
  }

  if (brute_force || r <= 3) {
    Int estimate = 1;
    for (int k = 0; k < r * r; ++k) estimate *= p;  // ~ p^(r(2r-r)) subspace count proxy
    if (estimate <= enumeration_guard()) {
      Int total = 0;
      const Ambient<Fp> amb{r, qs.field};
      enumerate_subspaces(p, 2 * r, r, [&](const Mat<Fp>& basis) {
        try {
          const Submodule<Fp> L = make_submodule(amb, basis);
          if (L.dim() == r && is_lagrangian(ef, L).ok) total += 1;
        } catch (const std::invalid_argument&) {
          // not eps-stable
        }
        return true;
      });
      out.brute_force_total = total;
    }
  }
  return out;
}

}  // namespace ortho_hecke
