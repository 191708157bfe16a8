#include <ortho_hecke/hecke.hpp>

#include <doctest.h>

#include <optional>

#include "helpers.hpp"

using namespace ortho_hecke;
using oht::brute_force_lagrangians;
using oht::from_rows;

namespace {

const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec QQ = FieldSpec::rationals();

// K[eps] e1 inside rank-2 fibers: columns (e1; 0), (0; e1).
template <class S>
Submodule<S> free_e1(const Ambient<S>& amb) {
  const int r = amb.r;
  Mat<S> cols = Mat<S>::Zero(2 * r, 2);
  cols(0, 0) = scalar_one<S>(amb.field);
  cols(r, 1) = scalar_one<S>(amb.field);
  return make_submodule(amb, cols);
}

template <class S>
Submodule<S> eps_fiber(const Ambient<S>& amb) {
  const int r = amb.r;
  Mat<S> cols = Mat<S>::Zero(2 * r, r);
  for (int i = 0; i < r; ++i) cols(r + i, i) = scalar_one<S>(amb.field);
  return make_submodule(amb, cols);
}

int type_sum(const SplittingType& t) {
  int s = 0;
  for (int a : t) s += a;
  return s;
}

// The invariants every certified transform must satisfy.
template <class S>
void check_report(const HeckeReport<S>& rep) {
  CHECK(!is_zero(rep.gram_det_at_x));
  CHECK(type_sum(rep.output_type) == 0);
  CHECK(rep.w2_out == (rep.w2_in + rep.stratum_i) % 2);
  CHECK(rep.two_step_type == rep.output_type);
  CHECK(rep.reciprocity_ok);
}

}  // namespace

TEST_CASE("bundle construction guards") {
  CHECK_THROWS_AS(make_split_bundle<Rat>({0, 1}, QQ, from_rows<Rat>({{0, 1}, {1, 0}})),
                  std::invalid_argument);  // not sorted
  CHECK_THROWS_AS(make_split_bundle<Rat>({1, 0}, QQ, from_rows<Rat>({{0, 1}, {1, 0}})),
                  std::invalid_argument);  // sum nonzero
  CHECK_THROWS_AS(make_split_bundle<Rat>({1, -1}, QQ, from_rows<Rat>({{0, 1}, {2, 0}})),
                  std::invalid_argument);  // not symmetric
  CHECK_THROWS_AS(make_split_bundle<Rat>({1, -1}, QQ, from_rows<Rat>({{1, 0}, {0, 1}})),
                  std::invalid_argument);  // diagonal entries pair degree 1 with itself
  CHECK_THROWS_AS(make_split_bundle<Rat>({0, 0}, QQ, from_rows<Rat>({{1, 1}, {1, 1}})),
                  std::invalid_argument);  // degenerate
  const auto ok = hyperbolic_bundle<Rat>({2, 0, 0, -2}, QQ);
  CHECK(ok.rank() == 4);
  CHECK(ok.degrees == SplittingType{2, 0, 0, -2});
}

TEST_CASE("plain transforms on rank-2 literals") {
  const auto e = hyperbolic_bundle<Rat>({0, 0}, QQ);
  const auto [amb, ef] = fiber_module(e);

  CHECK(hecke_plain(e.degrees, free_e1(amb)) == SplittingType{0, -2});
  CHECK(hecke_plain(e.degrees, eps_fiber(amb)) == SplittingType{-1, -1});

  const auto full = make_submodule(amb, Mat<Rat>(Mat<Rat>::Identity(4, 4)));
  CHECK(hecke_plain(e.degrees, full) == SplittingType{0, 0});

  const Ambient<Rat> wrong{3, QQ};
  CHECK_THROWS_AS(hecke_plain(e.degrees, eps_fiber(wrong)), std::invalid_argument);
}

TEST_CASE("orthogonal transform on rank-2 literals") {
  const auto e = hyperbolic_bundle<Rat>({0, 0}, QQ);
  const auto [amb, ef] = fiber_module(e);

  const auto rep = hecke_orthogonal(e, free_e1(amb));
  CHECK(rep.output_type == SplittingType{1, -1});
  CHECK(rep.w2_in == 0);
  CHECK(rep.w2_out == 1);
  CHECK(rep.stratum_i == 1);
  check_report(rep);

  const auto fixed = hecke_orthogonal(e, eps_fiber(amb));
  CHECK(fixed.output_type == SplittingType{0, 0});
  CHECK(fixed.stratum_i == 0);
  CHECK(fixed.w2_out == 0);
  check_report(fixed);

  // non-Lagrangian data are rejected: K[eps](e1 + e2) is stable but the
  // constant component of the form does not vanish on it
  Mat<Rat> bad = Mat<Rat>::Zero(4, 2);
  bad(0, 0) = Rat(1);
  bad(1, 0) = Rat(1);
  bad(2, 1) = Rat(1);
  bad(3, 1) = Rat(1);
  CHECK_THROWS_WITH_AS(hecke_orthogonal(e, make_submodule(amb, bad)), "not lagrangian",
                       std::invalid_argument);
}

TEST_CASE("rank-4 isotropic-plane transform") {
  // F = span{e1, e2} with zero skew datum over degrees (1, 0, 0, -1)
  const auto e = hyperbolic_bundle<Rat>({1, 0, 0, -1}, QQ);
  const auto [amb, ef] = fiber_module(e);
  Mat<Rat> f = Mat<Rat>::Zero(4, 2);
  f(0, 0) = Rat(1);
  f(1, 1) = Rat(1);
  const auto L = lagrangian_from_skew(ef, SkewDatum<Rat>{f, Mat<Rat>::Zero(2, 2)});

  const auto rep = hecke_orthogonal(e, L);
  CHECK(rep.stratum_i == 2);
  CHECK(rep.output_type == SplittingType{2, 1, -1, -2});
  CHECK(rep.w2_in == 1);
  CHECK(rep.w2_out == 1);
  check_report(rep);
}

TEST_CASE("parity of the positive part") {
  CHECK(w2_parity({0, 0}) == 0);
  CHECK(w2_parity({1, -1}) == 1);
  CHECK(w2_parity({2, -2}) == 0);
  CHECK(w2_parity({2, 1, -1, -2}) == 1);
  CHECK(w2_parity({1, 1, 0, -2}) == 0);
}

TEST_CASE("exhaustive transforms over F3, ranks 2 and 3") {
  for (int r = 2; r <= 3; ++r) {
    std::vector<std::vector<int>> degree_grid;
    if (r == 2) degree_grid = {{0, 0}, {1, -1}, {2, -2}};
    else degree_grid = {{0, 0, 0}, {1, 0, -1}, {2, 0, -2}};
    const auto lagrangians = brute_force_lagrangians(r);
    CHECK(lagrangians.size() > 1);
    for (const auto& degrees : degree_grid) {
      const auto e = hyperbolic_bundle<Fp>(degrees, F3);
      for (const auto& L : lagrangians) {
        const auto rep = hecke_orthogonal(e, L);
        check_report(rep);
      }
    }
  }
}

TEST_CASE("anisotropic form over the rationals") {
  // x1^2 + 2 x2^2 + x3^2 + 2 x4^2 has no rational isotropic vectors, so the
  // only Lagrangian datum is the eps fiber and the transform fixes the type.
  Mat<Rat> gram = Mat<Rat>::Zero(4, 4);
  gram(0, 0) = Rat(1);
  gram(1, 1) = Rat(2);
  gram(2, 2) = Rat(1);
  gram(3, 3) = Rat(2);
  const auto e = make_split_bundle<Rat>({0, 0, 0, 0}, QQ, gram);
  const auto [amb, ef] = fiber_module(e);
  const auto rep = hecke_orthogonal(e, eps_fiber(amb));
  CHECK(rep.output_type == SplittingType{0, 0, 0, 0});
  CHECK(rep.stratum_i == 0);
  check_report(rep);
}

TEST_CASE("random skew data over the rationals, rank 4") {
  SplitMix64 rng(8801);
  const std::vector<std::vector<int>> degree_grid = {
      {0, 0, 0, 0}, {1, 0, 0, -1}, {1, 1, -1, -1}, {2, 1, -1, -2}};
  for (const auto& degrees : degree_grid) {
    const auto e = hyperbolic_bundle<Rat>(degrees, QQ);
    const auto [amb, ef] = fiber_module(e);
    for (int i = 1; i <= 2; ++i) {
      for (int trial = 0; trial < 3; ++trial) {
        // span{e1..ei} is isotropic for the anti-diagonal form
        Mat<Rat> f = Mat<Rat>::Zero(4, i);
        for (int k = 0; k < i; ++k) f(k, k) = Rat(1);
        Mat<Rat> omega = Mat<Rat>::Zero(i, i);
        if (i == 2) {
          const Rat w = rng.rat(4, 2);
          omega(0, 1) = w;
          omega(1, 0) = -w;
        }
        const auto L = lagrangian_from_skew(ef, SkewDatum<Rat>{f, omega});
        const auto rep = hecke_orthogonal(e, L);
        CHECK(rep.stratum_i == i);
        check_report(rep);
      }
    }
  }
}

TEST_CASE("pencil of transforms through an isotropic plane") {
  const auto e = hyperbolic_bundle<Rat>({1, 0, 0, -1}, QQ);
  Mat<Rat> plane = Mat<Rat>::Zero(4, 2);
  plane(0, 0) = Rat(1);
  plane(1, 1) = Rat(1);

  std::vector<std::optional<Rat>> samples = {std::nullopt, Rat(0), Rat(1), Rat(2), Rat(3)};
  const auto types = hecke_curve(e, plane, samples);
  REQUIRE(types.size() == 5);
  CHECK(types[0] == e.degrees);  // the point at infinity fixes the type
  CHECK(types[1] == SplittingType{2, 1, -1, -2});
  CHECK(types[2] == SplittingType{1, 0, 0, -1});
  CHECK(types[3] == SplittingType{1, 0, 0, -1});
  CHECK(types[4] == SplittingType{1, 0, 0, -1});

  Mat<Rat> bad = Mat<Rat>::Zero(4, 2);
  bad(0, 0) = Rat(1);
  bad(3, 1) = Rat(1);  // span{e1, e4} pairs to 1 under the anti-diagonal form
  CHECK_THROWS_WITH_AS(hecke_curve(e, bad, samples), "not an isotropic plane",
                       std::invalid_argument);
}

TEST_CASE("lattice certificate internals") {
  const auto e = hyperbolic_bundle<Rat>({0, 0}, QQ);
  const auto [amb, ef] = fiber_module(e);
  const auto lat = hecke_lattice(e, free_e1(amb));
  CHECK(lat.stratum == 1);
  CHECK(!is_zero(lat.det0));
  // V^T G V must be exactly t^2 G' with G'(0) = the reported determinant source
  const auto pairings = lat.v.transposed() * e.gram * lat.v;
  CHECK(pairings.divisible(2));
  const auto back = pairings.divided(2);
  CHECK(mat_equal(back.coeff(0), lat.gram_prime.coeff(0)));
  CHECK(exact_det(lat.gram_prime.coeff(0)) == lat.det0);
}
