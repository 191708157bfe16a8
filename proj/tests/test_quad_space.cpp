#include <ortho_hecke/quad_space.hpp>

#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"

using namespace ortho_hecke;
using oht::from_rows;

namespace {

const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec QQ = FieldSpec::rationals();

template <class S>
Submodule<S> submodule_from(const Ambient<S>& amb,
                            std::initializer_list<std::initializer_list<int>> rows,
                            std::int64_t p = 0) {
  return make_submodule(amb, from_rows<S>(rows, p));
}

using oht::brute_force_lagrangians;

}  // namespace

TEST_CASE("hyperbolic Gram matrices") {
  auto h2 = hyperbolic_space<Rat>(2, QQ);
  CHECK(mat_equal(h2.b1, from_rows<Rat>({{0, 1}, {1, 0}})));

  auto h3 = hyperbolic_space<Rat>(3, QQ);
  CHECK(mat_equal(h3.b1, from_rows<Rat>({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})));
  CHECK(exact_det(h3.b1) == Rat(-1));

  auto h4 = hyperbolic_space<Fp>(4, F3);
  CHECK(enumerate_isotropic(h4, 1).size() == 16);
}

TEST_CASE("degenerate or asymmetric Gram matrices are rejected") {
  CHECK_THROWS(make_quadratic_space<Rat>(2, QQ, from_rows<Rat>({{1, 1}, {1, 1}})));
  CHECK_THROWS(make_quadratic_space<Rat>(2, QQ, from_rows<Rat>({{0, 1}, {-1, 0}})));
}

TEST_CASE("extended form components") {
  auto e1 = extend_form(make_quadratic_space<Rat>(1, QQ, from_rows<Rat>({{1}})));
  CHECK(mat_equal(e1.b0, from_rows<Rat>({{1, 0}, {0, 0}})));
  CHECK(mat_equal(e1.beps, from_rows<Rat>({{0, 1}, {1, 0}})));

  auto h2 = hyperbolic_space<Rat>(2, QQ);
  auto e2 = extend_form(h2);
  Mat<Rat> expected = Mat<Rat>::Zero(4, 4);
  expected.block(0, 2, 2, 2) = h2.b1;
  expected.block(2, 0, 2, 2) = h2.b1;
  CHECK(mat_equal(e2.beps, expected));
  CHECK(mat_equal(e2.beps, Mat<Rat>(e2.beps.transpose())));
  CHECK(mat_equal(e2.b0, Mat<Rat>(e2.b0.transpose())));
  CHECK(!is_zero(exact_det(e2.beps)));

  // same input, same output
  auto again = extend_form(h2);
  CHECK(mat_equal(again.b0, e2.b0));
  CHECK(mat_equal(again.beps, e2.beps));
}

TEST_CASE("orthogonal complements") {
  auto h2 = hyperbolic_space<Rat>(2, QQ);
  CHECK(orthogonal_complement(h2, Mat<Rat>(Mat<Rat>::Zero(2, 0))).cols() == 2);
  auto e1 = from_rows<Rat>({{1}, {0}});
  CHECK(mat_equal(orthogonal_complement(h2, e1), e1));

  auto h4 = hyperbolic_space<Rat>(4, QQ);
  auto plane = from_rows<Rat>({{1, 0}, {0, 1}, {0, 0}, {0, 0}});
  CHECK(mat_equal(orthogonal_complement(h4, plane), plane));
}

TEST_CASE("double complement and isotropy, exhaustively over F_3") {
  for (int r = 1; r <= 4; ++r) {
    auto qs = hyperbolic_space<Fp>(r, F3);
    for (int k = 0; k <= r; ++k) {
      enumerate_subspaces(3, r, k, [&](const Mat<Fp>& f) {
        const Mat<Fp> perp = orthogonal_complement(qs, f);
        CHECK(perp.cols() + f.cols() == r);
        CHECK(mat_equal(orthogonal_complement(qs, perp), f));
        const bool contained = sum_spans(perp, f).cols() == perp.cols();
        CHECK(is_isotropic(qs, f) == contained);
        return true;
      });
    }
  }
}

TEST_CASE("lagrangian test with diagnostics") {
  auto ef = extend_form(hyperbolic_space<Rat>(2, QQ));
  Ambient<Rat> amb{2, QQ};

  auto eps_v = submodule_from<Rat>(amb, {{0, 0}, {0, 0}, {1, 0}, {0, 1}});
  CHECK(is_lagrangian(ef, eps_v).ok);

  auto free_e1 = submodule_from<Rat>(amb, {{1, 0}, {0, 0}, {0, 1}, {0, 0}});
  CHECK(is_lagrangian(ef, free_e1).ok);

  // V itself is not eps-stable, so it cannot even be constructed
  CHECK_THROWS_WITH_AS(submodule_from<Rat>(amb, {{1, 0}, {0, 1}, {0, 0}, {0, 0}}),
                       "not epsilon-stable", std::invalid_argument);

  // stable but not isotropic: K[eps](e1 + e2), q(e1 + e2) = 2
  auto anisotropic = submodule_from<Rat>(amb, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
  auto bad = is_lagrangian(ef, anisotropic);
  CHECK(!bad.ok);
  CHECK(!bad.reason.empty());

  auto small = submodule_from<Rat>(amb, {{0}, {0}, {1}, {0}});
  CHECK(!is_lagrangian(ef, small).ok);
}

TEST_CASE("component indices anchored at eps V") {
  {
    auto ef = extend_form(hyperbolic_space<Rat>(3, QQ));
    Ambient<Rat> amb{3, QQ};
    Mat<Rat> cols = Mat<Rat>::Zero(6, 3);
    for (int i = 0; i < 3; ++i) cols(3 + i, i) = Rat(1);
    CHECK(component_index(ef, make_submodule(amb, cols)) == 0);
  }
  {
    auto ef = extend_form(hyperbolic_space<Rat>(2, QQ));
    Ambient<Rat> amb{2, QQ};
    auto L = submodule_from<Rat>(amb, {{1, 0}, {0, 0}, {0, 1}, {0, 0}});
    CHECK(component_index(ef, L) == 1);

    auto anisotropic = submodule_from<Rat>(amb, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    CHECK_THROWS(component_index(ef, anisotropic));
  }
  {
    // projection is a Lagrangian plane of the rank-4 space: i = 2, label 0
    auto ef = extend_form(hyperbolic_space<Rat>(4, QQ));
    Ambient<Rat> amb{4, QQ};
    Mat<Rat> cols = Mat<Rat>::Zero(8, 4);
    cols(0, 0) = cols(1, 1) = Rat(1);      // e1, e2
    cols(4, 2) = cols(5, 3) = Rat(1);      // eps e1, eps e2
    CHECK(component_index(ef, make_submodule(amb, cols)) == 0);
  }
}

TEST_CASE("isotropic enumeration counts") {
  CHECK(enumerate_isotropic(hyperbolic_space<Fp>(3, F3), 1).size() == 4);
  CHECK(enumerate_isotropic(hyperbolic_space<Fp>(2, F3), 1).size() == 2);
  CHECK(enumerate_isotropic(hyperbolic_space<Fp>(2, FieldSpec::prime(7)), 1).size() == 2);
  CHECK(enumerate_isotropic(hyperbolic_space<Fp>(3, F3), 0).size() == 1);
  for (const auto& f : enumerate_isotropic(hyperbolic_space<Fp>(4, F3), 2))
    CHECK(is_isotropic(hyperbolic_space<Fp>(4, F3), f));
  CHECK(enumerate_isotropic(hyperbolic_space<Fp>(4, F3), 2).size() == 8);
}

TEST_CASE("enumeration guard is enforced and overridable") {
  setenv("ORTHO_HECKE_GUARD", "10", 1);
  CHECK_THROWS_WITH_AS(enumerate_isotropic(hyperbolic_space<Fp>(4, F3), 2),
                       "enumeration too large", std::runtime_error);
  unsetenv("ORTHO_HECKE_GUARD");
  CHECK(enumerate_isotropic(hyperbolic_space<Fp>(4, F3), 2).size() == 8);
}

TEST_CASE("kernel part of a Lagrangian is eps times the complement of its projection") {
  for (int r = 2; r <= 3; ++r) {
    auto qs = hyperbolic_space<Fp>(r, F3);
    for (const auto& L : brute_force_lagrangians(r)) {
      const Mat<Fp> f = v_projection(L);
      CHECK(is_isotropic(qs, f));
      CHECK(mat_equal(eps_part(L), orthogonal_complement(qs, f)));
    }
  }
}

TEST_CASE("component label = parity class of mutual intersections") {
  auto ef2 = extend_form(hyperbolic_space<Fp>(2, F3));
  auto ef3 = extend_form(hyperbolic_space<Fp>(3, F3));
  for (int r = 2; r <= 3; ++r) {
    const auto& ef = r == 2 ? ef2 : ef3;
    const auto all = brute_force_lagrangians(r);
    for (const auto& a : all)
      for (const auto& b : all) {
        const int inter = static_cast<int>(intersect_spans(a.basis, b.basis).cols());
        const bool same_parity = (inter - r) % 2 == 0;
        const bool same_label = component_index(ef, a) == component_index(ef, b);
        CHECK(same_parity == same_label);
      }
  }
}
