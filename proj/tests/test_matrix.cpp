#include <ortho_hecke/matrix.hpp>
#include <ortho_hecke/rng.hpp>

#include <doctest.h>

using namespace ortho_hecke;

namespace {

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
Mat<S> random_matrix(SplitMix64& rng, int rows, int cols, std::int64_t p) {
  Mat<S> m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      if constexpr (std::is_same_v<S, Fp>) m(i, j) = rng.fp(p);
      else m(i, j) = rng.rat(5, 3);
    }
  return m;
}

}  // namespace

TEST_CASE("reduced form: identity, proportional rows, permutation") {
  auto id5 = from_rows<Fp>({{1, 0}, {0, 1}}, 5);
  auto rf = reduced_form(id5);
  CHECK(rf.rank == 2);
  CHECK(rf.pivot_cols == std::vector<int>{0, 1});
  CHECK(mat_equal(rf.mat, id5));

  auto prop = from_rows<Rat>({{1, 2}, {2, 4}});
  auto rfq = reduced_form(prop);
  CHECK(rfq.rank == 1);
  CHECK(rfq.pivot_cols == std::vector<int>{0});

  auto perm = from_rows<Fp>({{0, 1}, {1, 0}}, 3);
  auto rfp = reduced_form(perm);
  CHECK(rfp.rank == 2);
  CHECK(mat_equal(rfp.mat, from_rows<Fp>({{1, 0}, {0, 1}}, 3)));
}

TEST_CASE("reduced form is idempotent and rank-stable") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_matrix<Rat>(rng, 4, 6, 0);
    auto rf = reduced_form(m);
    auto again = reduced_form(rf.mat);
    CHECK(mat_equal(rf.mat, again.mat));
    CHECK(rf.rank == again.rank);
  }
}

TEST_CASE("kernel basis: dimensions and exact annihilation") {
  auto id = from_rows<Rat>({{1, 0}, {0, 1}});
  CHECK(kernel_basis(id).cols() == 0);

  Mat<Rat> zero = Mat<Rat>::Zero(2, 3);
  CHECK(kernel_basis(zero).cols() == 3);

  auto row = from_rows<Fp>({{1, 1, 0}}, 3);
  auto ker = kernel_basis(row);
  CHECK(ker.cols() == 2);
  CHECK(mat_is_zero(Mat<Fp>(row * ker)));
}

TEST_CASE("rank-nullity on random matrices") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_matrix<Fp>(rng, 5, 7, 3);
    CHECK(m.cols() == rank_of(m) + kernel_basis(m).cols());
    CHECK(mat_is_zero(Mat<Fp>(m * kernel_basis(m))));
  }
}

TEST_CASE("span intersection basics") {
  auto e12 = from_rows<Rat>({{1, 0}, {0, 1}, {0, 0}});
  auto e23 = from_rows<Rat>({{0, 0}, {1, 0}, {0, 1}});
  auto inter = intersect_spans(e12, e23);
  CHECK(inter.cols() == 1);
  CHECK(mat_equal(inter, from_rows<Rat>({{0}, {1}, {0}})));

  auto x = from_rows<Rat>({{1, 1}, {0, 2}, {3, 0}});
  CHECK(spans_equal(intersect_spans(x, x), x));

  auto e1 = from_rows<Rat>({{1}, {0}});
  auto e2 = from_rows<Rat>({{0}, {1}});
  CHECK(intersect_spans(e1, e2).cols() == 0);

  CHECK_THROWS_AS(intersect_spans(e1, e12), std::invalid_argument);
}

TEST_CASE("dimension formula for sums and intersections") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = column_echelon(random_matrix<Fp>(rng, 6, 3, 3));
    auto b = column_echelon(random_matrix<Fp>(rng, 6, 3, 3));
    const auto inter = intersect_spans(a, b);
    const auto sum = sum_spans(a, b);
    CHECK(inter.cols() + sum.cols() == a.cols() + b.cols());
  }
  for (int trial = 0; trial < 10; ++trial) {
    auto a = column_echelon(random_matrix<Rat>(rng, 5, 2, 0));
    auto b = column_echelon(random_matrix<Rat>(rng, 5, 3, 0));
    const auto inter = intersect_spans(a, b);
    const auto sum = sum_spans(a, b);
    CHECK(inter.cols() + sum.cols() == a.cols() + b.cols());
  }
}

TEST_CASE("canonical column echelon detects equal spans") {
  auto a = from_rows<Rat>({{1, 1}, {2, 0}, {0, 4}});
  auto b = from_rows<Rat>({{2, 0}, {2, 2}, {4, -4}});  // same span, different basis
  CHECK(spans_equal(a, b));
  auto c = from_rows<Rat>({{1, 0}, {0, 1}, {0, 0}});
  CHECK(!spans_equal(a, c));
}

TEST_CASE("exact determinant") {
  CHECK(exact_det(from_rows<Rat>({{2, 1}, {1, 1}})) == Rat(1));
  CHECK(exact_det(from_rows<Rat>({{1, 2}, {2, 4}})) == Rat(0));
  CHECK(exact_det(from_rows<Fp>({{0, 1}, {1, 0}}, 5)) == Fp(4, 5));  // swap sign
  SplitMix64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix<Rat>(rng, 4, 4, 0);
    auto mt = Mat<Rat>(m.transpose());
    CHECK(exact_det(m) == exact_det(mt));
  }
}

TEST_CASE("gaussian binomials count enumerated subspaces") {
  CHECK(gaussian_binomial(4, 2, 3) == Int(130));
  CHECK(gaussian_binomial(6, 3, 3) == Int(33880));
  CHECK(gaussian_binomial(5, 0, 7) == Int(1));

  for (int k = 0; k <= 4; ++k) {
    Int count = 0;
    enumerate_subspaces(3, 4, k, [&](const Mat<Fp>& basis) {
      CHECK(basis.cols() == k);
      // enumerated bases are already canonical
      CHECK(mat_equal(column_echelon(basis), basis));
      ++count;
      return true;
    });
    CHECK(count == gaussian_binomial(4, k, 3));
  }
}

TEST_CASE("solve returns exact particular solutions") {
  auto a = from_rows<Rat>({{1, 2}, {3, 4}});
  Vec<Rat> b(2);
  b << Rat(5), Rat(6);
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(mat_equal(Mat<Rat>(a * *x), Mat<Rat>(b)));

  auto sing = from_rows<Rat>({{1, 1}, {1, 1}});
  Vec<Rat> c(2);
  c << Rat(0), Rat(1);
  CHECK(!solve(sing, c).has_value());
}
