#include <ortho_hecke/io.hpp>

#include <doctest.h>

using namespace ortho_hecke;

TEST_CASE("matrix json round trip keeps exact rationals") {
  const FieldSpec q = FieldSpec::rationals();
  const Json rows = Json::parse(R"([["1/2","-3"],["0","7/5"]])");
  const Mat<Rat> m = matrix_from_json<Rat>(rows, q);
  CHECK(m(0, 0) == Rat("1/2"));
  CHECK(m(1, 1) == Rat("7/5"));
  CHECK(matrix_to_json(m) == rows);
}

TEST_CASE("matrix json accepts bare integers and reduces mod p") {
  const FieldSpec f5 = FieldSpec::prime(5);
  const Mat<Fp> m = matrix_from_json<Fp>(Json::parse("[[9, -1]]"), f5);
  CHECK(m(0, 0) == Fp(4, 5));
  CHECK(m(0, 1) == Fp(4, 5));
}

TEST_CASE("matrix json rejects ragged and malformed input") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK_THROWS_AS(matrix_from_json<Rat>(Json::parse(R"([["1"],["2","3"]])"), q),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json<Rat>(Json::parse(R"({"rows": 3})"), q), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json<Rat>(Json::parse(R"([[true]])"), q), std::invalid_argument);
}

TEST_CASE("submodule json checks field and stability") {
  const FieldSpec q = FieldSpec::rationals();
  const Json good = Json::parse(R"({"r":1,"field":"q","basis":[["0"],["1"]]})");
  const auto L = submodule_from_json<Rat>(good, q);
  CHECK(L.dim() == 1);
  // field mismatch between the file and the requesting context
  CHECK_THROWS_AS(submodule_from_json<Rat>(good, FieldSpec::prime(3)), std::invalid_argument);
  const Json unstable = Json::parse(R"({"r":1,"field":"q","basis":[["1"],["0"]]})");
  CHECK_THROWS_AS(submodule_from_json<Rat>(unstable, q), std::invalid_argument);
}

TEST_CASE("census json uses plain integer counts") {
  const FieldSpec f3 = FieldSpec::prime(3);
  const auto ef = extend_form(hyperbolic_space<Fp>(3, f3));
  const Json j = census_to_json(census(ef, true));
  CHECK(j.at("strata").size() == 2);
  CHECK(j.at("strata")[0].at("i") == 0);
  CHECK(j.at("strata")[0].at("count") == 1);
  CHECK(j.at("strata")[1].at("i") == 1);
  CHECK(j.at("strata")[1].at("count") == 4);
  CHECK(j.at("strata")[1].at("count").is_number_integer());
  CHECK(j.at("brute_force_total") == 5);
}

TEST_CASE("hecke report json carries the certificate fields") {
  const FieldSpec q = FieldSpec::rationals();
  const auto E = hyperbolic_bundle<Rat>({0, 0}, q);
  const auto [amb, ef] = fiber_module(E);
  // L = the free module on the first basis vector
  Mat<Rat> basis = Mat<Rat>::Zero(4, 2);
  basis(0, 0) = Rat(1);
  basis(2, 1) = Rat(1);
  const auto rep = hecke_orthogonal(E, make_submodule(amb, basis));
  const Json j = hecke_report_to_json(rep);
  CHECK(j.at("output_type") == Json::array({1, -1}));
  CHECK(j.at("w2_in") == 0);
  CHECK(j.at("w2_out") == 1);
  CHECK(j.at("reciprocity_ok") == true);
}

TEST_CASE("stratum report json for the eps part of W") {
  const FieldSpec q = FieldSpec::rationals();
  const Ambient<Rat> amb{3, q};
  Mat<Rat> basis = Mat<Rat>::Zero(6, 3);
  for (int k = 0; k < 3; ++k) basis(3 + k, k) = Rat(1);
  const auto ef = extend_form(hyperbolic_space<Rat>(3, q));
  const Json j = stratum_report_to_json(stratum_data(ef, make_submodule(amb, basis)));
  CHECK(j.at("i") == 0);
  CHECK(j.at("torsion_degree") == 3);
  CHECK(j.at("component") == 0);
}

TEST_CASE("scalar parsing respects the field") {
  CHECK(scalar_from_string<Rat>("-7/3", FieldSpec::rationals()) == Rat("-7/3"));
  CHECK(scalar_from_string<Fp>("9", FieldSpec::prime(5)) == Fp(4, 5));
  CHECK_THROWS_AS(scalar_from_string<Fp>("x", FieldSpec::prime(5)), std::invalid_argument);
}
