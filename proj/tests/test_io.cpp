#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "lineq/io.hpp"

using namespace lineq;
using fixtures::mono;
using fixtures::squares;

TEST_CASE("polynomial documents") {
  const auto p = polynomial_from_json(R"({"arity": 2, "monomials": [{"coeff": "3", "exponents": [2, 0]},
                                          {"coeff": 1, "exponents": [0, 1]}]})");
  CHECK(p.arity() == 2);
  CHECK(p.monomials().size() == 2);
  CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  const auto big = polynomial_from_json(R"({"arity": 1, "monomials": [{"coeff": "123456789012345678901234567890", "exponents": [1]}]})");
  CHECK(big.monomials()[0].coeff.to_string() == "123456789012345678901234567890");

  CHECK_THROWS_AS(polynomial_from_json("{"), InputError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"arity": 0, "monomials": []})"), InputError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"monomials": []})"), InputError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"arity": 1, "monomials": [{"coeff": "-2", "exponents": [1]}]})"), InputError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"arity": 1, "monomials": [{"coeff": -2, "exponents": [1]}]})"), InputError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"arity": 2, "monomials": [{"coeff": "1", "exponents": [1]}]})"), InputError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"arity": 1, "monomials": [{"coeff": "1", "exponents": [-1]}]})"), InputError);
}

TEST_CASE("M-triple documents round trip") {
  const auto c = compile_polynomial(mono(2, {1, 1}) + mono(2, {0, 0}, 2));
  const auto text = mtriple_to_json(c);
  const auto back = mtriple_from_json(text);
  CHECK(*back.triple.alphabet == *c.triple.alphabet);
  CHECK(back.triple.g1.images().size() == c.triple.g1.images().size());
  CHECK(mtriple_to_json(back) == text);
  const std::vector<Nat> pt{Nat(2), Nat(5)};
  CHECK(mtriple_compute(back, pt).value == Nat(12));
  CHECK_THROWS_AS(mtriple_from_json(R"({"format": "something-else"})"), InputError);
}

TEST_CASE("encoder documents round trip") {
  const auto& enc = squares().enc;
  const auto text = encoder_to_json(enc);
  const auto back = encoder_from_json(text);
  CHECK(*back.alphabet == *enc.alphabet);
  CHECK(back.g1 == enc.g1);
  CHECK(back.g2 == enc.g2);
  CHECK(back.u == enc.u);
  CHECK(back.v == enc.v);
  CHECK(back.p == enc.p);
  CHECK(back.q1 == enc.q1);
  CHECK(back.a_blocks == enc.a_blocks);
  CHECK(back.b_blocks == enc.b_blocks);
  CHECK(encoder_to_json(back) == text);

  auto j = nlohmann::json::parse(text);
  j["u"] = "c0";
  CHECK_THROWS_AS(encoder_from_json(j.dump()), InputError);
  auto j2 = nlohmann::json::parse(text);
  j2["g2"][0][1] = "c2";
  CHECK_THROWS_AS(encoder_from_json(j2.dump()), InputError);
  auto j3 = nlohmann::json::parse(text);
  j3["blocks"]["A"][0] = 1;
  CHECK_THROWS_AS(encoder_from_json(j3.dump()), InputError);
}

TEST_CASE("matrix documents") {
  const auto m = SparseMatrix::from_triplets(3, {{0, 1, Nat(2)}, {2, 2, Nat::from_string("99999999999999999999")}});
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(R"({"dim": 2, "entries": [[0, 2, "1"]]})"), InputError);
  CHECK_THROWS_AS(matrix_from_json(R"({"dim": 2, "entries": [[0, 1, 1]]})"), InputError);
  const auto doc = nlohmann::json::parse(matrices_to_json(squares().mats, *squares().enc.alphabet));
  CHECK(doc["format"] == "lineq-matrices/1");
  CHECK(matrix_from_json(doc["M1"].dump()) == squares().mats.m1);
  CHECK(matrix_from_json(doc["M2"].dump()) == squares().mats.m2);
}
