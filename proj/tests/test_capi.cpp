#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lineq/lineq.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string data_dir = LINEQ_TEST_DATA;

struct Owned {
  char* p = nullptr;
  ~Owned() { lineq_string_free(p); }
};

lineq_polynomial* load(const char* name) {
  lineq_polynomial* p = nullptr;
  REQUIRE(lineq_polynomial_from_json(slurp(data_dir + "/" + name).c_str(), &p) == LINEQ_OK);
  return p;
}

}  // namespace

TEST_CASE("status names and defaults") {
  CHECK(std::string(lineq_status_name(LINEQ_OK)) == "ok");
  CHECK(std::string(lineq_status_name(LINEQ_ERR_CAP)) == "expansion cap exceeded");
  lineq_limits l;
  lineq_limits_default(&l);
  CHECK(l.expansion_cap == 1000000);
  CHECK(l.alphabet_budget == 32768);
  CHECK(std::strlen(lineq_version()) > 0);
}

TEST_CASE("null and malformed arguments") {
  lineq_polynomial* p = nullptr;
  CHECK(lineq_polynomial_from_json(nullptr, &p) == LINEQ_ERR_NULL);
  CHECK(lineq_polynomial_from_json("{", &p) == LINEQ_ERR_INPUT);
  CHECK(p == nullptr);
  CHECK(std::string(lineq_last_error()).find("malformed") != std::string::npos);
  lineq_polynomial_free(nullptr);
  lineq_encoder_free(nullptr);
  lineq_string_free(nullptr);
  int found = 0;
  Owned out;
  CHECK(lineq_solve(nullptr, 1, 1, 3, 0, LINEQ_LEVEL_MATRIX, nullptr, &found, &out.p) == LINEQ_ERR_NULL);
  lineq_encoder* e = nullptr;
  CHECK(lineq_encoder_from_json("{\"format\": \"lineq-encoder/1\"}", &e) == LINEQ_ERR_INPUT);
  CHECK(e == nullptr);
}

TEST_CASE("polynomial evaluation") {
  lineq_polynomial* p = nullptr;
  REQUIRE(lineq_polynomial_from_json(R"({"arity": 2, "monomials": [{"coeff": "1", "exponents": [2, 1]}]})", &p) ==
          LINEQ_OK);
  CHECK(lineq_polynomial_arity(p) == 2);
  const uint64_t pt[] = {3, 4};
  Owned v;
  REQUIRE(lineq_polynomial_eval(p, pt, 2, &v.p) == LINEQ_OK);
  CHECK(std::string(v.p) == "36");
  Owned bad;
  CHECK(lineq_polynomial_eval(p, pt, 1, &bad.p) == LINEQ_ERR_INPUT);
  lineq_polynomial_free(p);
}

TEST_CASE("encoder pipeline through the C interface") {
  lineq_polynomial* p = load("squares_p.json");
  lineq_polynomial* q = load("squares_q.json");

  lineq_limits tiny;
  lineq_limits_default(&tiny);
  tiny.alphabet_budget = 10;
  lineq_encoder* none = nullptr;
  CHECK(lineq_encoder_build(p, q, &tiny, &none) == LINEQ_ERR_BUDGET);
  CHECK(none == nullptr);

  lineq_encoder* enc = nullptr;
  REQUIRE(lineq_encoder_build(p, q, nullptr, &enc) == LINEQ_OK);
  size_t t = 0, letters = 0;
  CHECK(lineq_encoder_info(enc, &t, &letters) == LINEQ_OK);
  CHECK(t == 3);
  CHECK(letters > 4);

  Owned doc;
  REQUIRE(lineq_encoder_to_json(enc, &doc.p) == LINEQ_OK);
  lineq_encoder* again = nullptr;
  REQUIRE(lineq_encoder_from_json(doc.p, &again) == LINEQ_OK);
  Owned doc2;
  REQUIRE(lineq_encoder_to_json(again, &doc2.p) == LINEQ_OK);
  CHECK(std::string(doc.p) == std::string(doc2.p));

  int found = 0;
  Owned sol;
  REQUIRE(lineq_solve(again, 1, 4, 6, 0, LINEQ_LEVEL_BOTH, nullptr, &found, &sol.p) == LINEQ_OK);
  CHECK(found == 1);
  const auto j = nlohmann::json::parse(sol.p);
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["x"] == "[1,1,2]");
  CHECK(j["results"][1]["level"] == "morphism");
  CHECK(j["results"][1]["recovery"]["tuple"] == nlohmann::json::array({1, 4, 2}));

  Owned sol3;
  REQUIRE(lineq_solve(again, 1, 3, 6, 1, LINEQ_LEVEL_MATRIX, nullptr, &found, &sol3.p) == LINEQ_OK);
  CHECK(found == 0);

  int passed = 0;
  Owned v5;
  REQUIRE(lineq_verify(again, LINEQ_SUITE_LEMMA5, 1, nullptr, &passed, &v5.p) == LINEQ_OK);
  CHECK(passed == 1);
  Owned inv;
  REQUIRE(lineq_verify(again, LINEQ_SUITE_INVARIANTS, 0, nullptr, &passed, &inv.p) == LINEQ_OK);
  CHECK(passed == 1);
  Owned def;
  REQUIRE(lineq_verify(again, LINEQ_SUITE_DEFINITION, 0, nullptr, &passed, &def.p) == LINEQ_OK);
  const auto dj = nlohmann::json::parse(def.p);
  CHECK(dj["c2 g2^2"] == "c3");
  CHECK(dj["failed"] == nlohmann::json::array({"(ii)", "(iii)"}));
  CHECK(passed == 0);
  Owned badsuite;
  CHECK(lineq_verify(again, static_cast<lineq_suite>(42), 0, nullptr, &passed, &badsuite.p) == LINEQ_ERR_INPUT);

  lineq_report_config cfg{1, 1, 1, 4, 5, 8, 1};
  int agree = 0;
  Owned r1, r2;
  REQUIRE(lineq_report(again, &cfg, nullptr, 1, &agree, &r1.p) == LINEQ_OK);
  CHECK(agree == 1);
  REQUIRE(lineq_report(enc, &cfg, nullptr, 1, &agree, &r2.p) == LINEQ_OK);
  CHECK(std::string(r1.p) == std::string(r2.p));

  int ofound = 0;
  Owned tuple;
  REQUIRE(lineq_oracle(p, q, 1, 9, 5, &ofound, &tuple.p) == LINEQ_OK);
  CHECK(ofound == 1);
  CHECK(std::string(tuple.p) == "[3]");

  Owned mats;
  REQUIRE(lineq_encoder_matrices(enc, &mats.p) == LINEQ_OK);
  CHECK(nlohmann::json::parse(mats.p)["M1"]["dim"] == letters);

  lineq_encoder_free(again);
  lineq_encoder_free(enc);
  lineq_polynomial_free(p);
  lineq_polynomial_free(q);
}

TEST_CASE("single M-triples through the C interface") {
  lineq_polynomial* p = nullptr;
  REQUIRE(lineq_polynomial_from_json(
              R"({"arity": 2, "monomials": [{"coeff": "1", "exponents": [2, 0]}, {"coeff": "2", "exponents": [0, 1]}]})",
              &p) == LINEQ_OK);
  Owned doc;
  REQUIRE(lineq_mtriple_compile(p, nullptr, &doc.p) == LINEQ_OK);
  const uint64_t pt[] = {3, 5};
  Owned v;
  int word_level = 0;
  REQUIRE(lineq_mtriple_compute(doc.p, pt, 2, nullptr, &v.p, &word_level) == LINEQ_OK);
  CHECK(std::string(v.p) == "19");
  CHECK(word_level == 1);
  lineq_limits tight;
  lineq_limits_default(&tight);
  tight.expansion_cap = 1;
  Owned v2;
  REQUIRE(lineq_mtriple_compute(doc.p, pt, 2, &tight, &v2.p, &word_level) == LINEQ_OK);
  CHECK(std::string(v2.p) == "19");
  CHECK(word_level == 0);
  lineq_limits zero{0, 1};
  Owned v3;
  CHECK(lineq_mtriple_compute(doc.p, pt, 2, &zero, &v3.p, &word_level) == LINEQ_ERR_INPUT);
  lineq_polynomial_free(p);
}
