#include "doctest.h"
#include "fixtures.hpp"
#include "lineq/generators.hpp"
#include "lineq/solve.hpp"
#include "oracle.hpp"

using namespace lineq;
using fixtures::mono;
using fixtures::squares;

namespace {

GeneratorWord G(std::vector<std::uint8_t> s) { return GeneratorWord{std::move(s)}; }

// First shortlex x with a X = b X != 0, by explicit products.
std::optional<GeneratorWord> brute_one(const SparseMatrix& a, const SparseMatrix& b, const EncoderMatrices& m,
                                       std::size_t max_len) {
  for (const auto& x : words_up_to(max_len)) {
    const auto w = word_matrix(m, x);
    const auto ax = mat_mul(a, w);
    if (!ax.is_zero() && ax == mat_mul(b, w)) return x;
  }
  return std::nullopt;
}

bool is_square(std::uint64_t s) {
  for (std::uint64_t r = 1; r * r <= s; ++r)
    if (r * r == s) return true;
  return false;
}

}  // namespace

TEST_CASE("diophantine oracle") {
  const auto p = mono(3, {0, 1, 0}), q = mono(3, {0, 0, 2});
  CHECK(diophantine_oracle(p, q, 1, 4, 5) == std::vector<std::uint64_t>{2});
  CHECK_FALSE(diophantine_oracle(p, q, 1, 3, 5).has_value());
  CHECK_FALSE(diophantine_oracle(p, q, 1, 36, 5).has_value());
  CHECK(diophantine_oracle(p, q, 1, 36, 6) == std::vector<std::uint64_t>{6});
  for (std::uint64_t s = 1; s <= 30; ++s) CHECK(diophantine_oracle(p, q, 1, s, 6).has_value() == is_square(s));
  CHECK_THROWS_AS(diophantine_oracle(p, q, 0, 1, 5), InputError);

  const auto p4 = Polynomial::from_terms(4, {{Nat(1), {0, 1, 0, 0}}});
  const auto q4 = Polynomial::from_terms(4, {{Nat(1), {0, 0, 1, 1}}});
  CHECK(diophantine_oracle(p4, q4, 1, 6, 6) == std::vector<std::uint64_t>{1, 6});
  CHECK(witness_from_tuple(std::vector<std::uint64_t>{2}) == G({1, 1, 2}));
}

TEST_CASE("matrix-level one unknown") {
  const auto& [enc, m] = squares();
  const auto r = solve_one_unknown(k_ns(m, 1, 4), m_ns(m, 1, 4), m, 6);
  CHECK(r.found);
  CHECK(r.x == G({1, 1, 2}));
  CHECK(r.level == Level::matrix);
  const auto none = solve_one_unknown(k_ns(m, 1, 3), m_ns(m, 1, 3), m, 8);
  CHECK_FALSE(none.found);
  CHECK(none.explored > 0);
}

TEST_CASE("matrix-level two unknowns") {
  const auto& [enc, m] = squares();
  const auto r = solve_two_unknowns(k_ns(m, 1, 4), m_ns(m, 1, 4), m, 6);
  CHECK(r.found);
  CHECK(r.x == G({1, 1, 2}));
  CHECK(r.y == G({1, 1, 2}));
  CHECK_FALSE(solve_two_unknowns(k_ns(m, 1, 3), m_ns(m, 1, 3), m, 6).found);
}

TEST_CASE("morphism-level solvers") {
  const auto& [enc, m] = squares();
  const auto one = solve_one_unknown_morphism(enc, m, f_ns_word(1, 4), g_ns_word(1, 4), 6);
  CHECK(one.found);
  CHECK(one.x == G({1, 1, 2}));
  CHECK(one.level == Level::morphism);
  const auto two = solve_two_unknowns_morphism(enc, m, f_ns_word(1, 9), g_ns_word(1, 9), 6);
  CHECK(two.found);
  CHECK(two.x == G({1, 1, 1, 2}));
  CHECK_FALSE(solve_one_unknown_morphism(enc, m, f_ns_word(1, 2), g_ns_word(1, 2), 6).found);

  const auto h = evaluate(enc, concat(f_ns_word(1, 4), one.x));
  const auto k = evaluate(enc, concat(g_ns_word(1, 4), one.x));
  REQUIRE_FALSE(h.matrix_backed());
  CHECK(*h.morphism == *k.morphism);
  CHECK_FALSE(is_zero_morphism(*h.morphism));
}

TEST_CASE("morphism level confirms run-length images under a tiny cap") {
  const auto& [enc, m] = squares();
  Limits tight;
  tight.expansion_cap = 2;
  const auto r = solve_one_unknown_morphism(enc, m, f_ns_word(1, 4), g_ns_word(1, 4), 6, tight);
  CHECK(r.found);
  CHECK_FALSE(r.matrix_backed);
  CHECK(r.certificate.rfind("c0 -> e^", 0) == 0);
}

TEST_CASE("property: the one-unknown solver returns the first shortlex solution") {
  const auto& [enc, m] = squares();
  for (std::uint64_t s = 1; s <= 6; ++s) {
    const auto a = k_ns(m, 1, s), b = m_ns(m, 1, s);
    const auto want = brute_one(a, b, m, 5);
    const auto got = solve_one_unknown(a, b, m, 5);
    CHECK(got.found == want.has_value());
    if (want) CHECK(got.x == *want);
  }
  const auto& g = m;
  for (int round = 0; round < 10; ++round) {
    GeneratorWord wa, wb;
    for (auto i = oracle::uniform(1, 4); i > 0; --i) wa.symbols.push_back(static_cast<std::uint8_t>(oracle::uniform(1, 2)));
    for (auto i = oracle::uniform(1, 4); i > 0; --i) wb.symbols.push_back(static_cast<std::uint8_t>(oracle::uniform(1, 2)));
    const auto a = word_matrix(g, wa), b = word_matrix(g, wb);
    const auto want = brute_one(a, b, g, 4);
    const auto got = solve_one_unknown(a, b, g, 4);
    CHECK(got.found == want.has_value());
    if (want) CHECK(got.x == *want);
  }
}

TEST_CASE("tuple recovery") {
  const auto& enc = squares().enc;
  const auto ok = recover_tuple(enc, 1, 4, G({1, 1, 2}));
  CHECK(ok.ok);
  CHECK(ok.tuple == std::vector<std::uint64_t>{1, 4, 2});
  CHECK_FALSE(recover_tuple(enc, 1, 4, G({1, 1, 2, 1})).ok);
  CHECK_FALSE(recover_tuple(enc, 1, 4, G({1, 2})).ok);
  CHECK_FALSE(recover_tuple(enc, 1, 4, G({1, 1, 2, 1, 2})).ok);
  CHECK_FALSE(recover_tuple(enc, 1, 4, G({2})).ok);
  CHECK(recover_tuple(enc, 1, 4, G({1, 1, 2}), G({1, 1, 2})).ok);
  CHECK_FALSE(recover_tuple(enc, 1, 4, G({1, 1, 2}), G({1, 2})).ok);
}

TEST_CASE("equivalence report on the squares encoder") {
  const auto& [enc, m] = squares();
  ReportConfig c;
  c.s_max = 9;
  c.max_len = 12;
  const auto r = equivalence_report(enc, m, c);
  CHECK(r.all_agree());
  REQUIRE(r.rows.size() == 9);
  for (const auto& row : r.rows) {
    CHECK(row.oracle.has_value() == is_square(row.s));
    CHECK(row.matrix_one.found == is_square(row.s));
    CHECK(row.matrix_two.found == is_square(row.s));
    REQUIRE(row.morphism_one.has_value());
    CHECK(row.morphism_one->found == is_square(row.s));
    CHECK(row.morphism_two->found == is_square(row.s));
  }
  const auto machine = render_machine(r);
  CHECK(machine == render_machine(equivalence_report(enc, m, c)));
  CHECK(machine.find("seconds") == std::string::npos);
  CHECK(render_human(r).find("all methods agree") != std::string::npos);
  ReportConfig bad;
  bad.s_min = 3;
  bad.s_max = 2;
  CHECK_THROWS_AS(equivalence_report(enc, m, bad), InputError);
}

TEST_CASE("empty and full sets") {
  const auto x2 = mono(3, {0, 1, 0}), x3 = mono(3, {0, 0, 1});
  const auto empty = build_encoder(x3 + x2, x3);
  const auto em = matrices_of_encoder(empty);
  ReportConfig c;
  c.s_max = 4;
  c.max_len = 6;
  const auto re = equivalence_report(empty, em, c);
  CHECK(re.all_agree());
  for (const auto& row : re.rows) {
    CHECK_FALSE(row.oracle.has_value());
    CHECK_FALSE(row.matrix_one.found);
    CHECK_FALSE(row.matrix_two.found);
    CHECK_FALSE(row.morphism_one->found);
    CHECK_FALSE(row.morphism_two->found);
  }

  const auto full = build_encoder(x3, x3);
  const auto fm = matrices_of_encoder(full);
  const auto rf = equivalence_report(full, fm, c);
  CHECK(rf.all_agree());
  for (const auto& row : rf.rows) {
    CHECK(row.oracle == std::vector<std::uint64_t>{1});
    for (const auto* r : {&row.matrix_one, &row.matrix_two, &*row.morphism_one, &*row.morphism_two}) {
      CHECK(r->found);
      CHECK(r->x == G({1, 2}));
    }
  }
}
