#include "doctest.h"
#include "lineq/lang.hpp"
#include "lineq/matrix.hpp"
#include "lineq/morph.hpp"
#include "oracle.hpp"

using namespace lineq;

namespace {

AlphabetPtr abc(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i + 1));
  return make_alphabet(names);
}

oracle::Letters letters_of(const Word& w) { return expand(w, 1u << 20); }

oracle::Table table_of(const Morphism& m) {
  oracle::Table t;
  for (const auto& img : m.images()) t.push_back(letters_of(img));
  return t;
}

Word random_word(const AlphabetPtr& a, std::size_t max_len) {
  Word w(a);
  const auto len = oracle::uniform(0, max_len);
  for (std::uint64_t i = 0; i < len; ++i) w.append(static_cast<Letter>(oracle::uniform(0, a->size() - 1)), Nat(1));
  return w;
}

Morphism random_morphism(const AlphabetPtr& a, std::size_t max_len) {
  std::vector<Word> imgs;
  for (std::size_t i = 0; i < a->size(); ++i) imgs.push_back(random_word(a, max_len));
  return Morphism(a, a, imgs);
}

oracle::Dense dense_of(const SparseMatrix& m) {
  oracle::Dense d(m.dim(), std::vector<mpz_class>(m.dim(), 0));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (const auto& e : m.row(i)) d[i][e.col] = e.value.to_mpz();
  return d;
}

SparseMatrix from_dense(const std::vector<std::vector<std::uint64_t>>& rows) {
  std::vector<SparseMatrix::Triplet> ts;
  for (std::uint32_t i = 0; i < rows.size(); ++i)
    for (std::uint32_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j]) ts.push_back({i, j, Nat(rows[i][j])});
  return SparseMatrix::from_triplets(rows.size(), ts);
}

}  // namespace

TEST_CASE("alphabet levels and lookup") {
  const auto a = make_alphabet({"a", "b", "c", "e"}, {2, 1, 1});
  CHECK(a->levels() == 3);
  CHECK(a->level_of(1) == 0);
  CHECK(a->level_of(2) == 1);
  CHECK(a->level_begin(2) == 3);
  CHECK(a->find("c") == Letter{2});
  CHECK_FALSE(a->find("x").has_value());
  CHECK(a->last() == 3);
  CHECK_THROWS_AS(make_alphabet({"a", "a"}), InputError);
  CHECK_THROWS_AS(make_alphabet({"a", "b"}, {1}), InputError);
  CHECK_THROWS_AS(make_alphabet({"a", "b"}, {2, 0}), InputError);
}

TEST_CASE("run-length words") {
  const auto a = abc(2);
  Word w(a);
  w.append(0, Nat(2));
  w.append(0, Nat(3));
  w.append(1, Nat(1));
  REQUIRE(w.runs().size() == 2);
  CHECK(w.runs()[0].count == Nat(5));
  CHECK(w.length() == Nat(6));
  CHECK(to_text(w) == "z1^5 z2");
  CHECK(parse_word(a, "z1^5 z2") == w);
  CHECK(parse_word(a, "z1 z1 z1 z1 z1 z2") == w);
  CHECK_THROWS_AS(parse_word(a, "z3"), InputError);

  const auto e = make_alphabet({"e"});
  const auto big = Word::letter(e, 0, Nat(179));
  CHECK(parikh(big)[0] == Nat(179));
  CHECK(parikh(big).entries().size() == 1);
}

TEST_CASE("word power") {
  const auto a = abc(2);
  const auto zz = parse_word(a, "z1 z2");
  const auto p3 = word_power(zz, Nat(3));
  CHECK(p3.runs().size() == 6);
  CHECK(letters_of(p3) == oracle::Letters{0, 1, 0, 1, 0, 1});
  CHECK(word_power(parse_word(a, "z1^2"), Nat(1000000)).runs().size() == 1);
  CHECK(word_power(parse_word(a, "z1^2"), Nat(1000000)).length() == Nat(2000000));
  Limits tight;
  tight.expansion_cap = 5;
  CHECK_THROWS_AS(word_power(zz, Nat(3), tight), CapExceeded);
  CHECK_THROWS_AS(expand(Word::letter(a, 0, Nat(100)), 10), CapExceeded);
}

TEST_CASE("kronecker product matches a dense oracle") {
  const auto n = from_dense({{1, 1}, {0, 1}});
  const auto n2 = kron(n, n);
  CHECK(n2 == from_dense({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
  const auto cube = mat_mul(mat_mul(n2, n2), n2);
  CHECK(cube.at(0, 3) == Nat(9));
  CHECK(mat_pow(n, Nat(7)) == from_dense({{1, 7}, {0, 1}}));
  for (int round = 0; round < 20; ++round) {
    const auto da = oracle::uniform(1, 3), db = oracle::uniform(1, 3);
    std::vector<std::vector<std::uint64_t>> ra(da, std::vector<std::uint64_t>(da)), rb(db, std::vector<std::uint64_t>(db));
    for (auto& r : ra)
      for (auto& x : r) x = oracle::uniform(0, 4);
    for (auto& r : rb)
      for (auto& x : r) x = oracle::uniform(0, 4);
    const auto a = from_dense(ra), b = from_dense(rb);
    CHECK(dense_of(kron(a, b)) == oracle::dense_kron(dense_of(a), dense_of(b)));
    CHECK(dense_of(mat_mul(a, a)) == oracle::dense_mul(dense_of(a), dense_of(a)));
  }
}

TEST_CASE("sparse matrix basics") {
  const auto m = from_dense({{0, 2}, {0, 0}});
  CHECK(m.nnz() == 1);
  CHECK(m.is_upper_triangular());
  CHECK_FALSE(from_dense({{0, 0}, {1, 0}}).is_upper_triangular());
  CHECK(mat_mul(m, m).is_zero());
  CHECK(direct_sum(m, SparseMatrix::identity(1)) == from_dense({{0, 2, 0}, {0, 0, 0}, {0, 0, 1}}));
  CHECK(fingerprint(m) == fingerprint(from_dense({{0, 2}, {0, 0}})));
  CHECK(fingerprint(m) != fingerprint(from_dense({{0, 3}, {0, 0}})));
}

TEST_CASE("morphism application and matrices") {
  const auto a = abc(2);
  const Morphism h(a, a, {parse_word(a, "z1 z2"), parse_word(a, "z2")});
  CHECK(apply(h, parse_word(a, "z1 z1")) == parse_word(a, "z1 z2 z1 z2"));
  CHECK(matrix_of(h) == from_dense({{1, 1}, {0, 1}}));
  CHECK(is_upper_triangular(h));
  CHECK_FALSE(is_upper_triangular(Morphism(a, a, {parse_word(a, "z1"), parse_word(a, "z1")})));
  CHECK(is_zero_morphism(Morphism::zero(a)));
  CHECK(compose(h, Morphism::identity(a)) == h);

  const auto b = make_alphabet({"a", "b"});
  const Morphism k(b, b, {parse_word(b, "b"), parse_word(b, "b")});
  Word w = parse_word(b, "a");
  for (int i = 0; i < 5; ++i) {
    w = apply(k, w);
    CHECK(w == parse_word(b, "b"));
  }
}

TEST_CASE("direct sum of morphisms is block diagonal") {
  const auto a = abc(2);
  const auto b = make_alphabet({"y1", "y2", "y3"});
  const Morphism f(a, a, {parse_word(a, "z1 z2"), parse_word(a, "z2^3")});
  const Morphism g(b, b, {parse_word(b, "y2 y3"), parse_word(b, ""), parse_word(b, "y3")});
  CHECK(matrix_of(direct_sum(f, g)) == direct_sum(matrix_of(f), matrix_of(g)));
}

TEST_CASE("chain composition is lazy and memoized") {
  const auto a = abc(2);
  const Morphism h(a, a, {parse_word(a, "z1 z2"), parse_word(a, "z2")});
  std::vector<const Morphism*> steps(200, &h);
  Chain c(steps);
  const auto img = c.image(0, 0);
  CHECK(parikh(img)[1] == Nat(200));

  const Morphism dbl(a, a, {parse_word(a, "z1 z2 z1"), parse_word(a, "z2")});
  Limits tight;
  tight.expansion_cap = 100;
  Chain big(std::vector<const Morphism*>(40, &dbl), tight);
  CHECK_THROWS_AS(big.image(0, 0), CapExceeded);
  CHECK_THROWS_AS(big.image(0, 0), CapExceeded);
  const auto pv = big.streamed_parikh(parse_word(a, "z1"));
  CHECK(pv[0] == pow(Nat(2), 40));
  CHECK(pv[1] + Nat(1) == pow(Nat(2), 40));
}

TEST_CASE("property: composition is associative and functorial") {
  for (int round = 0; round < 80; ++round) {
    const auto a = abc(oracle::uniform(1, 4));
    const auto f = random_morphism(a, 3), g = random_morphism(a, 3), h = random_morphism(a, 3);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    const auto w = random_word(a, 6);
    CHECK(letters_of(apply(compose(f, g), w)) == oracle::substitute(table_of(g), oracle::substitute(table_of(f), letters_of(w))));
    CHECK(dense_of(matrix_of(compose(f, g))) == oracle::dense_mul(dense_of(matrix_of(f)), dense_of(matrix_of(g))));
    Chain chain({&f, &g, &h});
    CHECK(chain.apply(w) == apply(h, apply(g, apply(f, w))));
    CHECK(chain.streamed_parikh(w) == parikh(chain.apply(w)));
    const auto pf = parikh(apply(f, w));
    const auto cnt = oracle::counts(letters_of(apply(f, w)));
    for (const auto& [l, c] : cnt) CHECK(pf[l] == Nat(c));
  }
}
