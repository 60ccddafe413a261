#include <set>

#include "doctest.h"
#include "lineq/error.hpp"
#include "lineq/poly.hpp"
#include "oracle.hpp"

using namespace lineq;

namespace {

Polynomial P(std::size_t arity, std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> terms) {
  std::vector<Monomial> ms;
  for (auto& [c, e] : terms) ms.push_back({Nat(c), e});
  return Polynomial::from_terms(arity, std::move(ms));
}

std::vector<oracle::Term> terms_of(const Polynomial& p) {
  std::vector<oracle::Term> out;
  for (const auto& m : p.monomials()) out.push_back({m.coeff.to_u64(), {m.exponents.begin(), m.exponents.end()}});
  return out;
}

Nat ev(const Polynomial& p, std::vector<std::uint64_t> pt) {
  std::vector<Nat> v(pt.begin(), pt.end());
  return poly_eval(p, v);
}

mpz_class oev(const std::vector<oracle::Term>& terms, std::vector<std::uint64_t> pt) {
  std::vector<mpz_class> v;
  for (auto x : pt) v.emplace_back(static_cast<unsigned long>(x));
  return oracle::eval(terms, v);
}

}  // namespace

TEST_CASE("nat small and big arithmetic agree with gmp") {
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::uniform(0, ~0ULL);
    const auto b = oracle::uniform(0, ~0ULL);
    const mpz_class ma = mpz_class(std::to_string(a)), mb = mpz_class(std::to_string(b));
    CHECK((Nat(a) + Nat(b)).to_string() == mpz_class(ma + mb).get_str());
    CHECK((Nat(a) * Nat(b)).to_string() == mpz_class(ma * mb).get_str());
    Nat acc(a);
    acc.add_product(Nat(b), Nat(a));
    CHECK(acc.to_string() == mpz_class(ma + mb * ma).get_str());
    CHECK((Nat(a) < Nat(b)) == (a < b));
  }
  CHECK(pow(Nat(3), 40).to_string() == oracle::ipow(3, 40).get_str());
  CHECK(Nat::from_string("18446744073709551616").to_string() == "18446744073709551616");
  CHECK(Nat::from_string("12") == Nat(12));
  CHECK(Nat::from_string("18446744073709551615").fits_u64());
  CHECK_FALSE(Nat::from_string("18446744073709551616").fits_u64());
  CHECK_THROWS_AS(Nat::from_string("-1"), InputError);
  CHECK_THROWS_AS(Nat::from_string(""), InputError);
  CHECK_THROWS_AS(Nat::from_string("12a"), InputError);
}

TEST_CASE("polynomial construction normalizes") {
  const auto p = P(2, {{1, {1, 0}}, {0, {0, 1}}, {2, {1, 0}}});
  REQUIRE(p.monomials().size() == 1);
  CHECK(p.monomials()[0].coeff == Nat(3));
  CHECK(P(2, {}).is_zero());
  CHECK_THROWS_AS(P(2, {{1, {1}}}), InputError);
  CHECK(Polynomial::variable(3, 1) == P(3, {{1, {0, 1, 0}}}));
  CHECK(Polynomial::constant(2, Nat(5)).degree() == 0);
}

TEST_CASE("addition") {
  const auto a = P(2, {{1, {2, 0}}, {1, {0, 1}}});
  const auto b = P(2, {{1, {0, 1}}, {3, {0, 0}}});
  const auto expected = P(2, {{1, {2, 0}}, {2, {0, 1}}, {3, {0, 0}}});
  CHECK(a + b == expected);
  CHECK(a + b == b + a);
  for (int i = 0; i < 5; ++i) {
    std::vector<std::uint64_t> pt{oracle::uniform(1, 1000), oracle::uniform(1, 1000)};
    CHECK(ev(a + b, pt).to_string() == mpz_class(oev(terms_of(a), pt) + oev(terms_of(b), pt)).get_str());
  }
}

TEST_CASE("multiplication") {
  const auto s = P(2, {{1, {1, 0}}, {1, {0, 1}}});
  CHECK(s * s == P(2, {{1, {2, 0}}, {2, {1, 1}}, {1, {0, 2}}}));
  for (int i = 0; i < 5; ++i) {
    std::vector<std::uint64_t> pt{oracle::uniform(1, 1u << 20), oracle::uniform(1, 1u << 20)};
    const auto v = oev(terms_of(s), pt);
    CHECK(ev(s * s, pt).to_string() == mpz_class(v * v).get_str());
  }
}

TEST_CASE("composition") {
  const auto sq = P(1, {{1, {2}}});
  const std::vector<Polynomial> args{P(1, {{1, {1}}, {1, {0}}})};
  CHECK(poly_compose(sq, args) == P(1, {{1, {2}}, {2, {1}}, {1, {0}}}));

  const auto c2 = injective_tupling(2);
  const std::vector<Polynomial> xy{Polynomial::variable(2, 0), Polynomial::variable(2, 1)};
  CHECK(poly_compose(c2, xy) == P(2, {{1, {2, 0}}, {2, {1, 1}}, {1, {0, 2}}, {1, {1, 0}}}));
  CHECK_THROWS_AS(poly_compose(c2, std::vector<Polynomial>{Polynomial::variable(2, 0)}), InputError);
}

TEST_CASE("evaluation") {
  CHECK(ev(P(2, {{1, {2, 1}}}), {3, 4}) == Nat(36));
  CHECK(ev(injective_tupling(2), {1, 1}) == Nat(5));
  CHECK(ev(P(1, {{1, {70}}}), {2}).to_string() == oracle::ipow(2, 70).get_str());
  CHECK_THROWS_AS(ev(P(2, {{1, {1, 1}}}), {1}), InputError);
}

TEST_CASE("injective tupling values") {
  CHECK(ev(injective_tupling(2), {1, 2}) == Nat(10));
  CHECK(ev(injective_tupling(3), {1, 2, 3}) == Nat(179));
  CHECK_THROWS_AS(injective_tupling(1), InputError);
  CHECK_THROWS_AS(ev(injective_tupling(2), {0, 1}), InputError);
}

TEST_CASE("injective tupling has no collisions on small boxes") {
  std::set<std::string> seen2;
  const auto c2 = injective_tupling(2);
  for (std::uint64_t a = 1; a <= 25; ++a)
    for (std::uint64_t b = 1; b <= 25; ++b) seen2.insert(ev(c2, {a, b}).to_string());
  CHECK(seen2.size() == 625);

  std::set<std::string> seen3;
  const auto c3 = injective_tupling(3);
  for (std::uint64_t a = 1; a <= 12; ++a)
    for (std::uint64_t b = 1; b <= 12; ++b)
      for (std::uint64_t c = 1; c <= 12; ++c) seen3.insert(ev(c3, {a, b, c}).to_string());
  CHECK(seen3.size() == 1728);
}

TEST_CASE("property: ring laws hold pointwise on random polynomials") {
  const auto random_poly = [](std::size_t arity) {
    std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> ts;
    const auto n = oracle::uniform(0, 4);
    for (std::uint64_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> e;
      for (std::size_t j = 0; j < arity; ++j) e.push_back(static_cast<std::uint32_t>(oracle::uniform(0, 3)));
      ts.push_back({oracle::uniform(0, 9), e});
    }
    return P(arity, ts);
  };
  for (int round = 0; round < 60; ++round) {
    const std::size_t k = oracle::uniform(1, 3);
    const auto a = random_poly(k), b = random_poly(k), c = random_poly(k);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    std::vector<std::uint64_t> pt;
    for (std::size_t j = 0; j < k; ++j) pt.push_back(oracle::uniform(1, 50));
    CHECK(ev(a * b + c, pt).to_string() ==
          mpz_class(oev(terms_of(a), pt) * oev(terms_of(b), pt) + oev(terms_of(c), pt)).get_str());
  }
}
