#include "lineq/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "lineq/error.hpp"

namespace lineq {

namespace {

bool graded_lex_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return a < b;
}

struct GradedLex {
  bool operator()(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    return graded_lex_less(a, b);
  }
};

using TermMap = std::map<std::vector<std::uint32_t>, Nat, GradedLex>;

Polynomial from_map(std::size_t arity, TermMap&& terms) {
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (auto& [exps, coeff] : terms) {
    if (!coeff.is_zero()) out.push_back({std::move(coeff), exps});
  }
  return Polynomial::from_terms(arity, std::move(out));
}

void require_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) {
    throw InputError("arity mismatch: " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
  }
}

}  // namespace

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
}

Polynomial::Polynomial(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw InputError("polynomial arity must be positive");
}

Polynomial Polynomial::from_terms(std::size_t arity, std::vector<Monomial> terms) {
  Polynomial p(arity);
  for (const auto& m : terms) {
    if (m.exponents.size() != arity) {
      throw InputError("monomial has " + std::to_string(m.exponents.size()) + " exponents, expected " +
                       std::to_string(arity));
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Monomial& a, const Monomial& b) { return graded_lex_less(a.exponents, b.exponents); });
  for (auto& m : terms) {
    if (m.coeff.is_zero()) continue;
    if (!p.monomials_.empty() && p.monomials_.back().exponents == m.exponents) {
      p.monomials_.back().coeff += m.coeff;
    } else {
      p.monomials_.push_back(std::move(m));
    }
  }
  return p;
}

Polynomial Polynomial::constant(std::size_t arity, const Nat& value) {
  return from_terms(arity, {Monomial{value, std::vector<std::uint32_t>(arity, 0)}});
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw InputError("variable index out of range");
  std::vector<std::uint32_t> e(arity, 0);
  e[index] = 1;
  return from_terms(arity, {Monomial{Nat(1), std::move(e)}});
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.degree());
  return d;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  require_same_arity(a, b);
  TermMap terms;
  for (const auto* p : {&a, &b}) {
    for (const auto& m : p->monomials()) terms[m.exponents] += m.coeff;
  }
  return from_map(a.arity(), std::move(terms));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same_arity(a, b);
  TermMap terms;
  std::vector<std::uint32_t> e(a.arity());
  for (const auto& ma : a.monomials()) {
    for (const auto& mb : b.monomials()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ma.exponents[i] + mb.exponents[i];
      terms[e].add_product(ma.coeff, mb.coeff);
    }
  }
  return from_map(a.arity(), std::move(terms));
}

Polynomial poly_compose(const Polynomial& outer, std::span<const Polynomial> args) {
  if (args.size() != outer.arity()) {
    throw InputError("compose: expected " + std::to_string(outer.arity()) + " arguments, got " +
                     std::to_string(args.size()));
  }
  const std::size_t inner = args.front().arity();
  for (const auto& a : args) {
    if (a.arity() != inner) throw InputError("compose: arguments have different arities");
  }
  // powers[i][k] = args[i]^k, grown on demand
  std::vector<std::vector<Polynomial>> powers(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) powers[i].push_back(Polynomial::constant(inner, Nat(1)));
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    while (powers[i].size() <= k) powers[i].push_back(poly_mul(powers[i].back(), args[i]));
    return powers[i][k];
  };

  Polynomial result(inner);
  for (const auto& m : outer.monomials()) {
    Polynomial term = Polynomial::constant(inner, m.coeff);
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (m.exponents[i] > 0) term = poly_mul(term, power_of(i, m.exponents[i]));
    }
    result = poly_add(result, term);
  }
  return result;
}

Nat poly_eval(const Polynomial& p, std::span<const Nat> point) {
  if (point.size() != p.arity()) {
    throw InputError("eval: point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(p.arity()));
  }
  for (const auto& x : point) {
    if (x.is_zero()) throw InputError("eval: point coordinates must be positive");
  }
  std::vector<std::vector<Nat>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) powers[i].emplace_back(1);
  Nat total;
  for (const auto& m : p.monomials()) {
    Nat term = m.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      auto& pw = powers[i];
      while (pw.size() <= m.exponents[i]) pw.push_back(pw.back() * point[i]);
      term *= pw[m.exponents[i]];
    }
    total += term;
  }
  return total;
}

Polynomial injective_tupling(std::size_t k) {
  if (k < 2) throw InputError("injective tupling needs at least 2 arguments");
  // pair(x, y) = (x + y)^2 + x in two variables
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const auto s = x + y;
  const Polynomial pair = s * s + x;

  Polynomial acc = poly_compose(pair, std::vector{Polynomial::variable(k, 0), Polynomial::variable(k, 1)});
  for (std::size_t i = 2; i < k; ++i) {
    acc = poly_compose(pair, std::vector{acc, Polynomial::variable(k, i)});
  }
  return acc;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& m : p.monomials()) {
    if (!first) out << " + ";
    first = false;
    const bool constant = m.degree() == 0;
    if (constant || !m.coeff.is_one()) {
      out << m.coeff.to_string();
      if (!constant) out << '*';
    }
    bool first_var = true;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (!first_var) out << '*';
      first_var = false;
      out << 'x' << (i + 1);
      if (m.exponents[i] > 1) out << '^' << m.exponents[i];
    }
  }
  return out.str();
}

}  // namespace lineq
