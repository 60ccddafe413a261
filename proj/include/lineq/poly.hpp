#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lineq/nat.hpp"

namespace lineq {

struct Monomial {
  Nat coeff;
  std::vector<std::uint32_t> exponents;

  std::uint64_t degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Multivariate polynomial with nonnegative integer coefficients.
///
/// Monomials are kept in graded lexicographic order (total degree first, then
/// the exponent vector lexicographically, both ascending), with no zero
/// coefficients and no repeated exponent vectors. Two polynomials are equal
/// iff their canonical forms are field-wise equal.
class Polynomial {
 public:
  /// The zero polynomial in `arity` variables. Throws InputError for arity 0.
  explicit Polynomial(std::size_t arity);

  /// Canonicalizes `terms`: merges like terms and drops zero coefficients.
  static Polynomial from_terms(std::size_t arity, std::vector<Monomial> terms);
  static Polynomial constant(std::size_t arity, const Nat& value);
  /// The variable x_{index+1}.
  static Polynomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return arity_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  std::uint64_t degree() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t arity_;
  std::vector<Monomial> monomials_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Substitutes args[i] for x_{i+1} in `outer` and expands.
Polynomial poly_compose(const Polynomial& outer, std::span<const Polynomial> args);

/// Exact value at a point with positive coordinates.
Nat poly_eval(const Polynomial& p, std::span<const Nat> point);

/// The k-fold nesting of (x + y)^2 + x: C_2 = (x1 + x2)^2 + x1 and
/// C_k = C_2(C_{k-1}(x1, ..., x_{k-1}), x_k). Injective on positive k-tuples.
Polynomial injective_tupling(std::size_t k);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return poly_add(a, b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

/// Human-readable rendering, e.g. "x1^2 + 2*x2 + 3".
std::string to_string(const Polynomial& p);

}  // namespace lineq
