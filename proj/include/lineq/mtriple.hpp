#pragma once

#include <span>
#include <string>
#include <vector>

#include "lineq/morph.hpp"
#include "lineq/poly.hpp"

namespace lineq {

/// Leveled alphabet with two upper-triangular endomorphisms: g1 keeps each
/// level, g2 moves level i to level i+1 and erases after two applications.
/// Level t+1 is the single last letter e, erased by both morphisms.
struct MTriple {
  AlphabetPtr alphabet;
  Morphism g1;
  Morphism g2;
  std::size_t dimension = 0;

  Letter last_letter() const { return alphabet->last(); }
};

/// An M-triple together with a level-1 witness word w such that
/// w g1^{n1} g2 g1^{n2} g2 ... g1^{nt} g2 = e^{f(n1, ..., nt)}.
struct ComputableMap {
  MTriple triple;
  Word witness;
};

struct ValidationCheck {
  std::string condition;  // "partition", "(i)", ..., "(v)", "triangular"
  bool passed = true;
  /// Names of the violating letters.
  std::vector<std::string> violators;
  /// Human-readable description of the first violation.
  std::string example;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  std::vector<std::string> failed_conditions() const;
  const ValidationCheck& check(std::string_view condition) const;
};

/// Checks every defining condition of an M-triple of dimension t against the
/// level partition carried by `alphabet`. Never throws on a bad candidate;
/// failures are reported per condition.
ValidationReport validate_mtriple(const AlphabetPtr& alphabet, const Morphism& g1, const Morphism& g2,
                                  std::size_t t);
inline ValidationReport validate_mtriple(const MTriple& m) {
  return validate_mtriple(m.alphabet, m.g1, m.g2, m.dimension);
}

/// Ordered alphabet and endomorphism with matrix N^{(x)k}, N = [[1,1],[0,1]].
struct PowerMorphism {
  AlphabetPtr alphabet;
  Morphism h;
};

/// Letters z1 < ... < z_{2^k}; the image of a letter lists, in increasing
/// order, every letter whose Kronecker index is a bitwise superset of its own.
PowerMorphism kronecker_power_morphism(std::size_t k, const Limits& limits = {});
/// a -> b, b -> b: the first letter reaches the last exactly once.
PowerMorphism constant_exponent_morphism();

/// M-triple computing x1^{a1} ... xt^{at} with witness a1 (the first letter).
/// `prefix` is prepended to every letter name except e.
ComputableMap monomial_mtriple(std::span<const std::uint32_t> exponents, const Limits& limits = {},
                               const std::string& prefix = "");

struct MTripleSum {
  MTriple triple;
  Word left_witness;
  Word right_witness;
};

/// Disjoint union of F and G with their last letters merged into a fresh e.
/// Level i of the sum lists F's level-i letters before G's. Letters are
/// renamed with "L." / "R." prefixes if the two alphabets share a name.
MTripleSum mtriple_direct_sum(const ComputableMap& f, const ComputableMap& g, const Limits& limits = {});

/// Computes alpha*f + beta*g on F (+) G with witness u^alpha v^beta.
ComputableMap linear_combination(const ComputableMap& f, const ComputableMap& g, const Nat& alpha,
                                 const Nat& beta, const Limits& limits = {});

/// Folds the monomial M-triples of p, in canonical monomial order, with
/// coefficients entering as witness repetitions.
ComputableMap compile_polynomial(const Polynomial& p, const Limits& limits = {});

/// Number of letters compile_polynomial(p) would use.
std::uint64_t compiled_alphabet_size(const Polynomial& p);

enum class ComputeLevel { word, matrix };

struct ComputeResult {
  Nat value;
  ComputeLevel level = ComputeLevel::word;
};

/// Runs w g1^{n1} g2 ... g1^{nt} g2 on words, left to right. When a word
/// would exceed the expansion cap the computation is redone on Parikh
/// vectors with the matrices of g1 and g2.
ComputeResult mtriple_compute(const ComputableMap& c, std::span<const Nat> point, const Limits& limits = {});
/// Matrix-level route only: parikh(w) M1^{n1} M2 ... M1^{nt} M2, read at e.
Nat mtriple_compute_matrix(const ComputableMap& c, std::span<const Nat> point);

}  // namespace lineq
