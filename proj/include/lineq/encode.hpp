#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lineq/generators.hpp"
#include "lineq/matrix.hpp"
#include "lineq/morph.hpp"
#include "lineq/poly.hpp"

namespace lineq {

struct LetterRange {
  Letter begin = 0;
  Letter end = 0;
  bool contains(Letter l) const { return l >= begin && l < end; }
  std::size_t size() const { return end - begin; }
  friend bool operator==(const LetterRange&, const LetterRange&) = default;
};

/// The alphabet D = {c0 < c1 < c2 < c3} followed by the direct sum of the
/// M-triples computing p1 and q1, with the generators g1 and g2.
///
/// Levels of D: level 1 holds c0..c3 and both level-1 blocks, levels 2..t the
/// A and B blocks, level t+1 the letter e. A_i and B_i are contiguous.
struct Encoder {
  static constexpr Letter c0 = 0;
  static constexpr Letter c1 = 1;
  static constexpr Letter c2 = 2;
  static constexpr Letter c3 = 3;

  std::size_t t = 0;
  Polynomial p{1};
  Polynomial q{1};
  Polynomial p1{1};
  Polynomial q1{1};
  AlphabetPtr alphabet;
  Morphism g1;
  Morphism g2;
  Word u;
  Word v;
  /// a_blocks[i] is A_{i+1}, for i < t.
  std::vector<LetterRange> a_blocks;
  std::vector<LetterRange> b_blocks;

  Letter e() const { return alphabet->last(); }
  /// 1 -> g1, 2 -> g2
  const Morphism& generator(std::uint8_t symbol) const { return symbol == 1 ? g1 : g2; }
};

/// p1 = C(x1..xt, p) with C the (t+1)-fold injective tupling.
Polynomial tupled(const Polynomial& p);

/// Throws InputError for zero polynomials, arity mismatch or arity < 2 and
/// BudgetExceeded when D would exceed the alphabet budget.
Encoder build_encoder(const Polynomial& p, const Polynomial& q, const Limits& limits = {});

/// Structural invariants of an encoder (control letter tables, block layout,
/// level discipline of the blocks, erasure of e, triangularity, g1 g2^2 = o,
/// and p1/q1 matching p/q). Returns one message per violation.
std::vector<std::string> check_encoder(const Encoder& enc);

/// Steps of the chain for a generator word, in application order.
std::vector<const Morphism*> chain_steps(const Encoder& enc, const GeneratorWord& w);

/// A composed element of H. The morphism is absent when some image would
/// exceed the expansion cap; the matrix is always present.
struct MorphismHandle {
  GeneratorWord word;
  std::optional<Morphism> morphism;
  SparseMatrix matrix;
  bool matrix_backed() const { return !morphism.has_value(); }
};

MorphismHandle evaluate(const Encoder& enc, const GeneratorWord& w, const Limits& limits = {});
MorphismHandle prod(const Encoder& enc, std::span<const std::uint64_t> ns, const Limits& limits = {});
MorphismHandle f_ns(const Encoder& enc, std::uint64_t n, std::uint64_t s, const Limits& limits = {});
MorphismHandle g_ns(const Encoder& enc, std::uint64_t n, std::uint64_t s, const Limits& limits = {});

/// Letters occurring in (letter) w, computed by propagating letter sets.
std::vector<Letter> support_after(const Encoder& enc, Letter start, const GeneratorWord& w);

struct SuiteCheck {
  std::string claim;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool ok() const;
};

/// All four claims about c0 g2^2 Prod(n1..na) g1^j and its g2^3 analogue, for
/// a <= t, 1 <= ni <= bound and j <= bound.
SuiteReport lemma5_suite(const Encoder& enc, std::uint64_t bound, const Limits& limits = {});
/// g1 h1 g2^2 h2 = o for every h1, h2 of length at most max_len.
SuiteReport lemma6_suite(const Encoder& enc, std::size_t max_len, const Limits& limits = {});

}  // namespace lineq
