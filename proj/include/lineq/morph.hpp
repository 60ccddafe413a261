#pragma once

#include <memory>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lineq/lang.hpp"
#include "lineq/matrix.hpp"

namespace lineq {

/// Free-monoid morphism given by the image of each domain letter.
///
/// Morphisms act on the right: apply(f, w) is wf, and compose(f, g) is the
/// product fg that applies f first.
class Morphism {
 public:
  Morphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images);

  static Morphism identity(AlphabetPtr alphabet);
  /// The morphism o erasing every letter.
  static Morphism zero(AlphabetPtr alphabet);

  const AlphabetPtr& domain() const { return domain_; }
  const AlphabetPtr& codomain() const { return codomain_; }
  const Word& image(Letter letter) const { return images_.at(letter); }
  const std::vector<Word>& images() const { return images_; }
  bool is_endomorphism() const { return same_alphabet(domain_, codomain_); }

  /// Extensional equality on generators.
  friend bool operator==(const Morphism& a, const Morphism& b);

 private:
  AlphabetPtr domain_;
  AlphabetPtr codomain_;
  std::vector<Word> images_;
};

Word apply(const Morphism& m, const Word& w, const Limits& limits = {});
Morphism compose(const Morphism& f, const Morphism& g, const Limits& limits = {});

/// f (+) g over the union of the two alphabets, f's letters first. Levels of
/// the result are f's levels followed by g's.
Morphism direct_sum(const Morphism& f, const Morphism& g);

/// The matrix whose row i is the Parikh vector of the image of letter i.
SparseMatrix matrix_of(const Morphism& g);
bool is_upper_triangular(const Morphism& g);
bool is_zero_morphism(const Morphism& g);

/// Evaluates products m_0 m_1 ... m_{k-1} lazily from the right.
///
/// The image of a letter under a suffix m_i ... m_{k-1} is computed once and
/// memoized, so only letters actually reached are ever expanded. Chains whose
/// tail erases or collapses most letters stay cheap even when a prefix alone
/// would blow up.
class Chain {
 public:
  explicit Chain(std::vector<const Morphism*> steps, Limits limits = {});

  /// w m_0 ... m_{k-1}. Throws CapExceeded when a materialized word would hold
  /// more than limits.expansion_cap runs.
  Word apply(const Word& w);
  /// letter m_pos ... m_{k-1}
  const Word& image(Letter letter, std::size_t pos);
  /// The composed morphism, evaluated on every domain letter.
  Morphism compose();

  /// Parikh vector of w m_0 ... m_{k-1}, computed by expanding the derivation
  /// tree letter by letter without materializing the word. Exponential in
  /// the chain length; meant for checks where the word itself is too long.
  ParikhVector streamed_parikh(const Word& w) const;

  const AlphabetPtr& domain() const;
  const AlphabetPtr& codomain() const;

 private:
  std::vector<const Morphism*> steps_;
  Limits limits_;
  std::vector<std::unordered_map<Letter, Word>> memo_;
  std::vector<std::unordered_set<Letter>> over_cap_;
};

}  // namespace lineq
