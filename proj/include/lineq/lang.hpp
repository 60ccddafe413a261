#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lineq/error.hpp"
#include "lineq/nat.hpp"

namespace lineq {

/// Letters are positions in an alphabet; the alphabet order is index order.
using Letter = std::uint32_t;

/// Ordered alphabet partitioned into consecutive nonempty levels.
///
/// Level indices are 0-based here; level i holds letters
/// [level_begin(i), level_end(i)).
class Alphabet {
 public:
  /// Throws InputError on duplicate or malformed names, empty levels, or when
  /// the level sizes do not sum to the number of names.
  Alphabet(std::vector<std::string> names, std::vector<std::size_t> level_sizes);

  std::size_t size() const { return names_.size(); }
  std::size_t levels() const { return starts_.size() - 1; }
  Letter level_begin(std::size_t level) const { return starts_.at(level); }
  Letter level_end(std::size_t level) const { return starts_.at(level + 1); }
  std::size_t level_size(std::size_t level) const { return level_end(level) - level_begin(level); }
  std::size_t level_of(Letter letter) const { return level_of_.at(letter); }
  std::vector<std::size_t> level_sizes() const;

  const std::string& name(Letter letter) const { return names_.at(letter); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(std::string_view name) const;
  Letter last() const { return static_cast<Letter>(names_.size() - 1); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.starts_ == b.starts_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Letter> starts_;
  std::vector<std::uint32_t> level_of_;
  std::unordered_map<std::string, Letter> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<std::size_t> level_sizes);
/// Single-level alphabet.
AlphabetPtr make_alphabet(std::vector<std::string> names);

/// Same object or structurally equal.
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

struct Run {
  Letter letter;
  Nat count;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Run-length encoded word. Runs have positive counts and adjacent runs carry
/// distinct letters, so the representation of a word is unique.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);
  static Word letter(AlphabetPtr alphabet, Letter letter, Nat count = Nat(1));
  /// Normalizes: merges equal neighbours and drops zero-count runs.
  static Word from_runs(AlphabetPtr alphabet, std::vector<Run> runs);
  /// One letter per entry.
  static Word from_letters(AlphabetPtr alphabet, std::span<const Letter> letters);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  Nat length() const;

  void append(Letter letter, const Nat& count);
  /// Appends `other`, which must share the alphabet.
  void append(const Word& other);
  /// Appends other^count. Throws CapExceeded if the result would hold more
  /// than `cap` runs.
  void append_power(const Word& other, const Nat& count, std::uint64_t cap);

  /// Letters occurring in the word, ascending.
  std::vector<Letter> support() const;

  friend bool operator==(const Word& a, const Word& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<Run> runs_;
};

Word word_concat(const Word& a, const Word& b);
Word word_power(const Word& a, const Nat& k, const Limits& limits = {});

/// Materializes the word one letter per entry, refusing words longer than
/// `cap` letters.
std::vector<Letter> expand(const Word& w, std::uint64_t cap);

/// Letter-count vector; zero entries are never stored.
class ParikhVector {
 public:
  ParikhVector() = default;
  /// Entries must be sorted by letter with positive counts.
  explicit ParikhVector(std::vector<std::pair<Letter, Nat>> entries);

  const std::vector<std::pair<Letter, Nat>>& entries() const { return entries_; }
  Nat operator[](Letter letter) const;
  Nat total() const;
  bool empty() const { return entries_.empty(); }

  friend ParikhVector operator+(const ParikhVector& a, const ParikhVector& b);
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

 private:
  std::vector<std::pair<Letter, Nat>> entries_;
};

ParikhVector parikh(const Word& w);

/// Text form: space-separated letter names with ^count on runs longer than
/// one, e.g. "z1^2 z2 e^179". The empty word renders as "".
std::string to_text(const Word& w);
/// Accepts the text form; repeated letters need not be merged. Throws
/// InputError on unknown letters or malformed counts.
Word parse_word(const AlphabetPtr& alphabet, std::string_view text);

}  // namespace lineq
