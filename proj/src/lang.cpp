#include "lineq/lang.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lineq {

namespace {

bool valid_letter_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '^' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '"';
  });
}

void require_same(const AlphabetPtr& a, const AlphabetPtr& b, const char* what) {
  if (!same_alphabet(a, b)) throw InputError(std::string(what) + ": alphabet mismatch");
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names, std::vector<std::size_t> level_sizes)
    : names_(std::move(names)) {
  if (names_.empty()) throw InputError("alphabet must be nonempty");
  if (level_sizes.empty()) throw InputError("alphabet needs at least one level");
  starts_.push_back(0);
  std::size_t total = 0;
  for (std::size_t s : level_sizes) {
    if (s == 0) throw InputError("alphabet levels must be nonempty");
    total += s;
    starts_.push_back(static_cast<Letter>(total));
  }
  if (total != names_.size()) {
    throw InputError("level sizes cover " + std::to_string(total) + " letters, alphabet has " +
                     std::to_string(names_.size()));
  }
  level_of_.resize(names_.size());
  for (std::size_t lv = 0; lv + 1 < starts_.size(); ++lv) {
    for (Letter l = starts_[lv]; l < starts_[lv + 1]; ++l) level_of_[l] = static_cast<std::uint32_t>(lv);
  }
  index_.reserve(names_.size());
  for (Letter i = 0; i < names_.size(); ++i) {
    if (!valid_letter_name(names_[i])) throw InputError("invalid letter name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second) throw InputError("duplicate letter name '" + names_[i] + "'");
  }
}

std::vector<std::size_t> Alphabet::level_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < levels(); ++i) out.push_back(level_size(i));
  return out;
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<std::size_t> level_sizes) {
  return std::make_shared<const Alphabet>(std::move(names), std::move(level_sizes));
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  const std::size_t n = names.size();
  return make_alphabet(std::move(names), {n});
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw InputError("word without alphabet");
}

Word Word::letter(AlphabetPtr alphabet, Letter letter, Nat count) {
  Word w(std::move(alphabet));
  w.append(letter, count);
  return w;
}

Word Word::from_runs(AlphabetPtr alphabet, std::vector<Run> runs) {
  Word w(std::move(alphabet));
  for (auto& r : runs) w.append(r.letter, r.count);
  return w;
}

Word Word::from_letters(AlphabetPtr alphabet, std::span<const Letter> letters) {
  Word w(std::move(alphabet));
  for (Letter l : letters) w.append(l, Nat(1));
  return w;
}

Nat Word::length() const {
  Nat n;
  for (const auto& r : runs_) n += r.count;
  return n;
}

void Word::append(Letter letter, const Nat& count) {
  if (letter >= alphabet_->size()) throw InputError("letter outside alphabet");
  if (count.is_zero()) return;
  if (!runs_.empty() && runs_.back().letter == letter) {
    runs_.back().count += count;
  } else {
    runs_.push_back({letter, count});
  }
}

void Word::append(const Word& other) {
  require_same(alphabet_, other.alphabet_, "concat");
  if (other.runs_.empty()) return;
  auto it = other.runs_.begin();
  if (!runs_.empty() && runs_.back().letter == it->letter) {
    runs_.back().count += it->count;
    ++it;
  }
  runs_.insert(runs_.end(), it, other.runs_.end());
}

void Word::append_power(const Word& other, const Nat& count, std::uint64_t cap) {
  require_same(alphabet_, other.alphabet_, "power");
  if (other.runs_.empty() || count.is_zero()) return;
  if (other.runs_.size() == 1) {
    append(other.runs_.front().letter, other.runs_.front().count * count);
    return;
  }
  const std::uint64_t r = other.runs_.size();
  const std::uint64_t per_copy = other.runs_.front().letter == other.runs_.back().letter ? r - 1 : r;
  if (!count.fits_u64() || count.to_u64() > cap / per_copy ||
      runs_.size() + count.to_u64() * per_copy > cap + 1) {
    throw CapExceeded("word power with " + count.to_string() + " copies of a " + std::to_string(r) +
                      "-run word exceeds the expansion cap of " + std::to_string(cap) + " runs");
  }
  const std::uint64_t k = count.to_u64();
  for (std::uint64_t i = 0; i < k; ++i) append(other);
}

std::vector<Letter> Word::support() const {
  std::vector<Letter> out;
  out.reserve(runs_.size());
  for (const auto& r : runs_) out.push_back(r.letter);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool operator==(const Word& a, const Word& b) {
  return a.runs_ == b.runs_ && same_alphabet(a.alphabet_, b.alphabet_);
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word word_power(const Word& a, const Nat& k, const Limits& limits) {
  Word out(a.alphabet());
  out.append_power(a, k, limits.expansion_cap);
  return out;
}

std::vector<Letter> expand(const Word& w, std::uint64_t cap) {
  const Nat len = w.length();
  if (!len.fits_u64() || len.to_u64() > cap) {
    throw CapExceeded("expanding a word of length " + len.to_string() + " exceeds the cap of " +
                      std::to_string(cap) + " letters");
  }
  std::vector<Letter> out;
  out.reserve(len.to_u64());
  for (const auto& r : w.runs()) out.insert(out.end(), r.count.to_u64(), r.letter);
  return out;
}

// ---------------------------------------------------------------------------

ParikhVector::ParikhVector(std::vector<std::pair<Letter, Nat>> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].second.is_zero()) throw InputError("Parikh vector with zero entry");
    if (i > 0 && entries_[i - 1].first >= entries_[i].first) throw InputError("Parikh vector not sorted");
  }
}

Nat ParikhVector::operator[](Letter letter) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), letter,
                             [](const auto& e, Letter l) { return e.first < l; });
  if (it != entries_.end() && it->first == letter) return it->second;
  return Nat(0);
}

Nat ParikhVector::total() const {
  Nat n;
  for (const auto& e : entries_) n += e.second;
  return n;
}

ParikhVector operator+(const ParikhVector& a, const ParikhVector& b) {
  std::vector<std::pair<Letter, Nat>> out;
  out.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return ParikhVector(std::move(out));
}

ParikhVector parikh(const Word& w) {
  std::map<Letter, Nat> counts;
  for (const auto& r : w.runs()) counts[r.letter] += r.count;
  return ParikhVector({counts.begin(), counts.end()});
}

std::string to_text(const Word& w) {
  std::string out;
  for (const auto& r : w.runs()) {
    if (!out.empty()) out += ' ';
    out += w.alphabet()->name(r.letter);
    if (!r.count.is_one()) {
      out += '^';
      out += r.count.to_string();
    }
  }
  return out;
}

Word parse_word(const AlphabetPtr& alphabet, std::string_view text) {
  Word w(alphabet);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n') ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    Nat count(1);
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      count = Nat::from_string(token.substr(caret + 1));
      token = token.substr(0, caret);
    }
    auto letter = alphabet->find(token);
    if (!letter) throw InputError("unknown letter '" + std::string(token) + "'");
    w.append(*letter, count);
  }
  return w;
}

}  // namespace lineq
