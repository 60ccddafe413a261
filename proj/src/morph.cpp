#include "lineq/morph.hpp"

#include <algorithm>


namespace lineq {

Morphism::Morphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (!domain_ || !codomain_) throw InputError("morphism without alphabet");
  if (images_.size() != domain_->size()) {
    throw InputError("morphism has " + std::to_string(images_.size()) + " images for " +
                     std::to_string(domain_->size()) + " letters");
  }
  for (const auto& w : images_) {
    if (!same_alphabet(w.alphabet(), codomain_)) throw InputError("morphism image over a foreign alphabet");
  }
}

Morphism Morphism::identity(AlphabetPtr alphabet) {
  std::vector<Word> images;
  images.reserve(alphabet->size());
  for (Letter l = 0; l < alphabet->size(); ++l) images.push_back(Word::letter(alphabet, l));
  return Morphism(alphabet, alphabet, std::move(images));
}

Morphism Morphism::zero(AlphabetPtr alphabet) {
  std::vector<Word> images(alphabet->size(), Word(alphabet));
  return Morphism(alphabet, alphabet, std::move(images));
}

bool operator==(const Morphism& a, const Morphism& b) {
  return same_alphabet(a.domain_, b.domain_) && same_alphabet(a.codomain_, b.codomain_) &&
         a.images_ == b.images_;
}

Word apply(const Morphism& m, const Word& w, const Limits& limits) {
  return Chain({&m}, limits).apply(w);
}

Morphism compose(const Morphism& f, const Morphism& g, const Limits& limits) {
  return Chain({&f, &g}, limits).compose();
}

Morphism direct_sum(const Morphism& f, const Morphism& g) {
  if (!f.is_endomorphism() || !g.is_endomorphism()) throw InputError("direct sum needs endomorphisms");
  const auto& x = *f.domain();
  const auto& y = *g.domain();
  std::vector<std::string> names = x.names();
  for (const auto& n : y.names()) {
    if (x.find(n)) throw InputError("direct sum of alphabets sharing letter '" + n + "'");
    names.push_back(n);
  }
  auto levels = x.level_sizes();
  for (auto s : y.level_sizes()) levels.push_back(s);
  auto z = make_alphabet(std::move(names), std::move(levels));

  const auto offset = static_cast<Letter>(x.size());
  std::vector<Word> images;
  images.reserve(z->size());
  for (const auto& img : f.images()) {
    Word w(z);
    for (const auto& r : img.runs()) w.append(r.letter, r.count);
    images.push_back(std::move(w));
  }
  for (const auto& img : g.images()) {
    Word w(z);
    for (const auto& r : img.runs()) w.append(r.letter + offset, r.count);
    images.push_back(std::move(w));
  }
  return Morphism(z, z, std::move(images));
}

SparseMatrix matrix_of(const Morphism& g) {
  if (!g.is_endomorphism()) throw InputError("matrix_of needs an endomorphism");
  std::vector<SparseRow> rows;
  rows.reserve(g.domain()->size());
  for (const auto& img : g.images()) {
    SparseRow row;
    const ParikhVector pv = parikh(img);
    for (const auto& [letter, count] : pv.entries()) row.push_back({letter, count});
    rows.push_back(std::move(row));
  }
  return SparseMatrix::from_rows(std::move(rows));
}

bool is_upper_triangular(const Morphism& g) {
  if (!g.is_endomorphism()) return false;
  for (Letter l = 0; l < g.domain()->size(); ++l) {
    for (const auto& r : g.image(l).runs()) {
      if (r.letter < l) return false;
    }
  }
  return true;
}

bool is_zero_morphism(const Morphism& g) {
  for (const auto& img : g.images()) {
    if (!img.empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Chain::Chain(std::vector<const Morphism*> steps, Limits limits)
    : steps_(std::move(steps)), limits_(limits), memo_(steps_.size()), over_cap_(steps_.size()) {
  if (steps_.empty()) throw InputError("empty morphism chain");
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    if (!same_alphabet(steps_[i]->codomain(), steps_[i + 1]->domain())) {
      throw InputError("composition: codomain of step " + std::to_string(i) + " is not the domain of the next");
    }
  }
}

const AlphabetPtr& Chain::domain() const { return steps_.front()->domain(); }
const AlphabetPtr& Chain::codomain() const { return steps_.back()->codomain(); }

const Word& Chain::image(Letter letter, std::size_t pos) {
  auto& memo = memo_.at(pos);
  if (auto it = memo.find(letter); it != memo.end()) return it->second;
  const auto too_long = [&] {
    over_cap_[pos].insert(letter);
    return CapExceeded("image of letter '" + steps_[pos]->domain()->name(letter) + "' exceeds the expansion cap of " +
                       std::to_string(limits_.expansion_cap) + " runs");
  };
  if (over_cap_[pos].count(letter)) throw too_long();

  Word out(codomain());
  const Word& step_image = steps_[pos]->image(letter);
  for (const auto& r : step_image.runs()) {
    if (pos + 1 == steps_.size()) {
      out.append(r.letter, r.count);
    } else {
      const Word* sub = nullptr;
      try {
        sub = &image(r.letter, pos + 1);
        out.append_power(*sub, r.count, limits_.expansion_cap);
      } catch (const CapExceeded&) {
        throw too_long();
      }
    }
    if (out.runs().size() > limits_.expansion_cap) throw too_long();
  }
  // references into an unordered_map stay valid across rehashing
  return memo.emplace(letter, std::move(out)).first->second;
}

Word Chain::apply(const Word& w) {
  if (!same_alphabet(w.alphabet(), domain())) throw InputError("apply: word over a foreign alphabet");
  Word out(codomain());
  for (const auto& r : w.runs()) {
    out.append_power(image(r.letter, 0), r.count, limits_.expansion_cap);
    if (out.runs().size() > limits_.expansion_cap) {
      throw CapExceeded("applied word exceeds the expansion cap of " + std::to_string(limits_.expansion_cap) +
                        " runs");
    }
  }
  return out;
}

Morphism Chain::compose() {
  std::vector<Word> images;
  images.reserve(domain()->size());
  for (Letter l = 0; l < domain()->size(); ++l) images.push_back(image(l, 0));
  return Morphism(domain(), codomain(), std::move(images));
}

ParikhVector Chain::streamed_parikh(const Word& w) const {
  if (steps_.empty()) return parikh(w);
  std::vector<Nat> cur(domain()->size());
  std::vector<Letter> live;
  for (const auto& r : w.runs()) {
    if (cur[r.letter].is_zero()) live.push_back(r.letter);
    cur[r.letter] += r.count;
  }
  for (const Morphism* step : steps_) {
    std::vector<Nat> next(step->codomain()->size());
    std::vector<Letter> next_live;
    for (Letter l : live) {
      for (const auto& r : step->image(l).runs()) {
        if (next[r.letter].is_zero()) next_live.push_back(r.letter);
        next[r.letter].add_product(cur[l], r.count);
      }
    }
    cur = std::move(next);
    live = std::move(next_live);
  }
  std::sort(live.begin(), live.end());
  std::vector<std::pair<Letter, Nat>> entries;
  for (Letter l : live) entries.emplace_back(l, std::move(cur[l]));
  return ParikhVector(std::move(entries));
}

}  // namespace lineq
