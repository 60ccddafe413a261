#include "lineq/mtriple.hpp"

#include <algorithm>
#include <unordered_set>

namespace lineq {

namespace {

constexpr std::size_t kMaxShown = 50;

void add_violation(ValidationCheck& check, const std::string& letter, const std::string& why) {
  if (check.passed) check.example = letter + ": " + why;
  check.passed = false;
  if (check.violators.size() < kMaxShown) check.violators.push_back(letter);
}

std::uint64_t block_size(std::uint32_t exponent) {
  return std::uint64_t{1} << std::max<std::uint32_t>(exponent, 1);
}

void require_budget(std::uint64_t letters, const Limits& limits, const std::string& what) {
  if (letters > limits.alphabet_budget) {
    throw BudgetExceeded(what + " needs " + std::to_string(letters) + " letters, budget is " +
                         std::to_string(limits.alphabet_budget));
  }
}

Word remap(const Word& w, const AlphabetPtr& target, const std::vector<Letter>& map) {
  Word out(target);
  for (const auto& r : w.runs()) out.append(map[r.letter], r.count);
  return out;
}

}  // namespace

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

std::vector<std::string> ValidationReport::failed_conditions() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.condition);
  }
  return out;
}

const ValidationCheck& ValidationReport::check(std::string_view condition) const {
  for (const auto& c : checks) {
    if (c.condition == condition) return c;
  }
  throw InputError("no validation check named " + std::string(condition));
}

ValidationReport validate_mtriple(const AlphabetPtr& alphabet, const Morphism& g1, const Morphism& g2,
                                  std::size_t t) {
  ValidationReport report;
  ValidationCheck partition{"partition", true, {}, {}};
  ValidationCheck c1{"(i)", true, {}, {}};
  ValidationCheck c2{"(ii)", true, {}, {}};
  ValidationCheck c3{"(iii)", true, {}, {}};
  ValidationCheck c4{"(iv)", true, {}, {}};
  ValidationCheck c5{"(v)", true, {}, {}};
  ValidationCheck tri{"triangular", true, {}, {}};

  const bool shapes_ok = same_alphabet(g1.domain(), alphabet) && same_alphabet(g1.codomain(), alphabet) &&
                         same_alphabet(g2.domain(), alphabet) && same_alphabet(g2.codomain(), alphabet);
  if (!shapes_ok) {
    add_violation(partition, "-", "morphisms are not endomorphisms of the alphabet");
  }
  if (t < 1) add_violation(partition, "-", "dimension must be at least 1");
  if (alphabet->levels() != t + 1) {
    add_violation(partition, "-",
                  "alphabet has " + std::to_string(alphabet->levels()) + " levels, expected " + std::to_string(t + 1));
  }

  if (partition.passed) {
    const auto& a = *alphabet;
    const Letter e = a.last();
    for (Letter l = 0; l < a.size(); ++l) {
      const std::size_t lv = a.level_of(l);
      for (const auto& r : g1.image(l).runs()) {
        if (a.level_of(r.letter) != lv) {
          add_violation(c1, a.name(l), "g1 image contains " + a.name(r.letter) + " from level " +
                                           std::to_string(a.level_of(r.letter) + 1));
          break;
        }
      }
      if (lv < t) {
        for (const auto& r : g2.image(l).runs()) {
          if (a.level_of(r.letter) != lv + 1) {
            add_violation(c2, a.name(l), "g2 image contains " + a.name(r.letter) + " from level " +
                                             std::to_string(a.level_of(r.letter) + 1) + ", expected level " +
                                             std::to_string(lv + 2));
            break;
          }
        }
      }
      for (const auto& r : g2.image(l).runs()) {
        if (!g2.image(r.letter).empty()) {
          add_violation(c3, a.name(l), "g2^2 image is nonempty (contains " + to_text(g2.image(r.letter)) + ")");
          break;
        }
      }
    }
    if (a.level_size(t) != 1 || a.level_begin(t) != e) {
      add_violation(c4, a.name(e), "last level must be exactly the last letter");
    }
    if (!g1.image(e).empty() || !g2.image(e).empty()) {
      add_violation(c5, a.name(e), "last letter is not erased by g1 and g2");
    }
    if (!is_upper_triangular(g1)) add_violation(tri, "g1", "g1 is not upper triangular");
    if (!is_upper_triangular(g2)) add_violation(tri, "g2", "g2 is not upper triangular");
  }

  report.checks = {partition, c1, c2, c3, c4, c5, tri};
  return report;
}

PowerMorphism kronecker_power_morphism(std::size_t k, const Limits& limits) {
  if (k < 1) throw InputError("Kronecker power needs k >= 1");
  if (k >= 63 || (std::uint64_t{1} << k) > limits.alphabet_budget) {
    throw BudgetExceeded("Kronecker power k=" + std::to_string(k) + " exceeds the alphabet budget of " +
                         std::to_string(limits.alphabet_budget));
  }
  const std::uint32_t n = std::uint32_t{1} << k;
  std::vector<std::string> names;
  names.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i + 1));
  auto alphabet = make_alphabet(std::move(names));
  std::vector<Word> images;
  images.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Word w(alphabet);
    for (std::uint32_t j = i; j < n; ++j) {
      if ((j & i) == i) w.append(j, Nat(1));
    }
    images.push_back(std::move(w));
  }
  return {alphabet, Morphism(alphabet, alphabet, std::move(images))};
}

PowerMorphism constant_exponent_morphism() {
  auto alphabet = make_alphabet({"a", "b"});
  std::vector<Word> images{Word::letter(alphabet, 1), Word::letter(alphabet, 1)};
  return {alphabet, Morphism(alphabet, alphabet, std::move(images))};
}

ComputableMap monomial_mtriple(std::span<const std::uint32_t> exponents, const Limits& limits,
                               const std::string& prefix) {
  const std::size_t t = exponents.size();
  if (t < 1) throw InputError("monomial M-triple needs dimension t >= 1");
  std::uint64_t total = 1;
  for (auto a : exponents) {
    if (a >= 62) throw BudgetExceeded("exponent " + std::to_string(a) + " exceeds the alphabet budget");
    total += block_size(a);
  }
  require_budget(total, limits, "monomial M-triple");

  std::vector<PowerMorphism> blocks;
  blocks.reserve(t);
  for (auto a : exponents) blocks.push_back(a > 0 ? kronecker_power_morphism(a, limits) : constant_exponent_morphism());

  std::vector<std::string> names;
  std::vector<std::size_t> levels;
  std::vector<Letter> offset;
  for (std::size_t i = 0; i < t; ++i) {
    offset.push_back(static_cast<Letter>(names.size()));
    const std::size_t n = blocks[i].alphabet->size();
    for (std::size_t j = 0; j < n; ++j) {
      names.push_back(prefix + "a" + std::to_string(i + 1) + "." + std::to_string(j + 1));
    }
    levels.push_back(n);
  }
  names.emplace_back("e");
  levels.push_back(1);
  auto alphabet = make_alphabet(std::move(names), std::move(levels));
  const Letter e = alphabet->last();

  std::vector<Word> g1(alphabet->size(), Word(alphabet));
  std::vector<Word> g2(alphabet->size(), Word(alphabet));
  for (std::size_t i = 0; i < t; ++i) {
    const auto& block = blocks[i];
    for (Letter l = 0; l < block.alphabet->size(); ++l) {
      for (const auto& r : block.h.image(l).runs()) g1[offset[i] + l].append(offset[i] + r.letter, r.count);
    }
    const Letter last_of_block = offset[i] + static_cast<Letter>(block.alphabet->size()) - 1;
    const Letter next = i + 1 < t ? offset[i + 1] : e;
    g2[last_of_block].append(next, Nat(1));
  }
  MTriple triple{alphabet, Morphism(alphabet, alphabet, std::move(g1)), Morphism(alphabet, alphabet, std::move(g2)), t};
  Word witness = Word::letter(alphabet, 0);
  return {std::move(triple), std::move(witness)};
}

MTripleSum mtriple_direct_sum(const ComputableMap& f, const ComputableMap& g, const Limits& limits) {
  const auto& fa = *f.triple.alphabet;
  const auto& ga = *g.triple.alphabet;
  const std::size_t t = f.triple.dimension;
  if (t != g.triple.dimension) {
    throw InputError("direct sum of M-triples of dimensions " + std::to_string(t) + " and " +
                     std::to_string(g.triple.dimension));
  }
  if (fa.levels() != t + 1 || ga.levels() != t + 1) throw InputError("direct sum: malformed level partition");
  const std::uint64_t total = (fa.size() - 1) + (ga.size() - 1) + 1;
  require_budget(total, limits, "M-triple direct sum");

  bool clash = false;
  for (Letter l = 0; l + 1 < ga.size() && !clash; ++l) {
    auto hit = fa.find(ga.name(l));
    clash = hit && *hit != fa.last();
  }
  const std::string fp = clash ? "L." : "";
  const std::string gp = clash ? "R." : "";

  std::unordered_set<std::string> used;
  std::vector<std::string> names;
  std::vector<std::size_t> levels;
  std::vector<Letter> fmap(fa.size());
  std::vector<Letter> gmap(ga.size());
  for (std::size_t lv = 0; lv < t; ++lv) {
    for (Letter l = fa.level_begin(lv); l < fa.level_end(lv); ++l) {
      fmap[l] = static_cast<Letter>(names.size());
      names.push_back(fp + fa.name(l));
    }
    for (Letter l = ga.level_begin(lv); l < ga.level_end(lv); ++l) {
      gmap[l] = static_cast<Letter>(names.size());
      names.push_back(gp + ga.name(l));
    }
    levels.push_back(fa.level_size(lv) + ga.level_size(lv));
  }
  used.insert(names.begin(), names.end());
  std::string e_name = "e";
  while (used.count(e_name)) e_name += "'";
  const auto e = static_cast<Letter>(names.size());
  fmap[fa.last()] = e;
  gmap[ga.last()] = e;
  names.push_back(e_name);
  levels.push_back(1);
  auto alphabet = make_alphabet(std::move(names), std::move(levels));

  std::vector<Word> h1(alphabet->size(), Word(alphabet));
  std::vector<Word> h2(alphabet->size(), Word(alphabet));
  for (Letter l = 0; l + 1 < fa.size(); ++l) {
    h1[fmap[l]] = remap(f.triple.g1.image(l), alphabet, fmap);
    h2[fmap[l]] = remap(f.triple.g2.image(l), alphabet, fmap);
  }
  for (Letter l = 0; l + 1 < ga.size(); ++l) {
    h1[gmap[l]] = remap(g.triple.g1.image(l), alphabet, gmap);
    h2[gmap[l]] = remap(g.triple.g2.image(l), alphabet, gmap);
  }
  MTriple triple{alphabet, Morphism(alphabet, alphabet, std::move(h1)), Morphism(alphabet, alphabet, std::move(h2)), t};
  return {std::move(triple), remap(f.witness, alphabet, fmap), remap(g.witness, alphabet, gmap)};
}

ComputableMap linear_combination(const ComputableMap& f, const ComputableMap& g, const Nat& alpha, const Nat& beta,
                                 const Limits& limits) {
  if (alpha.is_zero() || beta.is_zero()) throw InputError("linear combination needs positive coefficients");
  auto sum = mtriple_direct_sum(f, g, limits);
  Word w(sum.triple.alphabet);
  w.append_power(sum.left_witness, alpha, limits.expansion_cap);
  w.append_power(sum.right_witness, beta, limits.expansion_cap);
  return {std::move(sum.triple), std::move(w)};
}

std::uint64_t compiled_alphabet_size(const Polynomial& p) {
  std::uint64_t total = 1;
  for (const auto& m : p.monomials()) {
    for (auto a : m.exponents) total += a >= 62 ? std::uint64_t{1} << 62 : block_size(a);
  }
  return total;
}

ComputableMap compile_polynomial(const Polynomial& p, const Limits& limits) {
  if (p.is_zero()) throw InputError("cannot compile the zero polynomial");
  require_budget(compiled_alphabet_size(p), limits, "compiled polynomial");
  const auto& monos = p.monomials();
  auto first = monomial_mtriple(monos[0].exponents, limits, "m1:");
  ComputableMap acc{first.triple, word_power(first.witness, monos[0].coeff, limits)};
  for (std::size_t j = 1; j < monos.size(); ++j) {
    auto next = monomial_mtriple(monos[j].exponents, limits, "m" + std::to_string(j + 1) + ":");
    acc = linear_combination(acc, next, Nat(1), monos[j].coeff, limits);
  }
  return acc;
}

namespace {

Nat read_last_letter(const Word& w, Letter e) {
  Nat value;
  for (const auto& r : w.runs()) {
    if (r.letter != e) throw std::logic_error("M-triple iteration left letters other than e");
    value += r.count;
  }
  return value;
}

void require_point(const ComputableMap& c, std::span<const Nat> point) {
  if (point.size() != c.triple.dimension) {
    throw InputError("point has " + std::to_string(point.size()) + " coordinates, M-triple dimension is " +
                     std::to_string(c.triple.dimension));
  }
  for (const auto& n : point) {
    if (n.is_zero()) throw InputError("M-triple arguments must be positive");
  }
}

}  // namespace

ComputeResult mtriple_compute(const ComputableMap& c, std::span<const Nat> point, const Limits& limits) {
  require_point(c, point);
  try {
    Word w = c.witness;
    for (const auto& n : point) {
      const std::uint64_t reps = n.to_u64();
      for (std::uint64_t k = 0; k < reps; ++k) w = apply(c.triple.g1, w, limits);
      w = apply(c.triple.g2, w, limits);
    }
    return {read_last_letter(w, c.triple.last_letter()), ComputeLevel::word};
  } catch (const CapExceeded&) {
    return {mtriple_compute_matrix(c, point), ComputeLevel::matrix};
  }
}

Nat mtriple_compute_matrix(const ComputableMap& c, std::span<const Nat> point) {
  require_point(c, point);
  const SparseMatrix m1 = matrix_of(c.triple.g1);
  const SparseMatrix m2 = matrix_of(c.triple.g2);
  RowAccumulator scratch(m1.dim());
  SparseRow row;
  const ParikhVector pv = parikh(c.witness);
  for (const auto& [letter, count] : pv.entries()) row.push_back({letter, count});
  for (const auto& n : point) {
    const std::uint64_t reps = n.to_u64();
    for (std::uint64_t k = 0; k < reps; ++k) row = row_times(row, m1, scratch);
    row = row_times(row, m2, scratch);
  }
  const Letter e = c.triple.last_letter();
  Nat value;
  for (const auto& entry : row) {
    if (entry.col != e) throw std::logic_error("M-triple iteration left letters other than e");
    value = entry.value;
  }
  return value;
}

}  // namespace lineq
