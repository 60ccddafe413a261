#include "lineq/encode.hpp"

#include <algorithm>

#include "lineq/mtriple.hpp"

namespace lineq {

namespace {

Word shifted(const Word& w, const AlphabetPtr& target, Letter offset) {
  Word out(target);
  for (const auto& r : w.runs()) out.append(r.letter + offset, r.count);
  return out;
}

ComputableMap with_prefix(const ComputableMap& c, const std::string& prefix) {
  const auto& a = *c.triple.alphabet;
  std::vector<std::string> names = a.names();
  for (Letter l = 0; l + 1 < names.size(); ++l) names[l] = prefix + names[l];
  auto renamed = make_alphabet(std::move(names), a.level_sizes());
  std::vector<Word> g1;
  std::vector<Word> g2;
  for (Letter l = 0; l < a.size(); ++l) {
    g1.push_back(shifted(c.triple.g1.image(l), renamed, 0));
    g2.push_back(shifted(c.triple.g2.image(l), renamed, 0));
  }
  MTriple triple{renamed, Morphism(renamed, renamed, std::move(g1)), Morphism(renamed, renamed, std::move(g2)),
                 c.triple.dimension};
  return {std::move(triple), shifted(c.witness, renamed, 0)};
}

bool word_within(const Word& w, const LetterRange& r) {
  return std::all_of(w.runs().begin(), w.runs().end(), [&](const Run& run) { return r.contains(run.letter); });
}

bool all_e(const Word& w, Letter e) {
  return std::all_of(w.runs().begin(), w.runs().end(), [&](const Run& run) { return run.letter == e; });
}

// All tuples in {1..bound}^len in lexicographic order.
std::vector<std::vector<std::uint64_t>> boxes(std::size_t len, std::uint64_t bound) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur(len, 1);
  while (true) {
    out.push_back(cur);
    std::size_t i = len;
    while (i > 0 && cur[i - 1] == bound) cur[--i] = 1;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

std::string describe(const std::vector<std::uint64_t>& ns) {
  std::string s = "(";
  for (std::size_t i = 0; i < ns.size(); ++i) s += (i ? "," : "") + std::to_string(ns[i]);
  return s + ")";
}

void record(SuiteCheck& check, bool ok, const std::string& what) {
  ++check.cases;
  if (ok) return;
  if (check.failures == 0) check.first_failure = what;
  ++check.failures;
}

bool is_zero_chain(const Encoder& enc, const GeneratorWord& w, const Limits& limits) {
  try {
    Chain chain(chain_steps(enc, w), limits);
    return is_zero_morphism(chain.compose());
  } catch (const CapExceeded&) {
    for (Letter l = 0; l < enc.alphabet->size(); ++l) {
      if (!support_after(enc, l, w).empty()) return false;
    }
    return true;
  }
}

}  // namespace

Polynomial tupled(const Polynomial& p) {
  const std::size_t t = p.arity();
  std::vector<Polynomial> args;
  for (std::size_t i = 0; i < t; ++i) args.push_back(Polynomial::variable(t, i));
  args.push_back(p);
  return poly_compose(injective_tupling(t + 1), args);
}

Encoder build_encoder(const Polynomial& p, const Polynomial& q, const Limits& limits) {
  if (p.is_zero() || q.is_zero()) throw InputError("p and q must be nonzero");
  if (p.arity() != q.arity()) {
    throw InputError("p has arity " + std::to_string(p.arity()) + ", q has arity " + std::to_string(q.arity()));
  }
  const std::size_t t = p.arity();
  if (t < 2) throw InputError("the encoder needs arity t >= 2");

  Polynomial p1 = tupled(p);
  Polynomial q1 = tupled(q);
  const std::uint64_t need = 4 + compiled_alphabet_size(p1) + compiled_alphabet_size(q1) - 1;
  if (need > limits.alphabet_budget) {
    throw BudgetExceeded("encoder needs " + std::to_string(need) + " letters, budget is " +
                         std::to_string(limits.alphabet_budget));
  }
  const ComputableMap f1 = with_prefix(compile_polynomial(p1, limits), "A:");
  const ComputableMap f2 = with_prefix(compile_polynomial(q1, limits), "B:");
  const MTripleSum g = mtriple_direct_sum(f1, f2, limits);
  const Alphabet& bar = *g.triple.alphabet;

  std::vector<std::string> names{"c0", "c1", "c2", "c3"};
  for (const auto& n : bar.names()) names.push_back(n);
  auto levels = bar.level_sizes();
  levels[0] += 4;
  auto d = make_alphabet(std::move(names), std::move(levels));

  std::vector<Word> g1(d->size(), Word(d));
  std::vector<Word> g2(d->size(), Word(d));
  g1[Encoder::c2] = shifted(apply(g.triple.g1, g.left_witness, limits), d, 4);
  g1[Encoder::c3] = shifted(apply(g.triple.g1, g.right_witness, limits), d, 4);
  g2[Encoder::c0] = Word::letter(d, Encoder::c1);
  g2[Encoder::c1] = Word::letter(d, Encoder::c2);
  g2[Encoder::c2] = Word::letter(d, Encoder::c3);
  g2[Encoder::c3] = Word::letter(d, Encoder::c3);
  for (Letter l = 0; l < bar.size(); ++l) {
    g1[l + 4] = shifted(g.triple.g1.image(l), d, 4);
    g2[l + 4] = shifted(g.triple.g2.image(l), d, 4);
  }

  std::vector<LetterRange> a_blocks;
  std::vector<LetterRange> b_blocks;
  for (std::size_t lv = 0; lv < t; ++lv) {
    const Letter begin = bar.level_begin(lv) + 4;
    const auto a_size = static_cast<Letter>(f1.triple.alphabet->level_size(lv));
    const auto b_size = static_cast<Letter>(f2.triple.alphabet->level_size(lv));
    a_blocks.push_back({begin, begin + a_size});
    b_blocks.push_back({begin + a_size, begin + a_size + b_size});
  }

  return Encoder{
      .t = t,
      .p = p,
      .q = q,
      .p1 = std::move(p1),
      .q1 = std::move(q1),
      .alphabet = d,
      .g1 = Morphism(d, d, std::move(g1)),
      .g2 = Morphism(d, d, std::move(g2)),
      .u = shifted(g.left_witness, d, 4),
      .v = shifted(g.right_witness, d, 4),
      .a_blocks = std::move(a_blocks),
      .b_blocks = std::move(b_blocks),
  };
}

std::vector<std::string> check_encoder(const Encoder& enc) {
  std::vector<std::string> issues;
  const auto& d = enc.alphabet;
  if (!d) return {"encoder without alphabet"};
  const std::size_t t = enc.t;
  if (t < 2) issues.push_back("dimension must be at least 2");
  if (d->levels() != t + 1) {
    issues.push_back("alphabet has " + std::to_string(d->levels()) + " levels, expected " + std::to_string(t + 1));
    return issues;
  }
  if (d->level_size(t) != 1) issues.push_back("last level must be the single letter e");
  if (d->size() < 6 || d->level_size(0) < 6) {
    issues.push_back("alphabet too small for control letters and blocks");
    return issues;
  }
  for (Letter c = 0; c < 4; ++c) {
    if (d->name(c) != "c" + std::to_string(c)) issues.push_back("letter " + std::to_string(c) + " is not c" + std::to_string(c));
  }
  if (!same_alphabet(enc.g1.domain(), d) || !enc.g1.is_endomorphism() || !same_alphabet(enc.g2.domain(), d) ||
      !enc.g2.is_endomorphism() || !same_alphabet(enc.u.alphabet(), d) || !same_alphabet(enc.v.alphabet(), d)) {
    issues.push_back("g1, g2, u, v must live over D");
    return issues;
  }
  if (enc.a_blocks.size() != t || enc.b_blocks.size() != t) {
    issues.push_back("expected " + std::to_string(t) + " A and B blocks");
    return issues;
  }
  for (std::size_t lv = 0; lv < t; ++lv) {
    const Letter begin = lv == 0 ? 4 : d->level_begin(lv);
    const auto& a = enc.a_blocks[lv];
    const auto& b = enc.b_blocks[lv];
    if (a.begin != begin || a.end != b.begin || b.end != d->level_end(lv) || a.size() == 0 || b.size() == 0) {
      issues.push_back("blocks of level " + std::to_string(lv + 1) + " do not tile the level");
    }
  }
  if (!issues.empty()) return issues;

  const Letter e = enc.e();
  if (enc.u.empty() || !word_within(enc.u, enc.a_blocks[0])) issues.push_back("u must be a nonempty word over A_1");
  if (enc.v.empty() || !word_within(enc.v, enc.b_blocks[0])) issues.push_back("v must be a nonempty word over B_1");

  const auto expect = [&](const Morphism& g, Letter l, const Word& w, const char* which) {
    if (!(g.image(l) == w)) issues.push_back(std::string(which) + " image of " + d->name(l) + " is wrong");
  };
  const Word eps(d);
  expect(enc.g1, Encoder::c0, eps, "g1");
  expect(enc.g1, Encoder::c1, eps, "g1");
  try {
    expect(enc.g1, Encoder::c2, apply(enc.g1, enc.u), "g1");
    expect(enc.g1, Encoder::c3, apply(enc.g1, enc.v), "g1");
  } catch (const CapExceeded&) {
    issues.push_back("images of c2, c3 exceed the expansion cap");
  }
  expect(enc.g2, Encoder::c0, Word::letter(d, Encoder::c1), "g2");
  expect(enc.g2, Encoder::c1, Word::letter(d, Encoder::c2), "g2");
  expect(enc.g2, Encoder::c2, Word::letter(d, Encoder::c3), "g2");
  expect(enc.g2, Encoder::c3, Word::letter(d, Encoder::c3), "g2");
  expect(enc.g1, e, eps, "g1");
  expect(enc.g2, e, eps, "g2");

  for (std::size_t lv = 0; lv < t; ++lv) {
    for (const auto* blocks : {&enc.a_blocks, &enc.b_blocks}) {
      const auto& here = (*blocks)[lv];
      const LetterRange next = lv + 1 < t ? (*blocks)[lv + 1] : LetterRange{e, e + 1};
      for (Letter l = here.begin; l < here.end; ++l) {
        if (!word_within(enc.g1.image(l), here)) issues.push_back("g1 moves " + d->name(l) + " out of its block");
        if (!word_within(enc.g2.image(l), next)) issues.push_back("g2 sends " + d->name(l) + " outside the next block");
        for (const auto& r : enc.g2.image(l).runs()) {
          if (!enc.g2.image(r.letter).empty()) {
            issues.push_back("g2^2 does not erase " + d->name(l));
            break;
          }
        }
      }
    }
  }
  if (!is_upper_triangular(enc.g1)) issues.push_back("g1 is not upper triangular");
  if (!is_upper_triangular(enc.g2)) issues.push_back("g2 is not upper triangular");
  if (issues.empty() && !is_zero_chain(enc, GeneratorWord{{1, 2, 2}}, Limits{})) issues.push_back("g1 g2^2 is not o");
  if (enc.p.arity() != t || enc.q.arity() != t) issues.push_back("p and q must have arity t");
  else {
    if (!(enc.p1 == tupled(enc.p))) issues.push_back("p1 does not match p");
    if (!(enc.q1 == tupled(enc.q))) issues.push_back("q1 does not match q");
  }
  if (issues.size() > 50) issues.resize(50);
  return issues;
}

std::vector<const Morphism*> chain_steps(const Encoder& enc, const GeneratorWord& w) {
  std::vector<const Morphism*> steps;
  steps.reserve(w.size());
  for (auto s : w.symbols) {
    if (s != 1 && s != 2) throw InputError("generator word symbols must be 1 or 2");
    steps.push_back(&enc.generator(s));
  }
  return steps;
}

MorphismHandle evaluate(const Encoder& enc, const GeneratorWord& w, const Limits& limits) {
  MorphismHandle h{w, std::nullopt, SparseMatrix(enc.alphabet->size())};
  if (w.empty()) {
    h.morphism = Morphism::identity(enc.alphabet);
    h.matrix = SparseMatrix::identity(enc.alphabet->size());
    return h;
  }
  try {
    Chain chain(chain_steps(enc, w), limits);
    h.morphism = chain.compose();
    h.matrix = matrix_of(*h.morphism);
  } catch (const CapExceeded&) {
    const SparseMatrix m1 = matrix_of(enc.g1);
    const SparseMatrix m2 = matrix_of(enc.g2);
    SparseMatrix acc = w.symbols[0] == 1 ? m1 : m2;
    for (std::size_t i = 1; i < w.size(); ++i) acc = mat_mul(acc, w.symbols[i] == 1 ? m1 : m2);
    h.matrix = std::move(acc);
  }
  return h;
}

MorphismHandle prod(const Encoder& enc, std::span<const std::uint64_t> ns, const Limits& limits) {
  if (ns.empty()) throw InputError("Prod needs at least one argument");
  return evaluate(enc, prod_word(ns), limits);
}

MorphismHandle f_ns(const Encoder& enc, std::uint64_t n, std::uint64_t s, const Limits& limits) {
  return evaluate(enc, f_ns_word(n, s), limits);
}

MorphismHandle g_ns(const Encoder& enc, std::uint64_t n, std::uint64_t s, const Limits& limits) {
  return evaluate(enc, g_ns_word(n, s), limits);
}

std::vector<Letter> support_after(const Encoder& enc, Letter start, const GeneratorWord& w) {
  const std::size_t k = enc.alphabet->size();
  std::vector<std::uint8_t> cur(k, 0);
  std::vector<std::uint8_t> next(k, 0);
  cur.at(start) = 1;
  for (auto s : w.symbols) {
    std::fill(next.begin(), next.end(), 0);
    const Morphism& g = enc.generator(s);
    bool any = false;
    for (Letter l = 0; l < k; ++l) {
      if (!cur[l]) continue;
      for (const auto& r : g.image(l).runs()) {
        next[r.letter] = 1;
        any = true;
      }
    }
    std::swap(cur, next);
    if (!any) break;
  }
  std::vector<Letter> out;
  for (Letter l = 0; l < k; ++l) {
    if (cur[l]) out.push_back(l);
  }
  return out;
}

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed(); });
}

SuiteReport lemma5_suite(const Encoder& enc, std::uint64_t bound, const Limits& limits) {
  if (bound < 1) throw InputError("bound must be positive");
  SuiteReport report{"lemma5", {{"(i)"}, {"(ii)"}, {"(iii)"}, {"(iv)"}}};
  auto& c1 = report.checks[0];
  auto& c2 = report.checks[1];
  auto& c3 = report.checks[2];
  auto& c4 = report.checks[3];
  const GeneratorWord lead2{{2, 2}};
  const GeneratorWord lead3{{2, 2, 2}};
  const Letter e = enc.e();

  for (std::size_t alpha = 1; alpha <= enc.t; ++alpha) {
    for (const auto& ns : boxes(alpha, bound)) {
      const GeneratorWord body = prod_word(ns);
      const std::string at = describe(ns);
      for (int side = 0; side < 2; ++side) {
        const GeneratorWord lead = concat(side == 0 ? lead2 : lead3, body);
        const std::string tag = (side == 0 ? "g2^2 Prod" : "g2^3 Prod") + at;

        record(c4, !support_after(enc, Encoder::c0, lead).empty(), "c0 " + tag + " is empty");

        if (alpha < enc.t) {
          const auto& block = side == 0 ? enc.a_blocks[alpha] : enc.b_blocks[alpha];
          GeneratorWord w = lead;
          for (std::uint64_t j = 0; j <= bound; ++j) {
            const auto supp = support_after(enc, Encoder::c0, w);
            const bool inside =
                std::all_of(supp.begin(), supp.end(), [&](Letter l) { return block.contains(l); });
            record(c1, inside, "c0 " + tag + " g1^" + std::to_string(j) + " leaves the level block");
            w.symbols.push_back(1);
          }
          continue;
        }

        const Nat expected = poly_eval(side == 0 ? enc.p1 : enc.q1, std::vector<Nat>(ns.begin(), ns.end()));
        bool ok = false;
        std::string got;
        try {
          Chain chain(chain_steps(enc, lead), limits);
          const Word w = chain.apply(Word::letter(enc.alphabet, Encoder::c0));
          ok = all_e(w, e) && w.length() == expected;
          got = to_text(w).substr(0, 80);
        } catch (const CapExceeded&) {
          Chain chain(chain_steps(enc, lead), limits);
          const ParikhVector pv = chain.streamed_parikh(Word::letter(enc.alphabet, Encoder::c0));
          ok = pv.entries().size() == 1 && pv.entries()[0].first == e && pv.entries()[0].second == expected;
          got = "(streamed)";
        }
        record(c2, ok, "c0 " + tag + " = " + got + ", expected e^" + expected.to_string());

        GeneratorWord w = lead;
        for (std::uint64_t j = 1; j <= bound; ++j) {
          w.symbols.push_back(1);
          record(c3, is_zero_chain(enc, w, limits), tag + " g1^" + std::to_string(j) + " is not o");
        }
      }
    }
  }
  return report;
}

SuiteReport lemma6_suite(const Encoder& enc, std::size_t max_len, const Limits& limits) {
  SuiteReport report{"lemma6", {{"g1 h1 g2^2 h2 = o"}}};
  auto& check = report.checks[0];
  const auto hs = words_up_to(max_len);
  for (const auto& h1 : hs) {
    for (const auto& h2 : hs) {
      GeneratorWord w{{1}};
      w = concat(w, h1);
      w.symbols.push_back(2);
      w.symbols.push_back(2);
      w = concat(w, h2);
      record(check, is_zero_chain(enc, w, limits), "h1 = " + to_string(h1) + ", h2 = " + to_string(h2));
    }
  }
  return report;
}

}  // namespace lineq
