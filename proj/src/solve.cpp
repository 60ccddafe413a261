#include "lineq/solve.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace lineq {

std::optional<std::vector<std::uint64_t>> diophantine_oracle(const Polynomial& p, const Polynomial& q, std::uint64_t n,
                                                             std::uint64_t s, std::uint64_t bound) {
  const std::size_t t = p.arity();
  if (t < 2 || q.arity() != t) throw InputError("the oracle needs p and q of equal arity t >= 2");
  if (n == 0 || s == 0) throw InputError("n and s must be positive");
  if (bound < 1) throw InputError("oracle bound must be positive");
  std::vector<Nat> point(t, Nat(1));
  point[0] = Nat(n);
  point[1] = Nat(s);
  std::vector<std::uint64_t> tail(t - 2, 1);
  while (true) {
    for (std::size_t i = 0; i < tail.size(); ++i) point[i + 2] = Nat(tail[i]);
    if (poly_eval(p, point) == poly_eval(q, point)) return tail;
    std::size_t i = tail.size();
    while (i > 0 && tail[i - 1] == bound) tail[--i] = 1;
    if (i == 0) return std::nullopt;
    ++tail[i - 1];
  }
}

GeneratorWord witness_from_tuple(std::span<const std::uint64_t> tuple) {
  return tuple.empty() ? GeneratorWord{} : prod_word(tuple);
}

std::string to_string(Level level) { return level == Level::matrix ? "matrix" : "morphism"; }

namespace {

// Nonzero rows of a X, keyed by row index.
using State = std::vector<std::pair<std::uint32_t, SparseRow>>;

State state_of(const SparseMatrix& a) {
  State st;
  for (std::uint32_t i = 0; i < a.dim(); ++i) {
    if (!a.row(i).empty()) st.emplace_back(i, a.row(i));
  }
  return st;
}

State step(const State& st, const SparseMatrix& g, RowAccumulator& scratch) {
  State out;
  out.reserve(st.size());
  for (const auto& [i, row] : st) {
    SparseRow r = row_times(row, g, scratch);
    if (!r.empty()) out.emplace_back(i, std::move(r));
  }
  return out;
}

std::uint64_t state_fingerprint(const State& st) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [i, row] : st) {
    h ^= fingerprint(row, i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string describe_row(const State& st, const Alphabet* names) {
  if (st.empty()) return {};
  const auto& [i, row] = st.front();
  const auto name = [&](std::uint32_t l) { return names ? names->name(l) : std::to_string(l); };
  std::string out = "row " + name(i) + ":";
  std::size_t shown = 0;
  for (const auto& e : row) {
    if (shown++ == 8) {
      out += " ...";
      break;
    }
    out += " " + name(e.col) + "^" + e.value.to_string();
  }
  return out;
}

void check_dims(const SparseMatrix& a, const SparseMatrix& b, const EncoderMatrices& gens) {
  if (a.dim() != gens.dim() || b.dim() != gens.dim()) throw InputError("equation sides do not match the generators");
}

// Calls visit(x, a X, b X) for every x with a X != O, in shortlex order, until
// visit returns true. Iterative deepening keeps memory linear in max_len.
std::uint64_t for_each_one_unknown(const SparseMatrix& a, const SparseMatrix& b, const EncoderMatrices& gens,
                                   std::size_t max_len,
                                   const std::function<bool(const GeneratorWord&, const State&, const State&)>& visit) {
  RowAccumulator scratch(gens.dim());
  std::uint64_t explored = 0;
  GeneratorWord x;
  bool stop = false;
  std::function<void(const State&, const State&, std::size_t)> dfs = [&](const State& sa, const State& sb,
                                                                         std::size_t depth) {
    if (stop || sa.empty()) return;
    if (x.size() == depth) {
      ++explored;
      stop = visit(x, sa, sb);
      return;
    }
    for (std::uint8_t sym : {1, 2}) {
      const SparseMatrix& g = gens.generator(sym);
      x.symbols.push_back(sym);
      dfs(step(sa, g, scratch), step(sb, g, scratch), depth);
      x.symbols.pop_back();
      if (stop) return;
    }
  };
  const State a0 = state_of(a);
  const State b0 = state_of(b);
  for (std::size_t len = 0; len <= max_len && !stop; ++len) dfs(a0, b0, len);
  return explored;
}

struct Side {
  GeneratorWord word;
  std::uint64_t fp;
};

// Every word of length <= max_len with a nonzero product, bucketed by length
// in lexicographic order.
std::vector<std::vector<Side>> nonzero_words(const SparseMatrix& a, const EncoderMatrices& gens, std::size_t max_len) {
  std::vector<std::vector<Side>> out(max_len + 1);
  RowAccumulator scratch(gens.dim());
  GeneratorWord w;
  std::function<void(const State&)> dfs = [&](const State& st) {
    if (st.empty()) return;
    out[w.size()].push_back({w, state_fingerprint(st)});
    if (w.size() == max_len) return;
    for (std::uint8_t sym : {1, 2}) {
      w.symbols.push_back(sym);
      dfs(step(st, gens.generator(sym), scratch));
      w.symbols.pop_back();
    }
  };
  dfs(state_of(a));
  for (auto& bucket : out) {
    std::sort(bucket.begin(), bucket.end(), [](const Side& l, const Side& r) { return l.word < r.word; });
  }
  return out;
}

// Calls visit(x, y) for fingerprint-matching pairs in canonical order until it
// returns true. Pairs reaching visit satisfy a X = b Y exactly.
std::uint64_t for_each_two_unknowns(const SparseMatrix& a, const SparseMatrix& b, const EncoderMatrices& gens,
                                    std::size_t max_len,
                                    const std::function<bool(const GeneratorWord&, const GeneratorWord&, const State&)>& visit) {
  const auto xs = nonzero_words(a, gens, max_len);
  const auto ys = nonzero_words(b, gens, max_len);
  std::vector<std::unordered_map<std::uint64_t, std::vector<std::size_t>>> index(max_len + 1);
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::size_t i = 0; i < ys[len].size(); ++i) index[len][ys[len][i].fp].push_back(i);
  }
  std::uint64_t explored = 0;
  for (std::size_t total = 0; total <= 2 * max_len; ++total) {
    const std::size_t lo = total > max_len ? total - max_len : 0;
    for (std::size_t lx = lo; lx <= std::min(total, max_len); ++lx) {
      const std::size_t ly = total - lx;
      for (const auto& x : xs[lx]) {
        explored += ys[ly].size();
        auto hit = index[ly].find(x.fp);
        if (hit == index[ly].end()) continue;
        const SparseMatrix ax = times_word(a, gens, x.word);
        const State sa = state_of(ax);
        for (std::size_t i : hit->second) {
          const GeneratorWord& y = ys[ly][i].word;
          if (!(times_word(b, gens, y) == ax)) continue;
          if (visit(x.word, y, sa)) return explored;
        }
      }
    }
  }
  return explored;
}

// Letter-by-letter comparison of (a x) and (b y) on the letters whose rows are
// nonzero; all other letters have empty images on both sides.
bool confirm_words(const Encoder& enc, const GeneratorWord& ax, const GeneratorWord& by, const State& rows,
                   const Limits& limits, bool& backed, std::string& certificate) {
  backed = false;
  certificate.clear();
  if (ax.empty() || by.empty()) {
    // identity on one side: compare through evaluate
    const auto l = evaluate(enc, ax, limits);
    const auto r = evaluate(enc, by, limits);
    if (!l.morphism || !r.morphism) {
      backed = true;
      return l.matrix == r.matrix;
    }
    return *l.morphism == *r.morphism;
  }
  Chain left(chain_steps(enc, ax), limits);
  Chain right(chain_steps(enc, by), limits);
  for (const auto& [letter, row] : rows) {
    try {
      const Word& wl = left.image(letter, 0);
      const Word& wr = right.image(letter, 0);
      if (!(wl == wr)) return false;
      if (certificate.empty()) {
        std::string text = to_text(wl);
        if (text.size() > 120) text = text.substr(0, 117) + "...";
        certificate = enc.alphabet->name(letter) + " -> " + text;
      }
    } catch (const CapExceeded&) {
      backed = true;
    }
  }
  return true;
}

}  // namespace

SolveResult solve_one_unknown(const SparseMatrix& a, const SparseMatrix& b, const EncoderMatrices& gens,
                              std::size_t max_len) {
  check_dims(a, b, gens);
  SolveResult res;
  res.max_len = max_len;
  res.explored = for_each_one_unknown(a, b, gens, max_len, [&](const GeneratorWord& x, const State& sa, const State& sb) {
    if (sa != sb) return false;
    res.found = true;
    res.x = x;
    res.certificate = describe_row(sa, nullptr);
    return true;
  });
  return res;
}

SolveResult solve_two_unknowns(const SparseMatrix& a, const SparseMatrix& b, const EncoderMatrices& gens,
                               std::size_t max_len) {
  check_dims(a, b, gens);
  SolveResult res;
  res.two_unknowns = true;
  res.max_len = max_len;
  res.explored =
      for_each_two_unknowns(a, b, gens, max_len, [&](const GeneratorWord& x, const GeneratorWord& y, const State& sa) {
        res.found = true;
        res.x = x;
        res.y = y;
        res.certificate = describe_row(sa, nullptr);
        return true;
      });
  return res;
}

SolveResult solve_one_unknown_morphism(const Encoder& enc, const EncoderMatrices& gens, const GeneratorWord& a,
                                       const GeneratorWord& b, std::size_t max_len, const Limits& limits) {
  SolveResult res;
  res.level = Level::morphism;
  res.max_len = max_len;
  const SparseMatrix ma = word_matrix(gens, a);
  const SparseMatrix mb = word_matrix(gens, b);
  res.explored = for_each_one_unknown(ma, mb, gens, max_len, [&](const GeneratorWord& x, const State& sa, const State& sb) {
    if (sa != sb) return false;
    bool backed = false;
    std::string cert;
    if (!confirm_words(enc, concat(a, x), concat(b, x), sa, limits, backed, cert)) return false;
    res.found = true;
    res.x = x;
    res.matrix_backed = backed;
    res.certificate = cert.empty() ? describe_row(sa, enc.alphabet.get()) : cert;
    return true;
  });
  return res;
}

SolveResult solve_two_unknowns_morphism(const Encoder& enc, const EncoderMatrices& gens, const GeneratorWord& a,
                                        const GeneratorWord& b, std::size_t max_len, const Limits& limits) {
  SolveResult res;
  res.level = Level::morphism;
  res.two_unknowns = true;
  res.max_len = max_len;
  const SparseMatrix ma = word_matrix(gens, a);
  const SparseMatrix mb = word_matrix(gens, b);
  res.explored = for_each_two_unknowns(ma, mb, gens, max_len,
                                       [&](const GeneratorWord& x, const GeneratorWord& y, const State& sa) {
                                         bool backed = false;
                                         std::string cert;
                                         if (!confirm_words(enc, concat(a, x), concat(b, y), sa, limits, backed, cert)) {
                                           return false;
                                         }
                                         res.found = true;
                                         res.x = x;
                                         res.y = y;
                                         res.matrix_backed = backed;
                                         res.certificate = cert.empty() ? describe_row(sa, enc.alphabet.get()) : cert;
                                         return true;
                                       });
  return res;
}

Recovery recover_tuple(const Encoder& enc, std::uint64_t n, std::uint64_t s, const GeneratorWord& x) {
  Recovery rec;
  const std::uint64_t ns[] = {n, s};
  const auto shape = parse_prod_shape(concat(prod_word(ns), x));
  if (!shape) {
    rec.reason = "Prod(n,s) x is not of the form Prod(m1..ma) g1^k";
    return rec;
  }
  rec.tuple = shape->exponents;
  if (shape->trailing_g1 != 0) {
    rec.reason = "trailing g1^" + std::to_string(shape->trailing_g1);
    return rec;
  }
  if (rec.tuple.size() != enc.t) {
    rec.reason = "recovered " + std::to_string(rec.tuple.size()) + " arguments, expected " + std::to_string(enc.t);
    return rec;
  }
  if (rec.tuple[0] != n || rec.tuple[1] != s) {
    rec.reason = "first entries differ from (n, s)";
    return rec;
  }
  const std::vector<Nat> point(rec.tuple.begin(), rec.tuple.end());
  if (!(poly_eval(enc.p, point) == poly_eval(enc.q, point))) {
    rec.reason = "p != q at the recovered tuple";
    return rec;
  }
  rec.ok = true;
  return rec;
}

Recovery recover_tuple(const Encoder& enc, std::uint64_t n, std::uint64_t s, const GeneratorWord& x,
                       const GeneratorWord& y) {
  Recovery left = recover_tuple(enc, n, s, x);
  if (!left.ok) return left;
  Recovery right = recover_tuple(enc, n, s, y);
  if (!right.ok) return right;
  if (left.tuple != right.tuple) {
    left.ok = false;
    left.reason = "x and y recover different tuples";
  }
  return left;
}

bool EquivalenceReport::all_agree() const {
  for (const auto& row : rows) {
    if (row.status != "agree") return false;
    for (const auto* rec : {&row.recovery_one, &row.recovery_two}) {
      if (*rec && !(*rec)->ok) return false;
    }
  }
  return true;
}

namespace {

std::uint64_t witness_length(const std::vector<std::uint64_t>& tuple) {
  std::uint64_t len = 0;
  for (auto v : tuple) len += v + 1;
  return len;
}

}  // namespace

EquivalenceReport equivalence_report(const Encoder& enc, const EncoderMatrices& gens, const ReportConfig& config) {
  if (config.n_min < 1 || config.s_min < 1 || config.n_max < config.n_min || config.s_max < config.s_min) {
    throw InputError("invalid n or s range");
  }
  EquivalenceReport report;
  report.config = config;
  report.p = to_string(enc.p);
  report.q = to_string(enc.q);
  for (std::uint64_t n = config.n_min; n <= config.n_max; ++n) {
    for (std::uint64_t s = config.s_min; s <= config.s_max; ++s) {
      const auto start = std::chrono::steady_clock::now();
      ReportRow row;
      row.n = n;
      row.s = s;
      row.oracle = diophantine_oracle(enc.p, enc.q, n, s, config.oracle_bound);
      const SparseMatrix k = k_ns(gens, n, s);
      const SparseMatrix m = m_ns(gens, n, s);
      row.matrix_one = solve_one_unknown(k, m, gens, config.max_len);
      row.matrix_two = solve_two_unknowns(k, m, gens, config.max_len);
      if (config.morphism_level) {
        row.morphism_one =
            solve_one_unknown_morphism(enc, gens, f_ns_word(n, s), g_ns_word(n, s), config.max_len, config.limits);
        row.morphism_two =
            solve_two_unknowns_morphism(enc, gens, f_ns_word(n, s), g_ns_word(n, s), config.max_len, config.limits);
      }
      if (row.matrix_one.found) row.recovery_one = recover_tuple(enc, n, s, row.matrix_one.x);
      if (row.matrix_two.found) row.recovery_two = recover_tuple(enc, n, s, row.matrix_two.x, row.matrix_two.y);

      const bool yes = row.oracle.has_value();
      std::vector<const SolveResult*> solvers{&row.matrix_one, &row.matrix_two};
      if (row.morphism_one) solvers.push_back(&*row.morphism_one);
      if (row.morphism_two) solvers.push_back(&*row.morphism_two);
      bool agree = true;
      bool explained = true;
      for (const auto* r : solvers) {
        if (r->found == yes) continue;
        agree = false;
        if (yes) {
          explained = explained && witness_length(*row.oracle) > config.max_len;
        } else {
          const auto rec = r->two_unknowns ? recover_tuple(enc, n, s, r->x, r->y) : recover_tuple(enc, n, s, r->x);
          const bool beyond =
              rec.ok && std::any_of(rec.tuple.begin() + 2, rec.tuple.end(), [&](auto v) { return v > config.oracle_bound; });
          explained = explained && beyond;
        }
      }
      row.status = agree ? "agree" : explained ? "bound" : "disagree";
      if (!agree && explained) row.note = "difference explained by the search bounds";
      for (const auto* rec : {&row.recovery_one, &row.recovery_two}) {
        if (*rec && !(*rec)->ok) row.note = "witness does not recover: " + (*rec)->reason;
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json result_json(const SolveResult& r) {
  ordered_json j;
  j["found"] = r.found;
  j["x"] = r.found ? ordered_json(to_string(r.x)) : ordered_json(nullptr);
  if (r.two_unknowns) j["y"] = r.found ? ordered_json(to_string(r.y)) : ordered_json(nullptr);
  j["explored"] = r.explored;
  j["matrix_backed"] = r.matrix_backed;
  j["certificate"] = r.certificate;
  return j;
}

ordered_json recovery_json(const std::optional<Recovery>& r) {
  if (!r) return nullptr;
  ordered_json j;
  j["ok"] = r->ok;
  j["tuple"] = r->tuple;
  j["reason"] = r->reason;
  return j;
}

std::string verdict(const SolveResult& r) {
  if (!r.found) return "no";
  if (!r.two_unknowns) return "yes x=" + to_string(r.x);
  return "yes x=" + to_string(r.x) + " y=" + to_string(r.y);
}

}  // namespace

std::string render_machine(const EquivalenceReport& report) {
  ordered_json j;
  j["format"] = "lineq-equivalence-report/1";
  j["p"] = report.p;
  j["q"] = report.q;
  const auto& c = report.config;
  j["config"] = {{"n", {c.n_min, c.n_max}},
                 {"s", {c.s_min, c.s_max}},
                 {"oracle_bound", c.oracle_bound},
                 {"max_len", c.max_len},
                 {"morphism_level", c.morphism_level},
                 {"expansion_cap", c.limits.expansion_cap},
                 {"alphabet_budget", c.limits.alphabet_budget}};
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["n"] = row.n;
    r["s"] = row.s;
    r["oracle"] = row.oracle ? ordered_json(*row.oracle) : ordered_json(nullptr);
    r["matrix_one"] = result_json(row.matrix_one);
    r["matrix_two"] = result_json(row.matrix_two);
    r["morphism_one"] = row.morphism_one ? result_json(*row.morphism_one) : ordered_json(nullptr);
    r["morphism_two"] = row.morphism_two ? result_json(*row.morphism_two) : ordered_json(nullptr);
    r["recovery_one"] = recovery_json(row.recovery_one);
    r["recovery_two"] = recovery_json(row.recovery_two);
    r["status"] = row.status;
    r["note"] = row.note;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["all_agree"] = report.all_agree();
  return j.dump(2) + "\n";
}

std::string render_human(const EquivalenceReport& report) {
  std::ostringstream out;
  const auto& c = report.config;
  out << "p = " << report.p << "\nq = " << report.q << "\n";
  out << "oracle bound B = " << c.oracle_bound << ", solver bound L = " << c.max_len << "\n\n";
  for (const auto& row : report.rows) {
    out << "n=" << row.n << " s=" << row.s << "  oracle: ";
    if (row.oracle) {
      out << "yes (";
      for (std::size_t i = 0; i < row.oracle->size(); ++i) out << (i ? "," : "") << (*row.oracle)[i];
      out << ")";
    } else {
      out << "no";
    }
    out << "\n  matrix   ax=bx: " << verdict(row.matrix_one) << "   ax=by: " << verdict(row.matrix_two) << "\n";
    if (row.morphism_one) {
      out << "  morphism ax=bx: " << verdict(*row.morphism_one) << "   ax=by: " << verdict(*row.morphism_two);
      if (row.morphism_one->matrix_backed || row.morphism_two->matrix_backed) out << "  (matrix-backed)";
      out << "\n";
    }
    out << "  " << row.status;
    if (!row.note.empty()) out << ": " << row.note;
    out << "  [" << static_cast<long long>(row.seconds * 1000) << " ms]\n";
  }
  out << "\n" << (report.all_agree() ? "all methods agree" : "methods disagree") << "\n";
  out << "bounded search: 'no' means no solution within L, not that none exists\n";
  return out.str();
}

}  // namespace lineq
