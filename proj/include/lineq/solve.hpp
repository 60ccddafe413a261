#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lineq/encode.hpp"
#include "lineq/generators.hpp"
#include "lineq/matsem.hpp"

namespace lineq {

/// Lexicographically least (n3, ..., nt) in {1..bound}^{t-2} with
/// p(n, s, n3, ..., nt) = q(n, s, n3, ..., nt). For t = 2 the only candidate
/// is the empty tuple.
std::optional<std::vector<std::uint64_t>> diophantine_oracle(const Polynomial& p, const Polynomial& q, std::uint64_t n,
                                                             std::uint64_t s, std::uint64_t bound);

/// Prod(n3, ..., nt) as a generator word; empty for the empty tuple.
GeneratorWord witness_from_tuple(std::span<const std::uint64_t> tuple);

enum class Level { matrix, morphism };
std::string to_string(Level level);

struct SolveResult {
  bool found = false;
  Level level = Level::matrix;
  bool two_unknowns = false;
  GeneratorWord x;
  GeneratorWord y;
  /// Bound on |x| (and on |y|).
  std::size_t max_len = 0;
  /// Words (or pairs) examined.
  std::uint64_t explored = 0;
  /// A morphism-level confirmation ran over the expansion cap and rests on
  /// the matrix equality.
  bool matrix_backed = false;
  /// The common nonzero image: a row of a x for matrices, a letter image for
  /// morphisms. Empty when nothing was found.
  std::string certificate;
};

/// First x in shortlex order with |x| <= max_len, a X = b X and a X != O,
/// where X is the product of the generators along x.
SolveResult solve_one_unknown(const SparseMatrix& a, const SparseMatrix& b, const EncoderMatrices& gens,
                              std::size_t max_len);
/// First pair (x, y), ordered by |x| + |y|, then x in shortlex order, then y
/// lexicographically, with |x|, |y| <= max_len, a X = b Y and a X != O.
SolveResult solve_two_unknowns(const SparseMatrix& a, const SparseMatrix& b, const EncoderMatrices& gens,
                               std::size_t max_len);

/// The same searches over H, with the sides given as generator words. The
/// matrices act as an exact necessary filter; each surviving candidate is
/// confirmed letter by letter on words.
SolveResult solve_one_unknown_morphism(const Encoder& enc, const EncoderMatrices& gens, const GeneratorWord& a,
                                       const GeneratorWord& b, std::size_t max_len, const Limits& limits = {});
SolveResult solve_two_unknowns_morphism(const Encoder& enc, const EncoderMatrices& gens, const GeneratorWord& a,
                                        const GeneratorWord& b, std::size_t max_len, const Limits& limits = {});

/// Reads Prod(n, s) x back as Prod(m1, ..., mt) and checks that (m1, m2) =
/// (n, s) and p = q at m. For two unknowns both sides must give the same m.
struct Recovery {
  bool ok = false;
  std::vector<std::uint64_t> tuple;
  std::string reason;
};
Recovery recover_tuple(const Encoder& enc, std::uint64_t n, std::uint64_t s, const GeneratorWord& x);
Recovery recover_tuple(const Encoder& enc, std::uint64_t n, std::uint64_t s, const GeneratorWord& x,
                       const GeneratorWord& y);

struct ReportConfig {
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 1;
  std::uint64_t s_min = 1;
  std::uint64_t s_max = 1;
  std::uint64_t oracle_bound = 5;
  std::size_t max_len = 12;
  bool morphism_level = true;
  Limits limits;
};

struct ReportRow {
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  std::optional<std::vector<std::uint64_t>> oracle;
  SolveResult matrix_one;
  SolveResult matrix_two;
  std::optional<SolveResult> morphism_one;
  std::optional<SolveResult> morphism_two;
  std::optional<Recovery> recovery_one;
  std::optional<Recovery> recovery_two;
  /// "agree", "bound" (a one-sided difference the bounds explain) or
  /// "disagree".
  std::string status;
  std::string note;
  double seconds = 0;
};

struct EquivalenceReport {
  ReportConfig config;
  std::string p;
  std::string q;
  std::vector<ReportRow> rows;
  /// Every row agrees and every found witness recovers.
  bool all_agree() const;
};

EquivalenceReport equivalence_report(const Encoder& enc, const EncoderMatrices& gens, const ReportConfig& config);

/// JSON with stable key order and no timings.
std::string render_machine(const EquivalenceReport& report);
std::string render_human(const EquivalenceReport& report);

}  // namespace lineq
