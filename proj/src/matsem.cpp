#include "lineq/matsem.hpp"

#include <functional>

namespace lineq {

EncoderMatrices matrices_of_encoder(const Encoder& enc) { return {matrix_of(enc.g1), matrix_of(enc.g2)}; }

SparseMatrix times_word(const SparseMatrix& a, const EncoderMatrices& m, const GeneratorWord& w) {
  if (a.dim() != m.dim()) throw InputError("matrix dimension does not match the encoder");
  std::vector<SparseRow> rows = a.rows();
  RowAccumulator scratch(a.dim());
  for (auto s : w.symbols) {
    const SparseMatrix& g = m.generator(s);
    for (auto& row : rows) {
      if (!row.empty()) row = row_times(row, g, scratch);
    }
  }
  return SparseMatrix::from_rows(std::move(rows));
}

SparseMatrix word_matrix(const EncoderMatrices& m, const GeneratorWord& w) {
  if (w.empty()) return SparseMatrix::identity(m.dim());
  GeneratorWord rest{{w.symbols.begin() + 1, w.symbols.end()}};
  return times_word(m.generator(w.symbols[0]), m, rest);
}

SparseMatrix mprod(const EncoderMatrices& m, std::span<const std::uint64_t> ns) {
  if (ns.empty()) throw InputError("Mprod needs at least one argument");
  return word_matrix(m, prod_word(ns));
}

SparseMatrix k_ns(const EncoderMatrices& m, std::uint64_t n, std::uint64_t s) {
  return word_matrix(m, f_ns_word(n, s));
}

SparseMatrix m_ns(const EncoderMatrices& m, std::uint64_t n, std::uint64_t s) {
  return word_matrix(m, g_ns_word(n, s));
}

namespace {

SparseRow to_row(const ParikhVector& pv) {
  SparseRow row;
  row.reserve(pv.entries().size());
  for (const auto& [l, c] : pv.entries()) row.push_back({l, c});
  return row;
}

}  // namespace

FunctorialityReport functoriality_suite(const Encoder& enc, const EncoderMatrices& m, std::size_t max_len,
                                        const Limits& limits) {
  FunctorialityReport report;
  const std::size_t k = enc.alphabet->size();
  RowAccumulator scratch(k);

  const auto check_word = [&](const GeneratorWord& w, const SparseMatrix& product) {
    ++report.words;
    const auto fail = [&](Letter l) {
      if (report.failures++ == 0) report.first_failure = to_string(w) + " row " + enc.alphabet->name(l);
    };
    if (w.empty()) {
      for (Letter l = 0; l < k; ++l) {
        ++report.rows_compared;
        if (!(product.row(l) == SparseRow{{l, Nat(1)}})) fail(l);
      }
      return;
    }
    Chain chain(chain_steps(enc, w), limits);
    for (Letter l = 0; l < k; ++l) {
      ++report.rows_compared;
      SparseRow morph_row;
      try {
        morph_row = to_row(parikh(chain.image(l, 0)));
      } catch (const CapExceeded&) {
        ++report.streamed_rows;
        morph_row = to_row(chain.streamed_parikh(Word::letter(enc.alphabet, l)));
      }
      if (!(morph_row == product.row(l))) fail(l);
    }
  };

  // depth-first over the word trie, extending the product one generator at a time
  GeneratorWord w;
  std::function<void(const SparseMatrix&)> visit = [&](const SparseMatrix& product) {
    check_word(w, product);
    if (w.size() == max_len) return;
    for (std::uint8_t s : {1, 2}) {
      std::vector<SparseRow> rows;
      rows.reserve(k);
      for (const auto& row : product.rows()) rows.push_back(row_times(row, m.generator(s), scratch));
      w.symbols.push_back(s);
      visit(SparseMatrix::from_rows(std::move(rows)));
      w.symbols.pop_back();
    }
  };
  visit(SparseMatrix::identity(k));
  return report;
}

}  // namespace lineq
