#pragma once

#include <cstdint>
#include <span>

#include "lineq/encode.hpp"
#include "lineq/generators.hpp"
#include "lineq/matrix.hpp"

namespace lineq {

/// M1 and M2, the matrices of g1 and g2.
struct EncoderMatrices {
  SparseMatrix m1;
  SparseMatrix m2;
  const SparseMatrix& generator(std::uint8_t symbol) const { return symbol == 1 ? m1 : m2; }
  std::size_t dim() const { return m1.dim(); }
};

EncoderMatrices matrices_of_encoder(const Encoder& enc);

/// a * M_{w1} * ... * M_{wk}, multiplied left to right so only the nonzero
/// rows of a are ever propagated.
SparseMatrix times_word(const SparseMatrix& a, const EncoderMatrices& m, const GeneratorWord& w);
/// The matrix of a generator word; the identity for the empty word.
SparseMatrix word_matrix(const EncoderMatrices& m, const GeneratorWord& w);

SparseMatrix mprod(const EncoderMatrices& m, std::span<const std::uint64_t> ns);
/// M2^2 Mprod(n, s)
SparseMatrix k_ns(const EncoderMatrices& m, std::uint64_t n, std::uint64_t s);
/// M2^3 Mprod(n, s)
SparseMatrix m_ns(const EncoderMatrices& m, std::uint64_t n, std::uint64_t s);

/// For every generator word of length at most max_len, compares the matrix of
/// the composed morphism with the product of M1 and M2, row by row. Images
/// over the expansion cap are counted without being materialized.
struct FunctorialityReport {
  std::uint64_t words = 0;
  std::uint64_t rows_compared = 0;
  /// Rows whose morphism side had to be streamed.
  std::uint64_t streamed_rows = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

FunctorialityReport functoriality_suite(const Encoder& enc, const EncoderMatrices& m, std::size_t max_len,
                                        const Limits& limits = {});

}  // namespace lineq
