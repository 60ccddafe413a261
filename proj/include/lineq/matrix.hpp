#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lineq/nat.hpp"

namespace lineq {

struct Entry {
  std::uint32_t col;
  Nat value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse row: entries sorted by column, no zeros.
using SparseRow = std::vector<Entry>;

/// Square matrix over the naturals stored as sparse rows.
class SparseMatrix {
 public:
  explicit SparseMatrix(std::size_t dim = 0);

  static SparseMatrix identity(std::size_t dim);
  struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    Nat value;
  };
  /// Duplicate coordinates are summed; zeros are dropped.
  static SparseMatrix from_triplets(std::size_t dim, std::vector<Triplet> triplets);
  /// Rows given as sparse rows; each must be sorted and zero-free.
  static SparseMatrix from_rows(std::vector<SparseRow> rows);

  std::size_t dim() const { return rows_.size(); }
  const SparseRow& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  Nat at(std::size_t i, std::size_t j) const;
  std::size_t nnz() const;
  bool is_zero() const;
  bool is_upper_triangular() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::vector<SparseRow> rows_;
};

/// Reusable dense scratch space for row-times-matrix products.
class RowAccumulator {
 public:
  explicit RowAccumulator(std::size_t dim) : values_(dim), touched_flag_(dim, 0) {}
  void add_product(std::uint32_t col, const Nat& a, const Nat& b);
  /// Extracts the accumulated row (sorted) and resets the scratch space.
  SparseRow take();

 private:
  std::vector<Nat> values_;
  std::vector<std::uint8_t> touched_flag_;
  std::vector<std::uint32_t> touched_;
};

/// row * m
SparseRow row_times(const SparseRow& row, const SparseMatrix& m, RowAccumulator& scratch);
SparseRow row_times(const SparseRow& row, const SparseMatrix& m);

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b);
/// Binary exponentiation; mat_pow(a, 0) is the identity.
SparseMatrix mat_pow(const SparseMatrix& a, const Nat& n);
/// Kronecker product a (x) b.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
/// Block-diagonal sum.
SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b);

/// 64-bit structural fingerprint; equal matrices hash equally.
std::uint64_t fingerprint(const SparseMatrix& m);
std::uint64_t fingerprint(const SparseRow& r, std::uint64_t seed = 0);

/// Dense rendering for small matrices, e.g. "[[1,1],[0,1]]".
std::string to_dense_string(const SparseMatrix& m);

}  // namespace lineq
