#include "lineq/matrix.hpp"

#include <algorithm>
#include <map>

#include "lineq/error.hpp"

namespace lineq {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_same_dim(const SparseMatrix& a, const SparseMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw InputError(std::string(what) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
  }
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t dim) : rows_(dim) {}

SparseMatrix SparseMatrix::identity(std::size_t dim) {
  SparseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.rows_[i].push_back({static_cast<std::uint32_t>(i), Nat(1)});
  return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t dim, std::vector<Triplet> triplets) {
  std::vector<std::map<std::uint32_t, Nat>> acc(dim);
  for (auto& t : triplets) {
    if (t.row >= dim || t.col >= dim) throw InputError("matrix triplet out of range");
    acc[t.row][t.col] += t.value;
  }
  SparseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (auto& [c, v] : acc[i]) {
      if (!v.is_zero()) m.rows_[i].push_back({c, std::move(v)});
    }
  }
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::vector<SparseRow> rows) {
  SparseMatrix m(0);
  const std::size_t dim = rows.size();
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k].col >= dim || r[k].value.is_zero() || (k > 0 && r[k - 1].col >= r[k].col)) {
        throw InputError("malformed sparse row");
      }
    }
  }
  m.rows_ = std::move(rows);
  return m;
}

Nat SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == j) return it->value;
  return Nat(0);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseRow& r) { return r.empty(); });
}

bool SparseMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].empty() && rows_[i].front().col < i) return false;
  }
  return true;
}

void RowAccumulator::add_product(std::uint32_t col, const Nat& a, const Nat& b) {
  if (!touched_flag_[col]) {
    touched_flag_[col] = 1;
    touched_.push_back(col);
  }
  values_[col].add_product(a, b);
}

SparseRow RowAccumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseRow out;
  out.reserve(touched_.size());
  for (std::uint32_t c : touched_) {
    if (!values_[c].is_zero()) out.push_back({c, std::move(values_[c])});
    values_[c] = Nat(0);
    touched_flag_[c] = 0;
  }
  touched_.clear();
  return out;
}

SparseRow row_times(const SparseRow& row, const SparseMatrix& m, RowAccumulator& scratch) {
  for (const auto& e : row) {
    for (const auto& f : m.row(e.col)) scratch.add_product(f.col, e.value, f.value);
  }
  return scratch.take();
}

SparseRow row_times(const SparseRow& row, const SparseMatrix& m) {
  RowAccumulator scratch(m.dim());
  return row_times(row, m, scratch);
}

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  RowAccumulator scratch(b.dim());
  std::vector<SparseRow> rows(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!a.row(i).empty()) rows[i] = row_times(a.row(i), b, scratch);
  }
  return SparseMatrix::from_rows(std::move(rows));
}

SparseMatrix mat_pow(const SparseMatrix& a, const Nat& n) {
  const mpz_class e = n.to_mpz();
  SparseMatrix result = SparseMatrix::identity(a.dim());
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return result;
  // left-to-right square and multiply
  for (std::size_t i = bits; i-- > 0;) {
    result = mat_mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mat_mul(result, a);
  }
  return result;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  const std::size_t n = a.dim() * b.dim();
  std::vector<SparseRow> rows(n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < b.dim(); ++k) {
      auto& out = rows[i * b.dim() + k];
      for (const auto& ea : a.row(i)) {
        for (const auto& eb : b.row(k)) {
          out.push_back({static_cast<std::uint32_t>(ea.col * b.dim() + eb.col), ea.value * eb.value});
        }
      }
    }
  }
  return SparseMatrix::from_rows(std::move(rows));
}

SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<SparseRow> rows = a.rows();
  const auto offset = static_cast<std::uint32_t>(a.dim());
  for (const auto& r : b.rows()) {
    SparseRow shifted;
    shifted.reserve(r.size());
    for (const auto& e : r) shifted.push_back({e.col + offset, e.value});
    rows.push_back(std::move(shifted));
  }
  return SparseMatrix::from_rows(std::move(rows));
}

std::uint64_t fingerprint(const SparseRow& r, std::uint64_t seed) {
  std::uint64_t h = mix(seed ^ 0x2545f4914f6cdd1dULL);
  for (const auto& e : r) {
    h = mix(h ^ e.col);
    h = mix(h ^ e.value.hash());
  }
  return h;
}

std::uint64_t fingerprint(const SparseMatrix& m) {
  std::uint64_t h = mix(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (!m.row(i).empty()) h = mix(h ^ fingerprint(m.row(i), i + 1));
  }
  return h;
}

std::string to_dense_string(const SparseMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j > 0) out += ',';
      out += m.at(i, j).to_string();
    }
    out += ']';
  }
  return out + "]";
}

}  // namespace lineq
