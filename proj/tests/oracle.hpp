#pragma once

// Naive reference implementations shared by the tests. Each one works on
// plain vectors and mpz_class so it shares no code with the library.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Dense = std::vector<std::vector<mpz_class>>;
using Letters = std::vector<std::uint32_t>;
using Table = std::vector<Letters>;

inline mpz_class ipow(const mpz_class& b, unsigned e) {
  mpz_class r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

struct Term {
  unsigned long coeff;
  std::vector<unsigned> exps;
};

inline mpz_class eval(const std::vector<Term>& terms, const std::vector<mpz_class>& x) {
  mpz_class sum = 0;
  for (const auto& t : terms) {
    mpz_class v = t.coeff;
    for (std::size_t i = 0; i < t.exps.size(); ++i) v *= ipow(x[i], t.exps[i]);
    sum += v;
  }
  return sum;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Dense dense_kron(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), m = b.size();
  Dense c(n * m, std::vector<mpz_class>(n * m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) c[i * m + k][j * m + l] = a[i][j] * b[k][l];
  return c;
}

// Letter-by-letter substitution on fully expanded words.
inline Letters substitute(const Table& h, const Letters& w) {
  Letters out;
  for (auto l : w) out.insert(out.end(), h[l].begin(), h[l].end());
  return out;
}

inline std::map<std::uint32_t, std::uint64_t> counts(const Letters& w) {
  std::map<std::uint32_t, std::uint64_t> c;
  for (auto l : w) ++c[l];
  return c;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

}  // namespace oracle
