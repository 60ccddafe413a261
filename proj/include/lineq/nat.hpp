#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lineq {

/// Arbitrary-precision natural number.
///
/// Values that fit in 64 bits are stored inline; larger values spill into a
/// heap-allocated mpz_class. The representation is canonical: a value is
/// stored in the big form iff it exceeds UINT64_MAX, so equality and hashing
/// never need to look across forms.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Nat(const mpz_class& v);

  Nat(const Nat& other);
  Nat& operator=(const Nat& other);
  Nat(Nat&&) noexcept = default;
  Nat& operator=(Nat&&) noexcept = default;
  ~Nat() = default;

  /// Parses a nonempty string of decimal digits. Throws InputError otherwise.
  static Nat from_string(std::string_view text);
  std::string to_string() const;

  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  bool fits_u64() const { return !big_; }
  /// Throws InputError when the value does not fit.
  std::uint64_t to_u64() const;
  mpz_class to_mpz() const;

  Nat& operator+=(const Nat& rhs);
  Nat& operator*=(const Nat& rhs);
  /// *this += a * b
  void add_product(const Nat& a, const Nat& b);

  friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
  friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }

  friend bool operator==(const Nat& a, const Nat& b);
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b);

  std::size_t hash() const;

 private:
  void normalize();

  std::uint64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Nat pow(const Nat& base, std::uint64_t exponent);

struct NatHash {
  std::size_t operator()(const Nat& n) const { return n.hash(); }
};

}  // namespace lineq
