#include "lineq/nat.hpp"

#include <limits>

#include "lineq/error.hpp"

namespace lineq {

namespace {

mpz_class from_u64(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

const mpz_class& u64_max() {
  static const mpz_class m = from_u64(std::numeric_limits<std::uint64_t>::max());
  return m;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Nat::Nat(const mpz_class& v) {
  if (sgn(v) < 0) throw InputError("negative value where a natural number is required");
  big_ = std::make_unique<mpz_class>(v);
  normalize();
}

Nat::Nat(const Nat& other) : small_(other.small_) {
  if (other.big_) big_ = std::make_unique<mpz_class>(*other.big_);
}

Nat& Nat::operator=(const Nat& other) {
  if (this == &other) return *this;
  small_ = other.small_;
  if (other.big_) {
    if (big_) {
      *big_ = *other.big_;
    } else {
      big_ = std::make_unique<mpz_class>(*other.big_);
    }
  } else {
    big_.reset();
  }
  return *this;
}

Nat Nat::from_string(std::string_view text) {
  if (text.empty()) throw InputError("empty natural number");
  for (char c : text) {
    if (c < '0' || c > '9') throw InputError("invalid natural number: " + std::string(text));
  }
  if (text.size() <= 19) {
    std::uint64_t v = 0;
    for (char c : text) v = v * 10 + static_cast<std::uint64_t>(c - '0');
    return Nat(v);
  }
  return Nat(mpz_class(std::string(text), 10));
}

std::string Nat::to_string() const {
  if (big_) return big_->get_str(10);
  return std::to_string(small_);
}

std::uint64_t Nat::to_u64() const {
  if (big_) throw InputError("value " + to_string() + " does not fit in 64 bits");
  return small_;
}

mpz_class Nat::to_mpz() const {
  if (big_) return *big_;
  return from_u64(small_);
}

void Nat::normalize() {
  if (big_ && cmp(*big_, u64_max()) <= 0) {
    std::uint64_t v = 0;
    std::size_t count = 0;
    mpz_export(&v, &count, -1, sizeof v, 0, 0, big_->get_mpz_t());
    small_ = count == 0 ? 0 : v;
    big_.reset();
  } else if (big_) {
    small_ = 0;
  }
}

Nat& Nat::operator+=(const Nat& rhs) {
  if (!big_ && !rhs.big_) {
    std::uint64_t r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  mpz_class sum = to_mpz() + rhs.to_mpz();
  big_ = std::make_unique<mpz_class>(std::move(sum));
  normalize();
  return *this;
}

Nat& Nat::operator*=(const Nat& rhs) {
  if (!big_ && !rhs.big_) {
    std::uint64_t r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  mpz_class prod = to_mpz() * rhs.to_mpz();
  big_ = std::make_unique<mpz_class>(std::move(prod));
  normalize();
  return *this;
}

void Nat::add_product(const Nat& a, const Nat& b) {
  if (!big_ && !a.big_ && !b.big_) {
    std::uint64_t p;
    std::uint64_t r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  mpz_class acc = to_mpz();
  mpz_addmul(acc.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  big_ = std::make_unique<mpz_class>(std::move(acc));
  normalize();
}

bool operator==(const Nat& a, const Nat& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  if (!a.big_) return std::strong_ordering::less;
  if (!b.big_) return std::strong_ordering::greater;
  int c = cmp(*a.big_, *b.big_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::size_t Nat::hash() const {
  if (!big_) return static_cast<std::size_t>(mix(small_));
  std::uint64_t h = 0x51ed270b27a5c3d1ULL;
  const std::size_t limbs = mpz_size(big_->get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h = mix(h ^ static_cast<std::uint64_t>(mpz_getlimbn(big_->get_mpz_t(), static_cast<mp_size_t>(i))));
  }
  return static_cast<std::size_t>(h);
}

Nat pow(const Nat& base, std::uint64_t exponent) {
  Nat result(1);
  Nat b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace lineq
