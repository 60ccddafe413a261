#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lineq {

/// Malformed or inconsistent input: arity mismatch, foreign alphabet, bad
/// interchange document, violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction needs more letters than the configured alphabet budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Materializing a word would exceed the configured expansion cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resource bounds shared by every construction that can grow without limit.
struct Limits {
  /// Maximum number of runs a materialized word may hold.
  std::uint64_t expansion_cap = 1'000'000;
  /// Maximum number of letters in any constructed alphabet.
  std::uint64_t alphabet_budget = 32'768;
};

}  // namespace lineq
