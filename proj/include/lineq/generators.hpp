#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lineq {

/// A product of the two generators, written as a sequence over {1, 2}
/// (1 = g1 / M1, 2 = g2 / M2). The empty word is the identity.
struct GeneratorWord {
  std::vector<std::uint8_t> symbols;

  std::size_t size() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
  /// Shortlex: shorter first, then lexicographic with 1 < 2.
  friend bool operator<(const GeneratorWord& a, const GeneratorWord& b);
};

GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b);

/// "[1,1,2]"
std::string to_string(const GeneratorWord& w);
/// Accepts "[1,1,2]", "1,1,2", "112" and "[]". Throws InputError otherwise.
GeneratorWord parse_generator_word(std::string_view text);

/// g1^{n1} g2 g1^{n2} g2 ... g1^{na} g2. Every entry must be positive.
GeneratorWord prod_word(std::span<const std::uint64_t> ns);
/// g2^2 Prod(n, s)
GeneratorWord f_ns_word(std::uint64_t n, std::uint64_t s);
/// g2^3 Prod(n, s)
GeneratorWord g_ns_word(std::uint64_t n, std::uint64_t s);

/// Reads a word of the form Prod(m1, ..., ma) g1^gamma back into its
/// exponents. Returns nullopt if the word has that shape with a zero
/// exponent somewhere (a g2 not preceded by g1).
struct ProdShape {
  std::vector<std::uint64_t> exponents;
  std::uint64_t trailing_g1 = 0;
};
std::optional<ProdShape> parse_prod_shape(const GeneratorWord& w);

/// All words of length exactly `len` in lexicographic order (1 < 2).
std::vector<GeneratorWord> words_of_length(std::size_t len);
/// All words of length at most `max_len` in shortlex order.
std::vector<GeneratorWord> words_up_to(std::size_t max_len);

}  // namespace lineq
