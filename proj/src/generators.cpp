#include "lineq/generators.hpp"

#include "lineq/error.hpp"

namespace lineq {

bool operator<(const GeneratorWord& a, const GeneratorWord& b) {
  if (a.symbols.size() != b.symbols.size()) return a.symbols.size() < b.symbols.size();
  return a.symbols < b.symbols;
}

GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b) {
  GeneratorWord out = a;
  out.symbols.insert(out.symbols.end(), b.symbols.begin(), b.symbols.end());
  return out;
}

std::string to_string(const GeneratorWord& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.symbols.size(); ++i) {
    if (i > 0) out += ',';
    out += static_cast<char>('0' + w.symbols[i]);
  }
  return out + "]";
}

GeneratorWord parse_generator_word(std::string_view text) {
  GeneratorWord w;
  for (char c : text) {
    if (c == '1' || c == '2') {
      w.symbols.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != '[' && c != ']' && c != ',' && c != ' ') {
      throw InputError("invalid generator word '" + std::string(text) + "'");
    }
  }
  return w;
}

GeneratorWord prod_word(std::span<const std::uint64_t> ns) {
  GeneratorWord w;
  for (auto n : ns) {
    if (n == 0) throw InputError("Prod arguments must be positive");
    w.symbols.insert(w.symbols.end(), n, 1);
    w.symbols.push_back(2);
  }
  return w;
}

GeneratorWord f_ns_word(std::uint64_t n, std::uint64_t s) {
  const std::uint64_t ns[] = {n, s};
  return concat(GeneratorWord{{2, 2}}, prod_word(ns));
}

GeneratorWord g_ns_word(std::uint64_t n, std::uint64_t s) {
  const std::uint64_t ns[] = {n, s};
  return concat(GeneratorWord{{2, 2, 2}}, prod_word(ns));
}

std::optional<ProdShape> parse_prod_shape(const GeneratorWord& w) {
  ProdShape shape;
  std::uint64_t ones = 0;
  for (auto s : w.symbols) {
    if (s == 1) {
      ++ones;
    } else {
      if (ones == 0) return std::nullopt;
      shape.exponents.push_back(ones);
      ones = 0;
    }
  }
  shape.trailing_g1 = ones;
  return shape;
}

std::vector<GeneratorWord> words_of_length(std::size_t len) {
  if (len >= 40) throw InputError("generator word length too large to enumerate");
  const std::uint64_t count = std::uint64_t{1} << len;
  std::vector<GeneratorWord> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    GeneratorWord w;
    w.symbols.resize(len);
    for (std::size_t i = 0; i < len; ++i) w.symbols[i] = ((code >> (len - 1 - i)) & 1U) ? 2 : 1;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<GeneratorWord> words_up_to(std::size_t max_len) {
  std::vector<GeneratorWord> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto ws = words_of_length(len);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

}  // namespace lineq
