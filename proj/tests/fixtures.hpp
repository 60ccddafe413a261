#pragma once

#include "lineq/encode.hpp"
#include "lineq/matsem.hpp"
#include "lineq/poly.hpp"

namespace fixtures {

inline lineq::Polynomial mono(std::size_t arity, std::vector<std::uint32_t> exps, std::uint64_t coeff = 1) {
  return lineq::Polynomial::from_terms(arity, {{lineq::Nat(coeff), std::move(exps)}});
}

// p = x2, q = x3^2: s is a square
struct Squares {
  lineq::Encoder enc;
  lineq::EncoderMatrices mats;
};

inline const Squares& squares() {
  static const Squares s = [] {
    auto enc = lineq::build_encoder(mono(3, {0, 1, 0}), mono(3, {0, 0, 2}));
    auto mats = lineq::matrices_of_encoder(enc);
    return Squares{std::move(enc), std::move(mats)};
  }();
  return s;
}

}  // namespace fixtures
