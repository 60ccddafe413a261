#pragma once

#include <string>
#include <string_view>

#include "lineq/encode.hpp"
#include "lineq/matsem.hpp"
#include "lineq/mtriple.hpp"

namespace lineq {

// Text interchange. Big integers travel as decimal strings; every reader
// throws InputError on a malformed or inconsistent document.

/// {"arity": t, "monomials": [{"coeff": "3", "exponents": [2, 0]}]}
Polynomial polynomial_from_json(std::string_view text);
std::string polynomial_to_json(const Polynomial& p);

/// Alphabet, levels, both morphism tables and the witness.
std::string mtriple_to_json(const ComputableMap& c);
ComputableMap mtriple_from_json(std::string_view text);

std::string encoder_to_json(const Encoder& enc);
/// Rebuilds the encoder and re-checks all of its structural invariants.
Encoder encoder_from_json(std::string_view text);

/// {"dim": k, "entries": [[row, col, "value"], ...]}
std::string matrix_to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(std::string_view text);
/// Both generator matrices with the letter names of D.
std::string matrices_to_json(const EncoderMatrices& m, const Alphabet& alphabet);

}  // namespace lineq
