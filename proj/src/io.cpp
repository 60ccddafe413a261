#include "lineq/io.hpp"

#include "json.hpp"

namespace lineq {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

ordered_json poly_json(const Polynomial& p) {
  ordered_json j;
  j["arity"] = p.arity();
  ordered_json monos = ordered_json::array();
  for (const auto& m : p.monomials()) {
    ordered_json mj;
    mj["coeff"] = m.coeff.to_string();
    mj["exponents"] = m.exponents;
    monos.push_back(std::move(mj));
  }
  j["monomials"] = std::move(monos);
  return j;
}

Polynomial poly_from(const json& j) {
  const auto arity = field<std::int64_t>(j, "arity");
  if (arity < 1) throw InputError("arity must be positive");
  const json& monos = member(j, "monomials");
  if (!monos.is_array()) throw InputError("'monomials' must be an array");
  std::vector<Monomial> terms;
  for (const auto& m : monos) {
    const json& c = member(m, "coeff");
    Nat coeff;
    if (c.is_string()) {
      coeff = Nat::from_string(c.get<std::string>());
    } else if (c.is_number_unsigned() || (c.is_number_integer() && c.get<std::int64_t>() >= 0)) {
      coeff = Nat(c.get<std::uint64_t>());
    } else {
      throw InputError("coefficients must be nonnegative decimal strings");
    }
    const json& ex = member(m, "exponents");
    if (!ex.is_array() || ex.size() != static_cast<std::size_t>(arity)) {
      throw InputError("each monomial needs " + std::to_string(arity) + " exponents");
    }
    std::vector<std::uint32_t> exps;
    for (const auto& e : ex) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0 || e.get<std::int64_t>() > 1'000'000) {
        throw InputError("exponents must be small nonnegative integers");
      }
      exps.push_back(static_cast<std::uint32_t>(e.get<std::int64_t>()));
    }
    terms.push_back({std::move(coeff), std::move(exps)});
  }
  return Polynomial::from_terms(static_cast<std::size_t>(arity), std::move(terms));
}

ordered_json alphabet_json(const Alphabet& a) {
  ordered_json j;
  j["letters"] = a.names();
  j["levels"] = a.level_sizes();
  return j;
}

AlphabetPtr alphabet_from(const json& j) {
  return make_alphabet(field<std::vector<std::string>>(j, "letters"), field<std::vector<std::size_t>>(j, "levels"));
}

ordered_json morphism_json(const Morphism& m) {
  ordered_json table = ordered_json::array();
  for (Letter l = 0; l < m.domain()->size(); ++l) table.push_back({m.domain()->name(l), to_text(m.image(l))});
  return table;
}

Morphism morphism_from(const json& table, const AlphabetPtr& a) {
  if (!table.is_array() || table.size() != a->size()) {
    throw InputError("morphism table must list all " + std::to_string(a->size()) + " letters");
  }
  std::vector<Word> images;
  images.reserve(a->size());
  for (Letter l = 0; l < a->size(); ++l) {
    const json& entry = table[l];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_string()) {
      throw InputError("morphism table entries are [letter, image] pairs");
    }
    if (entry[0].get<std::string>() != a->name(l)) {
      throw InputError("morphism table out of order at letter '" + a->name(l) + "'");
    }
    images.push_back(parse_word(a, entry[1].get<std::string>()));
  }
  return Morphism(a, a, std::move(images));
}

void expect_format(const json& j, const std::string& tag) {
  if (field<std::string>(j, "format") != tag) throw InputError("expected a '" + tag + "' document");
}

}  // namespace

Polynomial polynomial_from_json(std::string_view text) { return poly_from(parse(text)); }

std::string polynomial_to_json(const Polynomial& p) { return poly_json(p).dump(2) + "\n"; }

std::string mtriple_to_json(const ComputableMap& c) {
  ordered_json j;
  j["format"] = "lineq-mtriple/1";
  j["t"] = c.triple.dimension;
  j["alphabet"] = alphabet_json(*c.triple.alphabet);
  j["g1"] = morphism_json(c.triple.g1);
  j["g2"] = morphism_json(c.triple.g2);
  j["witness"] = to_text(c.witness);
  return j.dump(2) + "\n";
}

ComputableMap mtriple_from_json(std::string_view text) {
  const json j = parse(text);
  expect_format(j, "lineq-mtriple/1");
  const auto t = field<std::int64_t>(j, "t");
  if (t < 1) throw InputError("dimension must be positive");
  auto a = alphabet_from(member(j, "alphabet"));
  MTriple triple{a, morphism_from(member(j, "g1"), a), morphism_from(member(j, "g2"), a), static_cast<std::size_t>(t)};
  return {std::move(triple), parse_word(a, field<std::string>(j, "witness"))};
}

std::string encoder_to_json(const Encoder& enc) {
  ordered_json j;
  j["format"] = "lineq-encoder/1";
  j["t"] = enc.t;
  j["p"] = poly_json(enc.p);
  j["q"] = poly_json(enc.q);
  j["p1"] = poly_json(enc.p1);
  j["q1"] = poly_json(enc.q1);
  j["alphabet"] = alphabet_json(*enc.alphabet);
  std::vector<std::size_t> a_sizes;
  std::vector<std::size_t> b_sizes;
  for (const auto& r : enc.a_blocks) a_sizes.push_back(r.size());
  for (const auto& r : enc.b_blocks) b_sizes.push_back(r.size());
  j["blocks"] = {{"A", a_sizes}, {"B", b_sizes}};
  j["u"] = to_text(enc.u);
  j["v"] = to_text(enc.v);
  j["g1"] = morphism_json(enc.g1);
  j["g2"] = morphism_json(enc.g2);
  return j.dump(1) + "\n";
}

Encoder encoder_from_json(std::string_view text) {
  const json j = parse(text);
  expect_format(j, "lineq-encoder/1");
  const auto t = field<std::int64_t>(j, "t");
  if (t < 2) throw InputError("encoder dimension must be at least 2");
  auto a = alphabet_from(member(j, "alphabet"));
  const json& blocks = member(j, "blocks");
  const auto a_sizes = field<std::vector<std::size_t>>(blocks, "A");
  const auto b_sizes = field<std::vector<std::size_t>>(blocks, "B");
  if (a_sizes.size() != static_cast<std::size_t>(t) || b_sizes.size() != static_cast<std::size_t>(t) ||
      a->levels() != static_cast<std::size_t>(t) + 1) {
    throw InputError("block sizes do not match the dimension");
  }
  std::vector<LetterRange> a_blocks;
  std::vector<LetterRange> b_blocks;
  for (std::size_t lv = 0; lv < a_sizes.size(); ++lv) {
    const Letter begin = lv == 0 ? 4 : a->level_begin(lv);
    const auto as = static_cast<Letter>(a_sizes[lv]);
    const auto bs = static_cast<Letter>(b_sizes[lv]);
    a_blocks.push_back({begin, begin + as});
    b_blocks.push_back({begin + as, begin + as + bs});
  }
  Encoder enc{
      .t = static_cast<std::size_t>(t),
      .p = poly_from(member(j, "p")),
      .q = poly_from(member(j, "q")),
      .p1 = poly_from(member(j, "p1")),
      .q1 = poly_from(member(j, "q1")),
      .alphabet = a,
      .g1 = morphism_from(member(j, "g1"), a),
      .g2 = morphism_from(member(j, "g2"), a),
      .u = parse_word(a, field<std::string>(j, "u")),
      .v = parse_word(a, field<std::string>(j, "v")),
      .a_blocks = std::move(a_blocks),
      .b_blocks = std::move(b_blocks),
  };
  const auto issues = check_encoder(enc);
  if (!issues.empty()) throw InputError("invalid encoder: " + issues.front());
  return enc;
}

std::string matrix_to_json(const SparseMatrix& m) {
  ordered_json j;
  j["dim"] = m.dim();
  ordered_json entries = ordered_json::array();
  for (std::uint32_t i = 0; i < m.dim(); ++i) {
    for (const auto& e : m.row(i)) entries.push_back({i, e.col, e.value.to_string()});
  }
  j["entries"] = std::move(entries);
  return j.dump() + "\n";
}

SparseMatrix matrix_from_json(std::string_view text) {
  const json j = parse(text);
  const auto dim = field<std::int64_t>(j, "dim");
  if (dim < 0 || dim > (std::int64_t{1} << 24)) throw InputError("bad matrix dimension");
  std::vector<SparseMatrix::Triplet> triplets;
  for (const auto& e : member(j, "entries")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_string()) {
      throw InputError("matrix entries are [row, col, \"value\"] triplets");
    }
    const auto r = e[0].get<std::int64_t>();
    const auto c = e[1].get<std::int64_t>();
    if (r < 0 || c < 0 || r >= dim || c >= dim) throw InputError("matrix entry out of range");
    triplets.push_back(
        {static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), Nat::from_string(e[2].get<std::string>())});
  }
  return SparseMatrix::from_triplets(static_cast<std::size_t>(dim), std::move(triplets));
}

std::string matrices_to_json(const EncoderMatrices& m, const Alphabet& alphabet) {
  ordered_json j;
  j["format"] = "lineq-matrices/1";
  j["letters"] = alphabet.names();
  for (const auto& [key, mat] : {std::pair<const char*, const SparseMatrix*>{"M1", &m.m1}, {"M2", &m.m2}}) {
    ordered_json mj;
    mj["dim"] = mat->dim();
    ordered_json entries = ordered_json::array();
    for (std::uint32_t i = 0; i < mat->dim(); ++i) {
      for (const auto& e : mat->row(i)) entries.push_back({i, e.col, e.value.to_string()});
    }
    mj["entries"] = std::move(entries);
    j[key] = std::move(mj);
  }
  return j.dump() + "\n";
}

}  // namespace lineq
