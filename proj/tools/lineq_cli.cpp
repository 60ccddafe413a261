// Command-line driver over the C interface.
//
// Exit codes:
//   0  success
//   1  internal error
//   2  bad input (unreadable file, malformed document, invalid flag value)
//   3  resource limit (alphabet budget or expansion cap exceeded)
//   4  suite failure (verify did not confirm its claim, report rows disagree)
//   5  exhausted without conclusion (no solution within the search bound)

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lineq/lineq.h"

namespace {

enum Exit : int { kOk = 0, kInternal = 1, kInput = 2, kLimit = 3, kSuite = 4, kExhausted = 5 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(lineq_status s) {
  switch (s) {
    case LINEQ_OK: return kOk;
    case LINEQ_ERR_INPUT:
    case LINEQ_ERR_NULL: return kInput;
    case LINEQ_ERR_BUDGET:
    case LINEQ_ERR_CAP: return kLimit;
    case LINEQ_ERR_INTERNAL: return kInternal;
  }
  return kInternal;
}

void check(lineq_status s) {
  if (s != LINEQ_OK) throw Failure{exit_for(s), std::string(lineq_status_name(s)) + ": " + lineq_last_error()};
}

struct CString {
  char* p = nullptr;
  ~CString() { lineq_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct PolyDeleter {
  void operator()(lineq_polynomial* p) const { lineq_polynomial_free(p); }
};
struct EncoderDeleter {
  void operator()(lineq_encoder* e) const { lineq_encoder_free(e); }
};
using PolyPtr = std::unique_ptr<lineq_polynomial, PolyDeleter>;
using EncoderPtr = std::unique_ptr<lineq_encoder, EncoderDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInput, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kInput, "cannot write " + path};
  out << text;
  if (!out) throw Failure{kInput, "write failed for " + path};
}

PolyPtr load_poly(const std::string& path) {
  lineq_polynomial* p = nullptr;
  check(lineq_polynomial_from_json(read_file(path).c_str(), &p));
  return PolyPtr(p);
}

EncoderPtr load_encoder(const std::string& path) {
  lineq_encoder* e = nullptr;
  check(lineq_encoder_from_json(read_file(path).c_str(), &e));
  return EncoderPtr(e);
}

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    const auto x = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(name);
    return x;
  } catch (const std::exception&) {
    throw Failure{kInput, std::string(name) + " must be a positive integer"};
  }
}

struct Options {
  std::uint64_t cap = 0;
  std::uint64_t budget = 0;
  lineq_limits limits() const {
    lineq_limits l;
    lineq_limits_default(&l);
    if (auto v = env_u64("LINEQ_EXPANSION_CAP")) l.expansion_cap = *v;
    if (auto v = env_u64("LINEQ_ALPHABET_BUDGET")) l.alphabet_budget = *v;
    if (cap) l.expansion_cap = cap;
    if (budget) l.alphabet_budget = budget;
    if (l.expansion_cap < 1 || l.alphabet_budget < 1) throw Failure{kInput, "cap and budget must be at least 1"};
    return l;
  }
};

std::vector<std::uint64_t> parse_point(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{kInput, "bad point component '" + item + "'"};
    }
  }
  if (out.empty()) throw Failure{kInput, "empty point"};
  return out;
}

std::string human_solve(const nlohmann::ordered_json& j) {
  std::ostringstream out;
  out << "n=" << j["n"].get<std::uint64_t>() << " s=" << j["s"].get<std::uint64_t>() << "  "
      << j["equation"].get<std::string>() << "  L=" << j["max_len"].get<std::uint64_t>() << "\n";
  for (const auto& r : j["results"]) {
    out << "  " << r["level"].get<std::string>() << ": ";
    if (r["found"].get<bool>()) {
      out << "x = " << r["x"].get<std::string>();
      if (r.contains("y")) out << ", y = " << r["y"].get<std::string>();
      if (r.contains("recovery")) {
        const auto& rec = r["recovery"];
        if (rec["ok"].get<bool>()) {
          out << "  tuple (";
          bool first = true;
          for (const auto& v : rec["tuple"]) {
            out << (first ? "" : ",") << v.get<std::uint64_t>();
            first = false;
          }
          out << ")";
        } else {
          out << "  no tuple: " << rec["reason"].get<std::string>();
        }
      }
      if (r["matrix_backed"].get<bool>()) out << "  (matrix-backed)";
    } else {
      out << "no solution within L";
    }
    out << "  [" << r["explored"].get<std::uint64_t>() << " explored]\n";
  }
  return out.str();
}

std::string human_verify(const nlohmann::ordered_json& j) {
  std::ostringstream out;
  out << "suite " << j["suite"].get<std::string>() << ": " << (j["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  if (j.contains("checks")) {
    for (const auto& c : j["checks"]) {
      out << "  " << c["claim"].get<std::string>() << ": " << c["cases"].get<std::uint64_t>() << " cases, "
          << c["failures"].get<std::uint64_t>() << " failures";
      if (!c["first_failure"].get<std::string>().empty()) out << " (" << c["first_failure"].get<std::string>() << ")";
      out << "\n";
    }
  } else if (j.contains("conditions")) {
    for (const auto& c : j["conditions"]) {
      out << "  " << c["condition"].get<std::string>() << ": " << (c["passed"].get<bool>() ? "holds" : "violated");
      if (!c["example"].get<std::string>().empty()) out << " (" << c["example"].get<std::string>() << ")";
      out << "\n";
    }
    out << "  c2 g2^2 = " << j["c2 g2^2"].get<std::string>() << "\n";
    out << "  expected to fail: only (iii)\n";
  } else if (j.contains("issues")) {
    for (const auto& i : j["issues"]) out << "  " << i.get<std::string>() << "\n";
  } else {
    out << "  " << j["words"].get<std::uint64_t>() << " words, " << j["rows_compared"].get<std::uint64_t>()
        << " rows compared, " << j["failures"].get<std::uint64_t>() << " failures\n";
    if (!j["first_failure"].get<std::string>().empty()) out << "  " << j["first_failure"].get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lineq: polynomial pairs to linear equations over morphism and matrix monoids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lineq_version()));

  Options opt;
  app.add_option("--cap", opt.cap, "Expansion cap in runs (env LINEQ_EXPANSION_CAP)")->check(CLI::PositiveNumber);
  app.add_option("--budget", opt.budget, "Alphabet budget in letters (env LINEQ_ALPHABET_BUDGET)")
      ->check(CLI::PositiveNumber);

  std::string p_path, q_path, enc_path, out_path, mtriple_path, point_text;
  std::size_t t = 0;
  std::uint64_t n = 1, s = 1, bound = 5, n_max = 0, s_max = 0, suite_bound = 0;
  std::size_t max_len = 12;
  bool two = false, no_morphism = false;
  std::string level = "matrix", suite, format = "human";
  const std::vector<std::string> formats{"human", "machine"};

  auto* compile = app.add_subcommand("compile", "Build the encoder document for p = q");
  compile->add_option("--p", p_path, "Polynomial document for p")->required();
  compile->add_option("--q", q_path, "Polynomial document for q")->required();
  compile->add_option("-t", t, "Expected arity");
  compile->add_option("-o,--output", out_path, "Output path (default stdout)");

  auto* matrices = app.add_subcommand("matrices", "Dump M1 and M2 as triplet lists");
  matrices->add_option("--encoder", enc_path)->required();
  matrices->add_option("-o,--output", out_path);

  auto* oracle = app.add_subcommand("oracle", "Brute-force search for n3..nt with p = q");
  oracle->add_option("--p", p_path)->required();
  oracle->add_option("--q", q_path)->required();
  oracle->add_option("-n", n)->check(CLI::PositiveNumber);
  oracle->add_option("-s", s)->check(CLI::PositiveNumber);
  oracle->add_option("-B,--bound", bound, "Range bound for n3..nt")->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "Bounded search for a nonannihilating solution");
  solve->add_option("--encoder", enc_path)->required();
  solve->add_option("-n", n)->check(CLI::PositiveNumber);
  solve->add_option("-s", s)->check(CLI::PositiveNumber);
  solve->add_option("-L,--max-len", max_len, "Maximum length per unknown")->check(CLI::NonNegativeNumber);
  solve->add_flag("--two", two, "Solve f_ns x = g_ns y");
  solve->add_option("--level", level)->check(CLI::IsMember({"matrix", "morphism", "both"}));
  solve->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run a verification suite on an encoder");
  verify->add_option("--encoder", enc_path)->required();
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"definition", "lemma5", "lemma6", "functoriality", "invariants"}));
  verify->add_option("--bound", suite_bound, "ni bound (lemma5) or word length (lemma6, functoriality)");
  verify->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* report = app.add_subcommand("report", "Compare oracle and solver verdicts over a range");
  report->add_option("--encoder", enc_path)->required();
  report->add_option("-n", n, "First n")->check(CLI::PositiveNumber);
  report->add_option("--n-max", n_max, "Last n (default: first)");
  report->add_option("-s", s, "First s")->check(CLI::PositiveNumber);
  report->add_option("--s-max", s_max, "Last s (default: first)");
  report->add_option("-B,--bound", bound, "Oracle bound")->check(CLI::PositiveNumber);
  report->add_option("-L,--max-len", max_len, "Solver bound");
  report->add_flag("--no-morphism", no_morphism, "Skip the morphism-level solvers");
  report->add_option("--format", format)->check(CLI::IsMember(formats));
  report->add_option("-o,--output", out_path);

  auto* mtriple = app.add_subcommand("mtriple", "M-triples computing a single polynomial");
  mtriple->require_subcommand(1);
  auto* mt_compile = mtriple->add_subcommand("compile", "Compile p into an M-triple document");
  mt_compile->add_option("--p", p_path)->required();
  mt_compile->add_option("-o,--output", out_path);
  auto* mt_compute = mtriple->add_subcommand("compute", "Evaluate an M-triple document at a point");
  mt_compute->add_option("--mtriple", mtriple_path)->required();
  mt_compute->add_option("--at", point_text, "Comma-separated positive integers")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    const lineq_limits limits = opt.limits();

    if (*compile) {
      auto p = load_poly(p_path);
      auto q = load_poly(q_path);
      if (t && (lineq_polynomial_arity(p.get()) != t || lineq_polynomial_arity(q.get()) != t)) {
        throw Failure{kInput, "polynomial arity does not match -t " + std::to_string(t)};
      }
      lineq_encoder* e = nullptr;
      check(lineq_encoder_build(p.get(), q.get(), &limits, &e));
      EncoderPtr enc(e);
      CString doc;
      check(lineq_encoder_to_json(enc.get(), &doc.p));
      emit(doc.str(), out_path);
      std::size_t tt = 0, letters = 0;
      check(lineq_encoder_info(enc.get(), &tt, &letters));
      std::cerr << "encoder: t=" << tt << ", " << letters << " letters\n";
      return kOk;
    }

    if (*matrices) {
      auto enc = load_encoder(enc_path);
      CString doc;
      check(lineq_encoder_matrices(enc.get(), &doc.p));
      emit(doc.str(), out_path);
      return kOk;
    }

    if (*oracle) {
      auto p = load_poly(p_path);
      auto q = load_poly(q_path);
      int found = 0;
      CString tuple;
      check(lineq_oracle(p.get(), q.get(), n, s, bound, &found, &tuple.p));
      if (!found) {
        std::cout << "no solution with n3..nt in 1.." << bound << "\n";
        return kExhausted;
      }
      std::cout << tuple.str() << "\n";
      return kOk;
    }

    if (*solve) {
      auto enc = load_encoder(enc_path);
      const lineq_level lv =
          level == "matrix" ? LINEQ_LEVEL_MATRIX : level == "morphism" ? LINEQ_LEVEL_MORPHISM : LINEQ_LEVEL_BOTH;
      int found = 0;
      CString doc;
      check(lineq_solve(enc.get(), n, s, max_len, two ? 1 : 0, lv, &limits, &found, &doc.p));
      std::cout << (format == "machine" ? doc.str() : human_solve(nlohmann::ordered_json::parse(doc.str())));
      return found ? kOk : kExhausted;
    }

    if (*verify) {
      auto enc = load_encoder(enc_path);
      lineq_suite which = LINEQ_SUITE_DEFINITION;
      std::uint64_t b = suite_bound;
      if (suite == "lemma5") {
        which = LINEQ_SUITE_LEMMA5;
        if (!b) b = 2;
      } else if (suite == "lemma6") {
        which = LINEQ_SUITE_LEMMA6;
        if (!b) b = 3;
      } else if (suite == "functoriality") {
        which = LINEQ_SUITE_FUNCTORIALITY;
        if (!b) b = 4;
      } else if (suite == "invariants") {
        which = LINEQ_SUITE_INVARIANTS;
      }
      int passed = 0;
      CString doc;
      check(lineq_verify(enc.get(), which, b, &limits, &passed, &doc.p));
      std::cout << (format == "machine" ? doc.str() : human_verify(nlohmann::ordered_json::parse(doc.str())));
      return passed ? kOk : kSuite;
    }

    if (*report) {
      auto enc = load_encoder(enc_path);
      lineq_report_config cfg{n, n_max ? n_max : n, s, s_max ? s_max : s, bound, max_len, no_morphism ? 0 : 1};
      int agree = 0;
      CString doc;
      check(lineq_report(enc.get(), &cfg, &limits, format == "machine" ? 1 : 0, &agree, &doc.p));
      emit(doc.str(), out_path);
      return agree ? kOk : kSuite;
    }

    if (*mt_compile) {
      auto p = load_poly(p_path);
      CString doc;
      check(lineq_mtriple_compile(p.get(), &limits, &doc.p));
      emit(doc.str(), out_path);
      return kOk;
    }

    if (*mt_compute) {
      const auto doc = read_file(mtriple_path);
      const auto point = parse_point(point_text);
      CString value;
      int word_level = 0;
      check(lineq_mtriple_compute(doc.c_str(), point.data(), point.size(), &limits, &value.p, &word_level));
      std::cout << value.str() << (word_level ? "" : "  (matrix fallback)") << "\n";
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "lineq: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "lineq: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
