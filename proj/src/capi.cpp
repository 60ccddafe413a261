#include "lineq/lineq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "lineq/io.hpp"
#include "lineq/solve.hpp"

struct lineq_polynomial {
  lineq::Polynomial poly;
};

struct lineq_encoder {
  lineq::Encoder enc;
  lineq::EncoderMatrices mats;
};

namespace {

using ordered_json = nlohmann::ordered_json;

thread_local std::string last_error;

template <typename F>
lineq_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return LINEQ_OK;
  } catch (const lineq::InputError& e) {
    last_error = e.what();
    return LINEQ_ERR_INPUT;
  } catch (const lineq::BudgetExceeded& e) {
    last_error = e.what();
    return LINEQ_ERR_BUDGET;
  } catch (const lineq::CapExceeded& e) {
    last_error = e.what();
    return LINEQ_ERR_CAP;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LINEQ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LINEQ_ERR_INTERNAL;
  }
}

lineq_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return LINEQ_ERR_NULL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lineq::Limits limits_of(const lineq_limits* l) {
  lineq::Limits out;
  if (l) {
    if (l->expansion_cap < 1) throw lineq::InputError("expansion cap must be at least 1");
    if (l->alphabet_budget < 1) throw lineq::InputError("alphabet budget must be at least 1");
    out.expansion_cap = l->expansion_cap;
    out.alphabet_budget = l->alphabet_budget;
  }
  return out;
}

ordered_json result_json(const lineq::SolveResult& r, const std::optional<lineq::Recovery>& rec) {
  ordered_json j;
  j["level"] = lineq::to_string(r.level);
  j["found"] = r.found;
  j["x"] = r.found ? ordered_json(lineq::to_string(r.x)) : ordered_json(nullptr);
  if (r.two_unknowns) j["y"] = r.found ? ordered_json(lineq::to_string(r.y)) : ordered_json(nullptr);
  j["explored"] = r.explored;
  j["matrix_backed"] = r.matrix_backed;
  j["certificate"] = r.certificate;
  if (rec) j["recovery"] = {{"ok", rec->ok}, {"tuple", rec->tuple}, {"reason", rec->reason}};
  return j;
}

ordered_json suite_json(const lineq::SuiteReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"claim", c.claim}, {"cases", c.cases}, {"failures", c.failures}, {"first_failure", c.first_failure}});
  }
  j["checks"] = std::move(checks);
  j["passed"] = r.ok();
  return j;
}

}  // namespace

extern "C" {

const char* lineq_version(void) { return "1.0.0"; }

const char* lineq_last_error(void) { return last_error.c_str(); }

const char* lineq_status_name(lineq_status status) {
  switch (status) {
    case LINEQ_OK: return "ok";
    case LINEQ_ERR_INPUT: return "bad input";
    case LINEQ_ERR_BUDGET: return "alphabet budget exceeded";
    case LINEQ_ERR_CAP: return "expansion cap exceeded";
    case LINEQ_ERR_NULL: return "null argument";
    case LINEQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void lineq_string_free(char* s) { std::free(s); }

void lineq_limits_default(lineq_limits* limits) {
  if (!limits) return;
  const lineq::Limits d;
  limits->expansion_cap = d.expansion_cap;
  limits->alphabet_budget = d.alphabet_budget;
}

lineq_status lineq_polynomial_from_json(const char* json, lineq_polynomial** out) {
  if (!json || !out) return null_arg("json/out");
  *out = nullptr;
  return guard([&] { *out = new lineq_polynomial{lineq::polynomial_from_json(json)}; });
}

lineq_status lineq_polynomial_to_json(const lineq_polynomial* p, char** out) {
  if (!p || !out) return null_arg("p/out");
  *out = nullptr;
  return guard([&] { *out = dup(lineq::polynomial_to_json(p->poly)); });
}

void lineq_polynomial_free(lineq_polynomial* p) { delete p; }

size_t lineq_polynomial_arity(const lineq_polynomial* p) { return p ? p->poly.arity() : 0; }

lineq_status lineq_polynomial_eval(const lineq_polynomial* p, const uint64_t* point, size_t len, char** out) {
  if (!p || (!point && len > 0) || !out) return null_arg("p/point/out");
  *out = nullptr;
  return guard([&] {
    std::vector<lineq::Nat> pt(point, point + len);
    *out = dup(lineq::poly_eval(p->poly, pt).to_string());
  });
}

lineq_status lineq_encoder_build(const lineq_polynomial* p, const lineq_polynomial* q, const lineq_limits* limits,
                                 lineq_encoder** out) {
  if (!p || !q || !out) return null_arg("p/q/out");
  *out = nullptr;
  return guard([&] {
    auto enc = lineq::build_encoder(p->poly, q->poly, limits_of(limits));
    auto mats = lineq::matrices_of_encoder(enc);
    *out = new lineq_encoder{std::move(enc), std::move(mats)};
  });
}

lineq_status lineq_encoder_from_json(const char* json, lineq_encoder** out) {
  if (!json || !out) return null_arg("json/out");
  *out = nullptr;
  return guard([&] {
    auto enc = lineq::encoder_from_json(json);
    auto mats = lineq::matrices_of_encoder(enc);
    *out = new lineq_encoder{std::move(enc), std::move(mats)};
  });
}

lineq_status lineq_encoder_to_json(const lineq_encoder* enc, char** out) {
  if (!enc || !out) return null_arg("enc/out");
  *out = nullptr;
  return guard([&] { *out = dup(lineq::encoder_to_json(enc->enc)); });
}

void lineq_encoder_free(lineq_encoder* enc) { delete enc; }

lineq_status lineq_encoder_info(const lineq_encoder* enc, size_t* t, size_t* letters) {
  if (!enc) return null_arg("enc");
  if (t) *t = enc->enc.t;
  if (letters) *letters = enc->enc.alphabet->size();
  return LINEQ_OK;
}

lineq_status lineq_encoder_matrices(const lineq_encoder* enc, char** out) {
  if (!enc || !out) return null_arg("enc/out");
  *out = nullptr;
  return guard([&] { *out = dup(lineq::matrices_to_json(enc->mats, *enc->enc.alphabet)); });
}

lineq_status lineq_mtriple_compile(const lineq_polynomial* p, const lineq_limits* limits, char** out) {
  if (!p || !out) return null_arg("p/out");
  *out = nullptr;
  return guard([&] { *out = dup(lineq::mtriple_to_json(lineq::compile_polynomial(p->poly, limits_of(limits)))); });
}

lineq_status lineq_mtriple_compute(const char* mtriple_json, const uint64_t* point, size_t len,
                                   const lineq_limits* limits, char** out, int* word_level) {
  if (!mtriple_json || (!point && len > 0) || !out) return null_arg("mtriple_json/point/out");
  *out = nullptr;
  return guard([&] {
    const auto c = lineq::mtriple_from_json(mtriple_json);
    const auto report = lineq::validate_mtriple(c.triple);
    if (!report.ok()) throw lineq::InputError("not an M-triple: condition " + report.failed_conditions().front());
    std::vector<lineq::Nat> pt(point, point + len);
    const auto r = lineq::mtriple_compute(c, pt, limits_of(limits));
    *out = dup(r.value.to_string());
    if (word_level) *word_level = r.level == lineq::ComputeLevel::word ? 1 : 0;
  });
}

lineq_status lineq_oracle(const lineq_polynomial* p, const lineq_polynomial* q, uint64_t n, uint64_t s, uint64_t bound,
                          int* found, char** tuple) {
  if (!p || !q || !found || !tuple) return null_arg("p/q/found/tuple");
  *found = 0;
  *tuple = nullptr;
  return guard([&] {
    const auto r = lineq::diophantine_oracle(p->poly, q->poly, n, s, bound);
    if (r) {
      *found = 1;
      *tuple = dup(ordered_json(*r).dump());
    }
  });
}

lineq_status lineq_solve(const lineq_encoder* enc, uint64_t n, uint64_t s, size_t max_len, int two_unknowns,
                         lineq_level level, const lineq_limits* limits, int* found, char** out) {
  if (!enc || !found || !out) return null_arg("enc/found/out");
  *found = 0;
  *out = nullptr;
  return guard([&] {
    if (n < 1 || s < 1) throw lineq::InputError("n and s must be positive");
    if (level != LINEQ_LEVEL_MATRIX && level != LINEQ_LEVEL_MORPHISM && level != LINEQ_LEVEL_BOTH) {
      throw lineq::InputError("unknown level");
    }
    const auto lim = limits_of(limits);
    const auto& e = enc->enc;
    const auto& m = enc->mats;
    ordered_json j;
    j["n"] = n;
    j["s"] = s;
    j["max_len"] = max_len;
    j["equation"] = two_unknowns ? "f_ns x = g_ns y" : "f_ns x = g_ns x";
    ordered_json results = ordered_json::array();
    bool all = true;
    const auto run = [&](bool morphism) {
      lineq::SolveResult r;
      if (!morphism) {
        const auto k = lineq::k_ns(m, n, s);
        const auto mm = lineq::m_ns(m, n, s);
        r = two_unknowns ? lineq::solve_two_unknowns(k, mm, m, max_len) : lineq::solve_one_unknown(k, mm, m, max_len);
      } else {
        const auto a = lineq::f_ns_word(n, s);
        const auto b = lineq::g_ns_word(n, s);
        r = two_unknowns ? lineq::solve_two_unknowns_morphism(e, m, a, b, max_len, lim)
                         : lineq::solve_one_unknown_morphism(e, m, a, b, max_len, lim);
      }
      std::optional<lineq::Recovery> rec;
      if (r.found) rec = two_unknowns ? lineq::recover_tuple(e, n, s, r.x, r.y) : lineq::recover_tuple(e, n, s, r.x);
      all = all && r.found;
      results.push_back(result_json(r, rec));
    };
    if (level != LINEQ_LEVEL_MORPHISM) run(false);
    if (level != LINEQ_LEVEL_MATRIX) run(true);
    j["results"] = std::move(results);
    *found = all ? 1 : 0;
    *out = dup(j.dump(2) + "\n");
  });
}

lineq_status lineq_verify(const lineq_encoder* enc, lineq_suite suite, uint64_t bound, const lineq_limits* limits,
                          int* passed, char** out) {
  if (!enc || !passed || !out) return null_arg("enc/passed/out");
  *passed = 0;
  *out = nullptr;
  return guard([&] {
    const auto lim = limits_of(limits);
    const auto& e = enc->enc;
    ordered_json j;
    switch (suite) {
      case LINEQ_SUITE_DEFINITION: {
        const auto r = lineq::validate_mtriple(e.alphabet, e.g1, e.g2, e.t);
        j["suite"] = "definition";
        ordered_json conds = ordered_json::array();
        for (const auto& c : r.checks) {
          conds.push_back(
              {{"condition", c.condition}, {"passed", c.passed}, {"violators", c.violators}, {"example", c.example}});
        }
        j["conditions"] = std::move(conds);
        j["failed"] = r.failed_conditions();
        // expected: (D, g1, g2) violates (iii) alone, witnessed by c2 g2^2 = c3
        const auto c2g2g2 = lineq::Chain({&e.g2, &e.g2}, lim).image(lineq::Encoder::c2, 0);
        j["expected_failed"] = {"(iii)"};
        j["c2 g2^2"] = lineq::to_text(c2g2g2);
        const auto c3 = lineq::Word::letter(e.alphabet, lineq::Encoder::c3);
        const bool ok = r.failed_conditions() == std::vector<std::string>{"(iii)"} && c2g2g2 == c3;
        j["passed"] = ok;
        *passed = ok;
        break;
      }
      case LINEQ_SUITE_LEMMA5: {
        if (bound < 1) throw lineq::InputError("lemma5 bound must be positive");
        const auto r = lineq::lemma5_suite(e, bound, lim);
        j = suite_json(r);
        *passed = r.ok();
        break;
      }
      case LINEQ_SUITE_LEMMA6: {
        const auto r = lineq::lemma6_suite(e, bound, lim);
        j = suite_json(r);
        *passed = r.ok();
        break;
      }
      case LINEQ_SUITE_FUNCTORIALITY: {
        const auto r = lineq::functoriality_suite(e, enc->mats, bound, lim);
        j["suite"] = "functoriality";
        j["words"] = r.words;
        j["rows_compared"] = r.rows_compared;
        j["streamed_rows"] = r.streamed_rows;
        j["failures"] = r.failures;
        j["first_failure"] = r.first_failure;
        j["passed"] = r.ok();
        *passed = r.ok();
        break;
      }
      case LINEQ_SUITE_INVARIANTS: {
        const auto issues = lineq::check_encoder(e);
        j["suite"] = "invariants";
        j["issues"] = issues;
        j["passed"] = issues.empty();
        *passed = issues.empty();
        break;
      }
      default:
        throw lineq::InputError("unknown suite");
    }
    *out = dup(j.dump(2) + "\n");
  });
}

lineq_status lineq_report(const lineq_encoder* enc, const lineq_report_config* config, const lineq_limits* limits,
                          int machine, int* all_agree, char** out) {
  if (!enc || !config || !out) return null_arg("enc/config/out");
  *out = nullptr;
  if (all_agree) *all_agree = 0;
  return guard([&] {
    lineq::ReportConfig c;
    c.n_min = config->n_min;
    c.n_max = config->n_max;
    c.s_min = config->s_min;
    c.s_max = config->s_max;
    c.oracle_bound = config->oracle_bound;
    c.max_len = config->max_len;
    c.morphism_level = config->morphism_level != 0;
    c.limits = limits_of(limits);
    const auto r = lineq::equivalence_report(enc->enc, enc->mats, c);
    if (all_agree) *all_agree = r.all_agree() ? 1 : 0;
    *out = dup(machine ? lineq::render_machine(r) : lineq::render_human(r));
  });
}

}  // extern "C"
