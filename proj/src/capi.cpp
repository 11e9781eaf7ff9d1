#include "zm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asymptotics.hpp"
#include "error.hpp"
#include "exppairs.hpp"
#include "gaussian.hpp"
#include "optimize.hpp"
#include "summatory.hpp"
#include "tables.hpp"

using namespace zm;

struct zm_ctx {
  mpfr_prec_t precision = kDefaultPrec;
  optimize::SearchParams search;
  int threads = 1;
  unsigned digits = 15;
  std::string last_error;

  // The engine caches search results; rebuilt when parameters change.
  std::optional<optimize::Moments> engine;

  optimize::Moments& moments() {
    if (!engine) engine.emplace(search, precision);
    return *engine;
  }
  void invalidate() { engine.reset(); }
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

zm_status status_of(errc code) {
  switch (code) {
    case errc::invalid_argument: return ZM_ERR_INVALID;
    case errc::parse_error: return ZM_ERR_PARSE;
    case errc::out_of_domain: return ZM_ERR_DOMAIN;
    case errc::budget_exceeded: return ZM_ERR_BUDGET;
    case errc::no_feasible_point: return ZM_ERR_INFEASIBLE;
    case errc::capacity: return ZM_ERR_CAPACITY;
    case errc::unsupported: return ZM_ERR_UNSUPPORTED;
    case errc::internal: return ZM_ERR_INTERNAL;
  }
  return ZM_ERR_INTERNAL;
}

template <typename F>
zm_status guarded(zm_ctx* ctx, F&& f) {
  if (!ctx) return ZM_ERR_INVALID;
  ctx->last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return ZM_ERR_BUDGET;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return ZM_ERR_INTERNAL;
  }
}

std::string require(const char* s, const char* what) {
  if (!s) fail(errc::invalid_argument, std::string(what) + " must not be NULL");
  return std::string(s);
}

} // namespace

extern "C" {

const char* zm_version(void) { return "0.1.0"; }

zm_ctx* zm_ctx_new(void) { return new (std::nothrow) zm_ctx(); }

void zm_ctx_free(zm_ctx* ctx) { delete ctx; }

const char* zm_ctx_last_error(const zm_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

zm_status zm_ctx_set_precision(zm_ctx* ctx, unsigned bits) {
  return guarded(ctx, [&] {
    if (bits < 64) fail(errc::invalid_argument, "precision must be >= 64 bits");
    if (bits > 1u << 20) fail(errc::invalid_argument, "precision above 2^20 bits");
    ctx->precision = static_cast<mpfr_prec_t>(bits);
    ctx->invalidate();
    return ZM_OK;
  });
}

zm_status zm_ctx_set_budget(zm_ctx* ctx, uint64_t nodes) {
  return guarded(ctx, [&] {
    if (nodes < 1) fail(errc::invalid_argument, "budget must be >= 1");
    ctx->search.budget = nodes;
    ctx->invalidate();
    return ZM_OK;
  });
}

zm_status zm_ctx_set_depth_limit(zm_ctx* ctx, unsigned depth) {
  return guarded(ctx, [&] {
    if (depth < 1 || depth > 100000) fail(errc::invalid_argument, "depth limit out of range");
    ctx->search.depth_limit = depth;
    ctx->invalidate();
    return ZM_OK;
  });
}

zm_status zm_ctx_set_threads(zm_ctx* ctx, int threads) {
  return guarded(ctx, [&] {
    if (threads < 1 || threads > 1024) fail(errc::invalid_argument, "threads out of range");
    ctx->threads = threads;
    return ZM_OK;
  });
}

zm_status zm_ctx_set_digits(zm_ctx* ctx, unsigned digits) {
  return guarded(ctx, [&] {
    if (digits < 1 || digits > 10000) fail(errc::invalid_argument, "digits out of range");
    ctx->digits = digits;
    return ZM_OK;
  });
}

void zm_string_free(char* s) { std::free(s); }

/* --- exponent pairs ------------------------------------------------------ */

zm_status zm_word_eval(zm_ctx* ctx, const char* word, const char* base, char** out) {
  return guarded(ctx, [&] {
    auto w = exppairs::parse_word(require(word, "word"));
    auto b = exppairs::parse_pair(require(base, "base"));
    *out = dup_string(exppairs::to_string(exppairs::eval_word(w, b)));
    return ZM_OK;
  });
}

zm_status zm_word_fixpoint(zm_ctx* ctx, const char* word, char** out) {
  return guarded(ctx, [&] {
    auto w = exppairs::parse_word(require(word, "word"));
    auto fp = exppairs::fixed_point(w, ctx->precision);
    *out = dup_string(fp.k.str(ctx->digits) + "," + fp.l.str(ctx->digits));
    return ZM_OK;
  });
}

zm_status zm_objective_eval(zm_ctx* ctx, const char* objective, const char* pair,
                            char** out) {
  return guarded(ctx, [&] {
    auto obj = optimize::parse_objective(require(objective, "objective"));
    auto p = exppairs::parse_pair(require(pair, "pair"));
    auto v = optimize::eval_objective(obj, p);
    *out = dup_string(v ? to_string(*v) : "inf");
    return ZM_OK;
  });
}

zm_status zm_objective_at_fixpoint(zm_ctx* ctx, const char* objective, const char* word,
                                   char** out) {
  return guarded(ctx, [&] {
    auto obj = optimize::parse_objective(require(objective, "objective"));
    auto w = exppairs::parse_word(require(word, "word"));
    auto fp = exppairs::fixed_point(w, ctx->precision);
    const mpfr_prec_t prec = ctx->precision;
    auto lin = [&](const Rational& a, const Rational& b, const Rational& c) {
      return Real::of(a, prec) * fp.k + Real::of(b, prec) * fp.l + Real::of(c, prec);
    };
    Real den = lin(obj.d, obj.e, obj.f);
    if (den.sign() <= 0) {
      *out = dup_string("inf");
      return ZM_OK;
    }
    *out = dup_string((lin(obj.a, obj.b, obj.c) / den).str(ctx->digits));
    return ZM_OK;
  });
}

zm_status zm_search(zm_ctx* ctx, const char* objective, char** out_json) {
  return guarded(ctx, [&] {
    auto obj = optimize::parse_objective(require(objective, "objective"));
    auto r = optimize::search(obj, ctx->search);
    *out_json = dup_string(optimize::to_json(r));
    return ZM_OK;
  });
}

/* --- moments -------------------------------------------------------------- */

namespace {

zm_status moment_common(zm_ctx* ctx, const char* A, const char* witness_word,
                        const char* witness_base, bool is_M, char** out_json) {
  Rational a = parse_rational(require(A, "A"));
  optimize::Estimate e;
  if (witness_word) {
    auto w = exppairs::parse_word(witness_word);
    exppairs::Pair base;
    if (!w.has_tail()) {
      if (!witness_base) fail(errc::invalid_argument, "finite witness word needs a base");
      base = exppairs::parse_pair(witness_base);
    }
    e = is_M ? ctx->moments().M_with_witness(a, w, base)
             : ctx->moments().E_with_witness(a, w, base);
  } else {
    e = is_M ? ctx->moments().M(a) : ctx->moments().E(a);
  }
  *out_json = dup_string(optimize::to_json(e, ctx->digits));
  return ZM_OK;
}

} // namespace

zm_status zm_moment_M(zm_ctx* ctx, const char* A, const char* witness_word,
                      const char* witness_base, char** out_json) {
  return guarded(ctx, [&] { return moment_common(ctx, A, witness_word, witness_base, true, out_json); });
}

zm_status zm_moment_E(zm_ctx* ctx, const char* A, const char* witness_word,
                      const char* witness_base, char** out_json) {
  return guarded(ctx, [&] { return moment_common(ctx, A, witness_word, witness_base, false, out_json); });
}

zm_status zm_moment_I(zm_ctx* ctx, const char* A, char** out_json) {
  return guarded(ctx, [&] {
    auto e = ctx->moments().I(parse_rational(require(A, "A")));
    *out_json = dup_string(optimize::to_json(e, ctx->digits));
    return ZM_OK;
  });
}

zm_status zm_const_C(zm_ctx* ctx, char** out_json) {
  return guarded(ctx, [&] {
    auto e = ctx->moments().const_C();
    *out_json = dup_string(optimize::to_json(e, ctx->digits));
    return ZM_OK;
  });
}

zm_status zm_const_D(zm_ctx* ctx, char** out_json) {
  return guarded(ctx, [&] {
    auto d = ctx->moments().const_D();
    nlohmann::json j;
    j["D"] = d.D.str(ctx->digits);
    j["slope"] = d.slope.str(ctx->digits);
    j["f_min"] = d.f_min.str(ctx->digits);
    *out_json = dup_string(j.dump());
    return ZM_OK;
  });
}

zm_status zm_error_exponent(zm_ctx* ctx, unsigned k, char** out_json) {
  return guarded(ctx, [&] {
    auto e = ctx->moments().error_exponent(k);
    nlohmann::json j;
    j["k"] = k;
    j["exponent"] = nlohmann::json::parse(optimize::to_json(e, ctx->digits));
    j["thin"] = to_string(optimize::Moments::thin_exponent(k));
    *out_json = dup_string(j.dump());
    return ZM_OK;
  });
}

/* --- Gaussian integers ---------------------------------------------------- */

zm_status zm_gauss_canonical(zm_ctx* ctx, const char* z, char** out) {
  return guarded(ctx, [&] {
    auto g = gaussian::parse_gaussian(require(z, "z"));
    *out = dup_string(gaussian::to_string(gaussian::canonical(g)));
    return ZM_OK;
  });
}

zm_status zm_gauss_norm(zm_ctx* ctx, const char* z, char** out) {
  return guarded(ctx, [&] {
    auto g = gaussian::parse_gaussian(require(z, "z"));
    *out = dup_string(gaussian::norm(g).get_str());
    return ZM_OK;
  });
}

zm_status zm_gauss_factor(zm_ctx* ctx, const char* z, char** out_json) {
  return guarded(ctx, [&] {
    auto g = gaussian::parse_gaussian(require(z, "z"));
    *out_json = dup_string(gaussian::to_json(gaussian::factor(g)));
    return ZM_OK;
  });
}

zm_status zm_gauss_tau(zm_ctx* ctx, const char* z, unsigned k, char** out) {
  return guarded(ctx, [&] {
    auto g = gaussian::parse_gaussian(require(z, "z"));
    *out = dup_string(gaussian::tau_k(g, k).get_str());
    return ZM_OK;
  });
}

zm_status zm_gauss_divisors(zm_ctx* ctx, const char* z, char** out_json) {
  return guarded(ctx, [&] {
    auto g = gaussian::parse_gaussian(require(z, "z"));
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : gaussian::divisors(g)) arr.push_back(gaussian::to_string(d));
    *out_json = dup_string(arr.dump());
    return ZM_OK;
  });
}

/* --- summatory ------------------------------------------------------------ */

zm_status zm_sum(zm_ctx* ctx, unsigned k, uint64_t x, const char* method, uint64_t* out) {
  return guarded(ctx, [&] {
    auto m = summatory::parse_method(require(method, "method"));
    *out = summatory::S_k(k, x, m, ctx->threads);
    return ZM_OK;
  });
}

zm_status zm_predict(zm_ctx* ctx, unsigned k, uint64_t x, char** out) {
  return guarded(ctx, [&] {
    *out = dup_string(asymptotics::predict(k, x, ctx->precision).str(ctx->digits));
    return ZM_OK;
  });
}

zm_status zm_table(zm_ctx* ctx, int id, const char* format, char** out) {
  return guarded(ctx, [&] {
    auto f = tables::parse_format(require(format, "format"));
    std::string rendered;
    switch (id) {
      case 1: rendered = tables::render_table1(ctx->moments(), f); break;
      case 2: rendered = tables::render_table2(f); break;
      case 3:
        rendered = tables::render_table3(tables::kTable3DefaultXs, 2,
                                         summatory::Method::automatic, ctx->threads,
                                         ctx->precision, f);
        break;
      default: fail(errc::invalid_argument, "table id must be 1, 2 or 3");
    }
    *out = dup_string(rendered);
    return ZM_OK;
  });
}

zm_status zm_table3_custom(zm_ctx* ctx, const uint64_t* xs, size_t count, unsigned k,
                           const char* method, const char* format, char** out) {
  return guarded(ctx, [&] {
    if (!xs || count == 0) fail(errc::invalid_argument, "xs must be non-empty");
    auto f = tables::parse_format(require(format, "format"));
    auto m = summatory::parse_method(require(method, "method"));
    std::vector<uint64_t> v(xs, xs + count);
    *out = dup_string(
        tables::render_table3(v, k, m, ctx->threads, ctx->precision, f));
    return ZM_OK;
  });
}

zm_status zm_constants(zm_ctx* ctx, char** out_json) {
  return guarded(ctx, [&] {
    unsigned digits = ctx->digits > 15 ? ctx->digits : 30;
    *out_json = dup_string(asymptotics::constants_json(digits));
    return ZM_OK;
  });
}

} /* extern "C" */
