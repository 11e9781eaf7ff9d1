// zm command-line tool. Thin wrapper over the zm C API: every value printed
// comes verbatim from the library.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zm.h"

namespace {

struct CtxDeleter {
  void operator()(zm_ctx* c) const { zm_ctx_free(c); }
};
using CtxPtr = std::unique_ptr<zm_ctx, CtxDeleter>;

struct StrDeleter {
  void operator()(char* s) const { zm_string_free(s); }
};
using StrPtr = std::unique_ptr<char, StrDeleter>;

int fail_with(zm_ctx* ctx, zm_status st) {
  std::fprintf(stderr, "zm: error (%d): %s\n", static_cast<int>(st),
               zm_ctx_last_error(ctx));
  return 2;
}

int print_result(zm_ctx* ctx, zm_status st, const StrPtr& out) {
  if (st != ZM_OK) return fail_with(ctx, st);
  std::printf("%s\n", out.get());
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"zm - zeta-function moment exponents and Gaussian divisor sums"};
  app.require_subcommand(1);

  unsigned precision = 160;
  std::uint64_t budget = 1000000;
  unsigned depth_limit = 200;
  int threads = 1;
  unsigned digits = 15;
  std::string format = "text";
  app.add_option("--precision", precision, "working precision in bits (>= 64)");
  app.add_option("--budget", budget, "search node budget");
  app.add_option("--depth-limit", depth_limit, "search depth limit");
  app.add_option("--threads", threads, "threads for the hyperbola summation");
  app.add_option("--digits", digits, "significant digits in decimal output");
  app.add_option("--format", format, "output format: text | csv | json");

  // exppairs
  auto* ep = app.add_subcommand("exppairs", "exponent-pair word calculus");
  ep->require_subcommand(1);
  std::string ep_word, ep_base = "13/84,55/84", ep_objective;
  auto* ep_eval = ep->add_subcommand("eval", "evaluate a finite word exactly");
  ep_eval->add_option("--word", ep_word, "process word, e.g. \"(BAA)^3A^2\"");
  ep_eval->add_option("--base", ep_base, "base pair \"k,l\"");
  ep_eval->add_option("--objective", ep_objective,
                      "also evaluate an objective: lk | mlk | cobj | a,b,c,d,e,f[;g,h,i]...");
  auto* ep_fix = ep->add_subcommand("fixpoint", "attracting pair of a periodic word");
  ep_fix->add_option("--word", ep_word, "word with a \"(...)^oo\" tail")->required();
  ep_fix->add_option("--objective", ep_objective, "objective to evaluate at the fixed point");

  // moments
  auto* mo = app.add_subcommand("moments", "moment exponents M, E, I, C, D");
  mo->require_subcommand(1);
  std::string mo_A, mo_word, mo_base;
  unsigned mo_k = 2;
  auto* mo_M = mo->add_subcommand("M", "zeta moment exponent M(A)");
  mo_M->add_option("--A", mo_A)->required();
  mo_M->add_option("--word", mo_word, "witness word (skips the search)");
  mo_M->add_option("--base", mo_base, "witness base pair");
  auto* mo_E = mo->add_subcommand("E", "constrained infimum E(A), A > 12");
  mo_E->add_option("--A", mo_A)->required();
  mo_E->add_option("--word", mo_word, "witness word");
  mo_E->add_option("--base", mo_base, "witness base pair");
  auto* mo_I = mo->add_subcommand("I", "Dedekind zeta moment exponent I(A)");
  mo_I->add_option("--A", mo_A)->required();
  auto* mo_C = mo->add_subcommand("C", "the constant C = 16645467/972266");
  auto* mo_D = mo->add_subcommand("D", "the constant D and the I(A) slope");
  auto* mo_X = mo->add_subcommand("exponent", "error exponent 1 - 1/(2I(k)) vs baseline");
  mo_X->add_option("--k", mo_k)->required();

  // gauss
  auto* ga = app.add_subcommand("gauss", "Gaussian integer arithmetic");
  ga->require_subcommand(1);
  std::string ga_z;
  unsigned ga_k = 2;
  auto* ga_factor = ga->add_subcommand("factor", "canonical prime factorization");
  ga_factor->add_option("z", ga_z, "Gaussian integer, e.g. \"3+4i\"")->required();
  auto* ga_tau = ga->add_subcommand("tau", "k-dimensional divisor count");
  ga_tau->add_option("z", ga_z)->required();
  ga_tau->add_option("--k", ga_k, "dimension (default 2)");
  auto* ga_div = ga->add_subcommand("divisors", "canonical divisors");
  ga_div->add_option("z", ga_z)->required();
  auto* ga_canon = ga->add_subcommand("canonical", "first-quadrant representative");
  ga_canon->add_option("z", ga_z)->required();

  // sum
  auto* su = app.add_subcommand("sum", "summatory function S_k(x)");
  unsigned su_k = 2;
  std::uint64_t su_x = 0;
  std::string su_method = "auto";
  su->add_option("--k", su_k, "dimension (default 2)");
  su->add_option("--x", su_x, "norm limit")->required();
  su->add_option("--method", su_method, "auto | sieve | hyperbola | brute");

  // table
  auto* ta = app.add_subcommand("table", "reference tables 1, 2, 3");
  int ta_id = 0;
  std::vector<std::uint64_t> ta_xs;
  unsigned ta_k = 2;
  std::string ta_method = "auto";
  ta->add_option("--id", ta_id, "table number 1 | 2 | 3")->required();
  ta->add_option("--xs", ta_xs, "custom x list for table 3")->delimiter(',');
  ta->add_option("--k", ta_k, "dimension for table 3 (default 2)");
  ta->add_option("--method", ta_method, "summation method for table 3");

  // constants
  auto* co = app.add_subcommand("constants", "audit dump of embedded/computed constants");

  CLI11_PARSE(app, argc, argv);

  CtxPtr ctx(zm_ctx_new());
  if (!ctx) {
    std::fprintf(stderr, "zm: cannot allocate context\n");
    return 2;
  }
  zm_status st;
  if ((st = zm_ctx_set_precision(ctx.get(), precision)) != ZM_OK) return fail_with(ctx.get(), st);
  if ((st = zm_ctx_set_budget(ctx.get(), budget)) != ZM_OK) return fail_with(ctx.get(), st);
  if ((st = zm_ctx_set_depth_limit(ctx.get(), depth_limit)) != ZM_OK) return fail_with(ctx.get(), st);
  if ((st = zm_ctx_set_threads(ctx.get(), threads)) != ZM_OK) return fail_with(ctx.get(), st);
  if ((st = zm_ctx_set_digits(ctx.get(), digits)) != ZM_OK) return fail_with(ctx.get(), st);

  StrPtr out;
  char* raw = nullptr;

  if (ep_eval->parsed()) {
    st = zm_word_eval(ctx.get(), ep_word.c_str(), ep_base.c_str(), &raw);
    out.reset(raw);
    if (st != ZM_OK) return fail_with(ctx.get(), st);
    if (ep_objective.empty()) {
      std::printf("%s\n", out.get());
      return 0;
    }
    char* val = nullptr;
    st = zm_objective_eval(ctx.get(), ep_objective.c_str(), out.get(), &val);
    StrPtr vp(val);
    if (st != ZM_OK) return fail_with(ctx.get(), st);
    std::printf("pair: %s\nobjective: %s\n", out.get(), vp.get());
    return 0;
  }
  if (ep_fix->parsed()) {
    st = zm_word_fixpoint(ctx.get(), ep_word.c_str(), &raw);
    out.reset(raw);
    if (st != ZM_OK) return fail_with(ctx.get(), st);
    if (ep_objective.empty()) {
      std::printf("%s\n", out.get());
      return 0;
    }
    char* val = nullptr;
    st = zm_objective_at_fixpoint(ctx.get(), ep_objective.c_str(), ep_word.c_str(), &val);
    StrPtr vp(val);
    if (st != ZM_OK) return fail_with(ctx.get(), st);
    std::printf("pair: %s\nobjective: %s\n", out.get(), vp.get());
    return 0;
  }
  if (mo_M->parsed()) {
    st = zm_moment_M(ctx.get(), mo_A.c_str(), mo_word.empty() ? nullptr : mo_word.c_str(),
                     mo_base.empty() ? nullptr : mo_base.c_str(), &raw);
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  if (mo_E->parsed()) {
    st = zm_moment_E(ctx.get(), mo_A.c_str(), mo_word.empty() ? nullptr : mo_word.c_str(),
                     mo_base.empty() ? nullptr : mo_base.c_str(), &raw);
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  if (mo_I->parsed()) {
    st = zm_moment_I(ctx.get(), mo_A.c_str(), &raw);
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  if (mo_C->parsed()) {
    st = zm_const_C(ctx.get(), &raw);
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  if (mo_D->parsed()) {
    st = zm_const_D(ctx.get(), &raw);
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  if (mo_X->parsed()) {
    st = zm_error_exponent(ctx.get(), mo_k, &raw);
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  if (ga_factor->parsed()) {
    st = zm_gauss_factor(ctx.get(), ga_z.c_str(), &raw);
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  if (ga_tau->parsed()) {
    st = zm_gauss_tau(ctx.get(), ga_z.c_str(), ga_k, &raw);
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  if (ga_div->parsed()) {
    st = zm_gauss_divisors(ctx.get(), ga_z.c_str(), &raw);
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  if (ga_canon->parsed()) {
    st = zm_gauss_canonical(ctx.get(), ga_z.c_str(), &raw);
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  if (su->parsed()) {
    std::uint64_t value = 0;
    st = zm_sum(ctx.get(), su_k, su_x, su_method.c_str(), &value);
    if (st != ZM_OK) return fail_with(ctx.get(), st);
    std::printf("%llu\n", static_cast<unsigned long long>(value));
    return 0;
  }
  if (ta->parsed()) {
    if (ta_id == 3 && (!ta_xs.empty() || ta_k != 2 || ta_method != "auto")) {
      std::vector<std::uint64_t> xs = ta_xs;
      if (xs.empty())
        for (std::uint64_t x = 10; x <= 1000000000ull; x *= 10) xs.push_back(x);
      st = zm_table3_custom(ctx.get(), xs.data(), xs.size(), ta_k, ta_method.c_str(),
                            format.c_str(), &raw);
    } else {
      st = zm_table(ctx.get(), ta_id, format.c_str(), &raw);
    }
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  if (co->parsed()) {
    st = zm_constants(ctx.get(), &raw);
    out.reset(raw);
    return print_result(ctx.get(), st, out);
  }
  std::fprintf(stderr, "zm: no subcommand\n");
  return 1;
}
