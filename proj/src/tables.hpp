#pragma once

// Rendering of the three reference tables and of operation results in text,
// CSV and JSON. The CLI prints these strings verbatim.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "optimize.hpp"
#include "real.hpp"
#include "summatory.hpp"

namespace zm::tables {

enum class Format { text, csv, json };
Format parse_format(std::string_view s);

struct Table3Row {
  std::uint64_t x = 0;
  std::uint64_t S = 0;
  Real prediction;          // unrounded x * P_k(ln x)
  Int prediction_rounded;   // half away from zero
  std::string error_2dp;    // (S - prediction)/sqrt(x) to two decimals
};

std::vector<Table3Row> table3_rows(std::span<const std::uint64_t> xs, unsigned k,
                                   summatory::Method method, int threads,
                                   mpfr_prec_t prec);

inline constexpr std::uint64_t kTable3DefaultXs[9] = {
    10,      100,      1000,      10000,     100000,
    1000000, 10000000, 100000000, 1000000000};

std::string render_table1(optimize::Moments& engine, Format f);
std::string render_table2(Format f);
std::string render_table3(std::span<const std::uint64_t> xs, unsigned k,
                          summatory::Method method, int threads, mpfr_prec_t prec,
                          Format f);

} // namespace zm::tables
