#include "tables.hpp"

#include <sstream>

#include <json.hpp>

#include "asymptotics.hpp"
#include "error.hpp"
#include "exppairs.hpp"

namespace zm::tables {

Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  fail(errc::parse_error, "unknown format '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Table 3

std::vector<Table3Row> table3_rows(std::span<const std::uint64_t> xs, unsigned k,
                                   summatory::Method method, int threads,
                                   mpfr_prec_t prec) {
  std::vector<Table3Row> rows;
  rows.reserve(xs.size());
  for (std::uint64_t x : xs) {
    Table3Row row;
    row.x = x;
    row.S = summatory::S_k(k, x, method, threads);
    row.prediction = asymptotics::predict(k, x, prec);
    row.prediction_rounded = row.prediction.to_int_round();
    Real err = (Real::of(row.S, prec) - row.prediction) / Real::of(x, prec).sqrt();
    row.error_2dp = err.str_fixed(2);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string pad_left(const std::string& s, size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

} // namespace

std::string render_table3(std::span<const std::uint64_t> xs, unsigned k,
                          summatory::Method method, int threads, mpfr_prec_t prec,
                          Format f) {
  auto rows = table3_rows(xs, k, method, threads, prec);
  if (f == Format::csv) {
    std::string out = "x,S,prediction,error\n";
    for (const auto& r : rows)
      out += std::to_string(r.x) + "," + std::to_string(r.S) + "," +
             r.prediction_rounded.get_str() + "," + r.error_2dp + "\n";
    return out;
  }
  if (f == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"x", r.x},
                     {"S", r.S},
                     {"prediction", r.prediction_rounded.get_str()},
                     {"prediction_real", r.prediction.str(15)},
                     {"error", r.error_2dp}});
    return nlohmann::json{{"k", k}, {"rows", arr}}.dump(2);
  }
  std::ostringstream out;
  out << pad_left("x", 11) << pad_left("S(x)", 13) << pad_left("pred", 13)
      << pad_left("err/sqrt(x)", 13) << "\n";
  for (const auto& r : rows)
    out << pad_left(std::to_string(r.x), 11) << pad_left(std::to_string(r.S), 13)
        << pad_left(r.prediction_rounded.get_str(), 13) << pad_left(r.error_2dp, 13)
        << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Table 2

std::string render_table2(Format f) {
  auto grid = summatory::table2();
  if (f == Format::csv) {
    std::string out = "a,b,tau\n";
    for (int b = 0; b <= 15; ++b)
      for (int a = 1; a <= 15; ++a)
        out += std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(grid[b][a - 1]) + "\n";
    return out;
  }
  if (f == Format::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (int b = 0; b <= 15; ++b) {
      nlohmann::json row = nlohmann::json::array();
      for (int a = 1; a <= 15; ++a) row.push_back(grid[b][a - 1]);
      rows.push_back(row);
    }
    return nlohmann::json{{"rows_b0_to_b15", rows}}.dump(2);
  }
  // Text matches the reference layout: b decreasing, a along the bottom.
  std::ostringstream out;
  for (int b = 15; b >= 0; --b) {
    out << pad_left(std::to_string(b), 2) << " |";
    for (int a = 1; a <= 15; ++a) out << pad_left(std::to_string(grid[b][a - 1]), 4);
    out << "\n";
  }
  out << "---+" << std::string(60, '-') << "\n   |";
  for (int a = 1; a <= 15; ++a) out << pad_left(std::to_string(a), 4);
  out << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Table 1

std::string render_table1(optimize::Moments& engine, Format f) {
  struct Row {
    unsigned A;
    std::string M_display;
    std::string M_decimal;
    std::string word;
    std::string base;
  };
  std::vector<Row> rows;

  {  // A = 13: located by search
    optimize::Estimate e = engine.M(Rational(13));
    Row r;
    r.A = 13;
    r.M_decimal = e.approx.str(7);
    r.M_display = r.M_decimal;
    if (e.witness) {
      r.word = e.witness->word;
      r.base = exppairs::to_string(e.witness->base);
    }
    rows.push_back(std::move(r));
  }
  for (const auto& w : optimize::table1_witnesses()) {
    Row r;
    r.A = w.A;
    r.word = w.word;
    r.base = w.base;
    exppairs::Word word = exppairs::parse_word(w.word);
    optimize::Estimate e =
        word.has_tail()
            ? engine.M_with_witness(Rational(static_cast<long>(w.A)), word, {})
            : engine.M_with_witness(Rational(static_cast<long>(w.A)), word,
                                    exppairs::parse_pair(w.base));
    r.M_decimal = e.approx.str(7);
    r.M_display = e.exact ? zm::to_string(*e.exact) : r.M_decimal;
    rows.push_back(std::move(r));
  }

  if (f == Format::csv) {
    std::string out = "A,M,M_decimal,word,base\n";
    for (const auto& r : rows)
      out += std::to_string(r.A) + "," + r.M_display + "," + r.M_decimal + "," + r.word +
             "," + r.base + "\n";
    return out;
  }
  if (f == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"A", r.A},
                     {"M", r.M_display},
                     {"M_decimal", r.M_decimal},
                     {"word", r.word},
                     {"base", r.base}});
    return nlohmann::json{{"rows", arr}}.dump(2);
  }
  std::ostringstream out;
  out << " A  M(A)\n";
  for (const auto& r : rows) {
    out << pad_left(std::to_string(r.A), 2) << "  " << r.M_display;
    if (r.M_display != r.M_decimal) out << " = " << r.M_decimal;
    out << "\n    word: " << (r.word.empty() ? "(search)" : r.word);
    if (!r.base.empty()) out << "  base: " << r.base;
    out << "\n";
  }
  return out.str();
}

} // namespace zm::tables
