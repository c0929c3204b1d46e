#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jackpoly/alpha_poly.hpp"
#include "jackpoly/alpha_rational.hpp"
#include "jackpoly/jack.hpp"
#include "jackpoly/partition.hpp"

// Output formats for Jack coefficients.
//
// JSON record per result:
//   {"lambda":[2], "n":2, "coeffs":[{"mu":[2], "v":[[0,1],[1,1]]}, ...]}
// `v` lists [degree, coefficient] pairs in ascending degree. Coefficients that
// overflow a signed 64-bit integer are written as decimal strings. A
// coefficient outside Z[alpha] is written as {"num":[...], "den":[...]} and the
// record gains "flagged": true.

namespace jackpoly {

/// Evaluation point for alpha; nullopt keeps coefficients symbolic.
using AlphaValue = std::optional<mpq_class>;

nlohmann::ordered_json to_json(const Partition& p);
nlohmann::ordered_json to_json(const AlphaPoly& p);
/// Polynomial terms, or {"num","den"} for a genuine rational function.
nlohmann::ordered_json to_json(const AlphaRational& r);
nlohmann::ordered_json to_json(const JackResult& result, const AlphaValue& alpha = std::nullopt);

/// One row per nonzero coefficient: lambda, mu, v and v/prod m_i(mu)!.
struct TableRow {
  Partition lambda;
  Partition mu;
  AlphaRational v;
  AlphaRational tilde_v;
};

std::vector<TableRow> table_rows(const JackResult& result);

nlohmann::ordered_json to_json(const TableRow& row, const AlphaValue& alpha = std::nullopt);

/// RFC 4180 quoting; partitions contain commas.
std::string csv_field(const std::string& s);
std::string csv_header();
std::string to_csv(const TableRow& row, const AlphaValue& alpha = std::nullopt);

/// "J[2] = (1 + a) m[2] + (2) m[1,1]"
std::string render_plain(const JackResult& result, const AlphaValue& alpha = std::nullopt);

}  // namespace jackpoly
