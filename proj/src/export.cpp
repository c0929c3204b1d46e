#include "jackpoly/export.hpp"

#include <sstream>

#include "jackpoly/text_format.hpp"

namespace jackpoly {

namespace {

nlohmann::ordered_json integer_json(const mpz_class& c) {
  if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

std::string coefficient_text(const AlphaRational& c, const AlphaValue& alpha, bool compact) {
  if (alpha) return c.evaluate(*alpha).get_str();
  return compact ? render_compact(c) : render(c);
}

}  // namespace

nlohmann::ordered_json to_json(const Partition& p) { return nlohmann::ordered_json(p.parts()); }

nlohmann::ordered_json to_json(const AlphaPoly& p) {
  auto out = nlohmann::ordered_json::array();
  const auto cs = p.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k] != 0) out.push_back(nlohmann::ordered_json::array({k, integer_json(cs[k])}));
  }
  return out;
}

nlohmann::ordered_json to_json(const AlphaRational& r) {
  if (r.is_polynomial()) return to_json(r.num());
  return {{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

nlohmann::ordered_json to_json(const JackResult& result, const AlphaValue& alpha) {
  nlohmann::ordered_json record;
  record["lambda"] = to_json(result.lambda);
  record["n"] = result.n;
  auto coeffs = nlohmann::ordered_json::array();
  bool flagged = false;
  for (const auto& [mu, v] : result.expansion.coeffs()) {
    nlohmann::ordered_json entry{{"mu", to_json(mu)}, {"v", to_json(v)}};
    if (alpha) entry["value"] = v.evaluate(*alpha).get_str();
    flagged = flagged || !v.is_polynomial();
    coeffs.push_back(std::move(entry));
  }
  record["coeffs"] = std::move(coeffs);
  if (flagged) record["flagged"] = true;
  return record;
}

std::vector<TableRow> table_rows(const JackResult& result) {
  std::vector<TableRow> rows;
  for (const auto& [mu, v] : result.expansion.coeffs()) {
    rows.push_back({result.lambda, mu, v, tilde_coefficient(mu, v)});
  }
  return rows;
}

nlohmann::ordered_json to_json(const TableRow& row, const AlphaValue& alpha) {
  nlohmann::ordered_json j{{"lambda", to_json(row.lambda)},
                   {"mu", to_json(row.mu)},
                   {"v", to_json(row.v)},
                   {"v_tilde", to_json(row.tilde_v)}};
  if (alpha) {
    j["v_value"] = row.v.evaluate(*alpha).get_str();
    j["v_tilde_value"] = row.tilde_v.evaluate(*alpha).get_str();
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_header() { return "lambda,mu,v,v_tilde"; }

std::string to_csv(const TableRow& row, const AlphaValue& alpha) {
  return csv_field(row.lambda.to_string()) + "," + csv_field(row.mu.to_string()) + "," +
         csv_field(coefficient_text(row.v, alpha, true)) + "," + csv_field(coefficient_text(row.tilde_v, alpha, true));
}

std::string render_plain(const JackResult& result, const AlphaValue& alpha) {
  std::ostringstream out;
  out << "J[" << result.lambda.to_string() << "] = ";
  if (result.expansion.is_zero()) return out.str() + "0";
  bool first = true;
  for (const auto& [mu, v] : result.expansion.coeffs()) {
    if (!first) out << " + ";
    first = false;
    out << (alpha ? "(" + coefficient_text(v, alpha, false) + ")" : render(v)) << " m[" << mu.to_string() << "]";
  }
  return out.str();
}

}  // namespace jackpoly
