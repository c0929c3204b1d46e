#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "jackpoly/alpha_poly.hpp"
#include "jackpoly/alpha_rational.hpp"
#include "jackpoly/multi_poly.hpp"

// Interchange grammar shared by the CLI and the golden tests:
//
//   poly   := "0" | term (" + " term)*
//   term   := coeff | coeff "*" mono
//   coeff  := "(" apoly ")" | "(" apoly ")/(" apoly ")"
//   apoly  := c0 " + " c1 "*a" " + " c2 "*a^2" ...   (ascending, zero terms
//             omitted, unit multipliers dropped, negatives as " - ")
//   mono   := "x1^e1*x2^e2..."                       (zero exponents omitted,
//             "^1" omitted)
//
// The parser accepts any whitespace and either sign between terms.

namespace jackpoly {

std::string render(const AlphaPoly& p);
std::string render(const AlphaRational& r);
std::string render(const MultiPoly& f);

/// Spreadsheet-friendly form: "1+a", "2+4a", "-a", "3a^2".
std::string render_compact(const AlphaPoly& p);
/// render_compact for num, with "(num)/(den)" when den != 1.
std::string render_compact(const AlphaRational& r);

AlphaPoly parse_alpha_poly(std::string_view text);
AlphaRational parse_alpha_rational(std::string_view text);
/// Parses into a polynomial over num_vars variables; variable indices in the
/// text must not exceed num_vars.
MultiPoly parse_multi_poly(std::string_view text, std::size_t num_vars);

/// Parses "P/Q" or "P" into an exact rational.
mpq_class parse_rational(std::string_view text);

}  // namespace jackpoly
