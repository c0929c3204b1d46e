#include "jackpoly/text_format.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "jackpoly/errors.hpp"

namespace jackpoly {

namespace {

std::string abs_string(const mpz_class& c) {
  mpz_class a = abs(c);
  return a.get_str();
}

std::string alpha_term(const mpz_class& c, std::size_t k, bool compact) {
  const bool unit = (abs(c) == 1);
  std::string s;
  if (k == 0) return abs_string(c);
  if (!unit) s = abs_string(c) + (compact ? "" : "*");
  s += "a";
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

std::string render_alpha(const AlphaPoly& p, bool compact) {
  if (p.is_zero()) return "0";
  const std::string plus = compact ? "+" : " + ";
  const std::string minus = compact ? "-" : " - ";
  std::string out;
  bool first = true;
  const auto cs = p.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k] == 0) continue;
    if (first) {
      if (cs[k] < 0) out += "-";
    } else {
      out += cs[k] < 0 ? minus : plus;
    }
    out += alpha_term(cs[k], k, compact);
    first = false;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned small_integer() {
    const mpz_class v = integer();
    if (!v.fits_uint_p()) fail("integer out of range");
    return static_cast<unsigned>(v.get_ui());
  }

  AlphaPoly alpha_poly() {
    AlphaPoly p;
    bool negative = accept('-');
    while (true) {
      p += alpha_term(negative);
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return p;
  }

  AlphaRational coefficient() {
    expect('(');
    AlphaPoly num = alpha_poly();
    expect(')');
    if (accept('/')) {
      expect('(');
      AlphaPoly den = alpha_poly();
      expect(')');
      return AlphaRational(std::move(num), std::move(den));
    }
    return AlphaRational(std::move(num));
  }

  void variable_power(Monomial& m) {
    expect('x');
    const unsigned idx = small_integer();
    if (idx < 1 || idx > m.size()) fail("variable index out of range");
    unsigned e = 1;
    if (accept('^')) e = small_integer();
    m[idx - 1] += e;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  AlphaPoly alpha_term(bool negative) {
    mpz_class c = 1;
    std::size_t k = 0;
    if (peek() == 'a') {
      ++pos_;
      k = 1;
    } else {
      c = integer();
      if (accept('*')) {
        expect('a');
        k = 1;
      } else if (peek() == 'a') {
        ++pos_;
        k = 1;
      }
    }
    if (k == 1 && accept('^')) k = small_integer();
    if (negative) c = -c;
    return AlphaPoly::monomial(c, k);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render(const AlphaPoly& p) { return render_alpha(p, false); }

std::string render(const AlphaRational& r) {
  std::string s = "(" + render(r.num()) + ")";
  if (!r.is_polynomial()) s += "/(" + render(r.den()) + ")";
  return s;
}

std::string render(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) out << " + ";
    first = false;
    out << render(c);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      out << "*x" << (k + 1);
      if (m[k] > 1) out << '^' << m[k];
    }
  }
  return out.str();
}

std::string render_compact(const AlphaPoly& p) { return render_alpha(p, true); }

std::string render_compact(const AlphaRational& r) {
  if (r.is_polynomial()) return render_compact(r.num());
  return "(" + render_compact(r.num()) + ")/(" + render_compact(r.den()) + ")";
}

AlphaPoly parse_alpha_poly(std::string_view text) {
  Parser p(text);
  AlphaPoly r = p.alpha_poly();
  if (!p.at_end()) p.fail("trailing input");
  return r;
}

AlphaRational parse_alpha_rational(std::string_view text) {
  Parser p(text);
  AlphaRational r = p.coefficient();
  if (!p.at_end()) p.fail("trailing input");
  return r;
}

MultiPoly parse_multi_poly(std::string_view text, std::size_t num_vars) {
  Parser p(text);
  MultiPoly f(num_vars);
  if (p.peek() == '0') {
    p.accept('0');
    if (!p.at_end()) p.fail("trailing input after zero polynomial");
    return f;
  }
  bool negative = p.accept('-');
  while (true) {
    AlphaRational c(1);
    Monomial m(num_vars, 0);
    if (p.peek() == '(') {
      c = p.coefficient();
      if (p.accept('*')) p.variable_power(m);
    } else {
      p.variable_power(m);
    }
    while (p.accept('*')) p.variable_power(m);
    f.add_term(std::move(m), negative ? -c : c);
    if (p.accept('+')) {
      negative = false;
    } else if (p.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  if (!p.at_end()) p.fail("trailing input");
  return f;
}

mpq_class parse_rational(std::string_view text) {
  Parser p(text);
  const bool negative = p.accept('-');
  mpz_class num = p.integer();
  mpz_class den = 1;
  if (p.accept('/')) den = p.integer();
  if (!p.at_end()) p.fail("trailing input");
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  mpq_class q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

}  // namespace jackpoly
