#include "ceva/scalar_io.hpp"

#include <cctype>
#include <cstdlib>

namespace ceva {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (s.substr(i, w.size()) == w) {
      i += w.size();
      return true;
    }
    return false;
  }
};

std::optional<mpz_class> parse_digits(Cursor& c) {
  c.skip_ws();
  std::string digits;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    digits.push_back(c.s[c.i++]);
  if (digits.empty()) return std::nullopt;
  return mpz_class(digits, 10);
}

// number := digits ( '/' digits | '.' digits? )? ( [eE] [+-]? digits )?
// Only the fraction form counts as an exact literal; decimals and bare
// integers still convert losslessly to rationals but leave the command in
// float mode. The caller has already consumed the sign.
struct Number {
  Rational value;
  bool exact_literal;
};

std::optional<Number> parse_number(Cursor& c) {
  auto intpart = parse_digits(c);
  mpz_class num = intpart ? *intpart : mpz_class(0);
  bool any_digits = intpart.has_value();

  if (intpart && c.i < c.s.size() && c.s[c.i] == '/') {
    ++c.i;
    auto den = parse_digits(c);
    if (!den || *den == 0) return std::nullopt;
    return Number{Rational(num, *den), true};
  }

  mpz_class den(1);
  if (c.i < c.s.size() && c.s[c.i] == '.') {
    ++c.i;
    std::string frac;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
      frac.push_back(c.s[c.i++]);
    if (!frac.empty()) {
      any_digits = true;
      for (char ch : frac) {
        num = num * 10 + (ch - '0');
        den *= 10;
      }
    }
  }
  if (!any_digits) return std::nullopt;

  if (c.i < c.s.size() && (c.s[c.i] == 'e' || c.s[c.i] == 'E')) {
    ++c.i;
    int esign = 1;
    if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) esign = c.s[c.i++] == '-' ? -1 : 1;
    auto ed = parse_digits(c);
    if (!ed || !ed->fits_slong_p()) return std::nullopt;
    const long e = ed->get_si();
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(e));
    if (esign > 0)
      num *= pow10;
    else
      den *= pow10;
  }
  return Number{Rational(num, den), false};
}

// term := number ['*'? 'sqrt5'] | 'sqrt5'
struct Term {
  Rational coeff;
  bool is_sqrt5;
  bool exact_literal;
};

std::optional<Term> parse_term(Cursor& c, int outer_sign) {
  if (c.eat_word("sqrt5")) return Term{Rational(outer_sign), true, true};
  auto n = parse_number(c);
  if (!n) return std::nullopt;
  Rational coeff = outer_sign < 0 ? -n->value : n->value;
  bool root = false;
  std::size_t save = c.i;
  const bool star = c.eat('*');
  if (c.eat_word("sqrt5"))
    root = true;
  else if (star)
    return std::nullopt;
  else
    c.i = save;
  return Term{coeff, root, root || n->exact_literal};
}

}  // namespace

std::optional<ParsedScalar> parse_scalar(std::string_view text) {
  Cursor c{text};
  ParsedScalar out;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.eat('-'))
      sign = -1;
    else if (!c.eat('+') && !first)
      return std::nullopt;  // terms after the first need an explicit sign
    auto term = parse_term(c, sign);
    if (!term) return std::nullopt;
    if (term->is_sqrt5)
      out.value.q += term->coeff;
    else
      out.value.p += term->coeff;
    out.exact_literal = out.exact_literal || term->exact_literal;
    first = false;
  }
  if (first) return std::nullopt;  // empty input
  return out;
}

std::optional<std::vector<ParsedScalar>> parse_scalar_list(std::string_view text,
                                                           std::size_t count) {
  std::vector<ParsedScalar> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    auto v = parse_scalar(piece);
    if (!v) return std::nullopt;
    out.push_back(*v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != count) return std::nullopt;
  return out;
}

}  // namespace ceva
