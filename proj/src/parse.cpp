#include "cfroots/parse.hpp"

#include <cctype>
#include <string>

#include "cfroots/errors.hpp"

namespace cfroots {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) throw parse_error("empty expression", pos_);
    Polynomial p = expr();
    skip_space();
    if (!at_end()) throw parse_error(std::string("unexpected '") + peek() + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
        continue;
      }
      skip_space();
      if (peek() == 'x' || peek() == '(') {
        acc = acc * unary();
        continue;
      }
      return acc;
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    if (!is_digit(peek())) throw parse_error("exponent must be a nonnegative integer literal", pos_);
    mpz_class e = integer_literal();
    if (e > kMaxExponent) throw parse_error("exponent overflow", start);
    return pow(base, e.get_ui());
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) throw parse_error("unexpected end of expression", pos_);
    char c = peek();
    if (c == 'x') {
      ++pos_;
      return Polynomial({0, 1});
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw parse_error("expected ')'", pos_);
      return inner;
    }
    if (is_digit(c)) return Polynomial(std::vector<mpz_class>{integer_literal()});
    throw parse_error(std::string("unexpected '") + c + "'", pos_);
  }

  mpz_class integer_literal() {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    if (peek() == '.' || peek() == 'e' || peek() == 'E') {
      throw parse_error("non-integer literal", start);
    }
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  static Polynomial pow(Polynomial base, unsigned long e) {
    Polynomial result({1});
    while (e != 0) {
      if (e & 1UL) result = result * base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset += b;
  return s.substr(b, e - b);
}

}  // namespace

Polynomial parse_coefficients(std::string_view text) {
  std::vector<mpz_class> coeffs;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view field = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    std::size_t offset = start;
    field = trim(field, offset);
    if (field.empty()) throw parse_error("empty coefficient", offset);
    std::size_t i = (field[0] == '-' || field[0] == '+') ? 1 : 0;
    if (i == field.size()) throw parse_error("expected digits", offset + i);
    for (std::size_t j = i; j < field.size(); ++j) {
      char c = field[j];
      if (c == '.' || c == 'e' || c == 'E') throw parse_error("non-integer literal", offset);
      if (!is_digit(c)) throw parse_error(std::string("unexpected '") + c + "'", offset + j);
    }
    mpz_class v(std::string(field.substr(i)), 10);
    coeffs.push_back(field[0] == '-' ? mpz_class(-v) : v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

Polynomial parse_polynomial(std::string_view text) {
  const bool has_comma = text.find(',') != std::string_view::npos;
  const bool has_x = text.find('x') != std::string_view::npos;
  if (has_comma && !has_x) return parse_coefficients(text);
  return parse_expression(text);
}

std::string render(const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const mpz_class& c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    mpz_class m = abs(c);
    if (i == 0) {
      out += m.get_str();
      continue;
    }
    if (m != 1) out += m.get_str() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string render_coefficients(const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += a[i].get_str();
  }
  return out;
}

}  // namespace cfroots
