#include "mps/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "mps/error.hpp"

namespace mps {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;  // literal text for numbers and names
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c)) {
      while (i < s.size() && is_digit(s[i])) ++i;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (i >= s.size() || !is_digit(s[i])) {
          throw Error::at_position(ErrorKind::SyntaxError, "expected denominator digits", i);
        }
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      out.push_back({Tok::Number, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (is_name_start(c)) {
      while (i < s.size() && is_name_char(s[i])) ++i;
      if (i < s.size() && s[i] == '@') {
        ++i;
        if (i >= s.size() || !is_digit(s[i])) {
          throw Error::at_position(ErrorKind::SyntaxError, "expected copy index after '@'", i);
        }
        while (i < s.size() && is_digit(s[i])) ++i;
      } else {
        while (i < s.size() && s[i] == '\'') ++i;
      }
      out.push_back({Tok::Name, start, std::string(s.substr(start, i - start))});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw Error::at_position(ErrorKind::SyntaxError,
                                 std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, start, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

Rational parse_literal(const Token& t) {
  Rational q;
  if (q.set_str(t.text, 10) != 0) {
    throw Error::at_position(ErrorKind::SyntaxError, "malformed number '" + t.text + "'", t.pos);
  }
  if (q.get_den() == 0) {
    throw Error::at_position(ErrorKind::DivisionByZero, "zero denominator in '" + t.text + "'", t.pos);
  }
  q.canonicalize();
  return q;
}

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : tokens_(tokenize(text)), ring_(ring) {}

  Polynomial parse() {
    if (peek().kind == Tok::End) {
      throw Error::at_position(ErrorKind::SyntaxError, "empty expression", peek().pos);
    }
    Polynomial p = expression();
    if (peek().kind != Tok::End) unexpected();
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void unexpected() const {
    const Token& t = peek();
    if (t.kind == Tok::Name || t.kind == Tok::Number || t.kind == Tok::LParen) {
      throw Error::at_position(ErrorKind::SyntaxError,
                               "implicit multiplication is not allowed; use '*'", t.pos);
    }
    if (t.kind == Tok::End) throw Error::at_position(ErrorKind::SyntaxError, "unexpected end of input", t.pos);
    throw Error::at_position(ErrorKind::SyntaxError, "unexpected '" + t.text + "'", t.pos);
  }

  Polynomial expression() {
    Polynomial acc = product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = advance().kind == Tok::Minus;
      Polynomial rhs = product();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = factor();
    while (peek().kind == Tok::Star) {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    if (peek().kind == Tok::Minus) {
      advance();
      return -factor();
    }
    if (peek().kind == Tok::Plus) {
      advance();
      return factor();
    }
    Polynomial base = atom();
    if (peek().kind != Tok::Caret) return base;
    advance();
    const std::uint64_t e = exponent();
    if (peek().kind == Tok::Caret) {
      throw Error::at_position(ErrorKind::SyntaxError, "chained '^' needs parentheses", peek().pos);
    }
    return base.pow(e);
  }

  std::uint64_t exponent() {
    const Token& t = peek();
    if (t.kind == Tok::Minus) {
      throw Error::at_position(ErrorKind::NegativeExponent, "negative exponents are not allowed", t.pos);
    }
    if (t.kind != Tok::Number) {
      throw Error::at_position(ErrorKind::SyntaxError, "exponent must be an integer literal", t.pos);
    }
    advance();
    if (t.text.find('/') != std::string::npos) {
      throw Error::at_position(ErrorKind::NonIntegerExponent,
                               "exponent '" + t.text + "' is not an integer", t.pos);
    }
    Integer z(t.text, 10);
    if (z > std::numeric_limits<Monomial::Exponent>::max()) {
      throw Error::at_position(ErrorKind::ExponentOverflow, "exponent too large", t.pos);
    }
    return z.get_ui();
  }

  Polynomial atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        advance();
        return Polynomial::constant(ring_, parse_literal(t));
      case Tok::Name: {
        advance();
        auto index = resolve_variable(ring_->table, t.text);
        if (!index) {
          throw Error::at_position(ErrorKind::UnknownVariable, "unknown variable '" + t.text + "'", t.pos);
        }
        return Polynomial::variable(ring_, *index);
      }
      case Tok::LParen: {
        advance();
        Polynomial inner = expression();
        if (peek().kind != Tok::RParen) {
          if (peek().kind == Tok::End) {
            throw Error::at_position(ErrorKind::SyntaxError, "missing ')'", peek().pos);
          }
          unexpected();
        }
        advance();
        return inner;
      }
      default:
        if (t.kind == Tok::End) {
          throw Error::at_position(ErrorKind::SyntaxError, "unexpected end of input", t.pos);
        }
        throw Error::at_position(ErrorKind::SyntaxError, "unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const RingPtr& ring_;
};

std::string render_monomial(const Monomial& m, const VariableTable& table, NameStyle style) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += display_name(table[i], style);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

std::string render_poly(const Polynomial& p, NameStyle style) {
  if (p.is_zero()) return "0";
  const auto& table = p.ring()->table;
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coefficient < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(t.coefficient);
    if (t.monomial.is_one()) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += render_monomial(t.monomial, table, style);
  }
  return out;
}

Variable parse_variable_token(std::string_view token) {
  std::size_t i = 0;
  if (token.empty() || !is_name_start(token[0])) {
    throw Error::at_position(ErrorKind::SyntaxError, "malformed variable '" + std::string(token) + "'", 0);
  }
  while (i < token.size() && is_name_char(token[i])) ++i;
  Variable v{std::string(token.substr(0, i)), 0, false};
  if (i == token.size()) return v;
  if (token[i] == '@') {
    const auto digits = token.substr(i + 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), is_digit) || digits.size() > 6) {
      throw Error::at_position(ErrorKind::SyntaxError, "malformed copy index in '" + std::string(token) + "'", i);
    }
    v.copy = static_cast<unsigned>(std::stoul(std::string(digits)));
    if (v.copy == 0) {
      throw Error::at_position(ErrorKind::SyntaxError, "copy index must be at least 1", i);
    }
    return v;
  }
  const auto primes = token.substr(i);
  if (!std::all_of(primes.begin(), primes.end(), [](char c) { return c == '\''; })) {
    throw Error::at_position(ErrorKind::SyntaxError, "malformed variable '" + std::string(token) + "'", i);
  }
  v.copy = static_cast<unsigned>(primes.size()) + 1;
  return v;
}

std::vector<Variable> parse_variable_list(std::string_view text) {
  std::vector<Variable> vars;
  std::vector<bool> bare;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    try {
      vars.push_back(parse_variable_token(text.substr(start, i - start)));
    } catch (const Error& e) {
      throw Error::at_position(e.kind(), "malformed variable '" + std::string(text.substr(start, i - start)) + "'",
                               start);
    }
    bare.push_back(text.substr(start, i - start).find_first_of("@'") == std::string_view::npos);
  }
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (!bare[k]) continue;
    const bool has_copies = std::any_of(vars.begin(), vars.end(), [&](const Variable& w) {
      return w.base == vars[k].base && w.copy >= 2;
    });
    if (has_copies) vars[k].copy = 1;
  }
  return vars;
}

std::optional<std::size_t> resolve_variable(const VariableTable& table, std::string_view token) {
  Variable v;
  try {
    v = parse_variable_token(token);
  } catch (const Error&) {
    return std::nullopt;
  }
  const bool is_bare = token.find_first_of("@'") == std::string_view::npos;
  if (is_bare) return table.find_bare(v.base);
  return table.find(v.base, v.copy);
}

}  // namespace mps
