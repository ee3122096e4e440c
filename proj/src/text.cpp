#include "rba/text.hpp"

#include <cctype>
#include <sstream>

namespace rba {

namespace {

void print_word(std::ostream& os, const Word& w) {
  bool first = true;
  for (const Prime& p : w.primes()) {
    if (!first) os << ' ';
    first = false;
    if (p.is_letter()) {
      os << 'x' << (p.letter_index() + 1);
    } else if (p.is_hole()) {
      os << '@';
    } else {
      os << "P(";
      print_word(os, p.body());
      os << ')';
    }
  }
}

}  // namespace

std::string to_string(const Word& w) {
  std::ostringstream os;
  print_word(os, w);
  return os.str();
}

std::string to_string(const StarWord& q) { return to_string(q.pattern()); }

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    bool neg = c < 0;
    Scalar mag = neg ? Scalar(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << to_string(mag) << " * ";
    print_word(os, w);
  }
  return os.str();
}

namespace {

enum class Tok { number, letter, p, lparen, rparen, plus, minus, star, slash, hole, end };

struct Token {
  Tok kind;
  std::string text;
  std::uint32_t value = 0;  // letter index (0-based) for letter tokens
  std::size_t line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) bump();
    tok_.line = line_;
    tok_.col = col_;
    if (i_ >= s_.size()) {
      tok_.kind = Tok::end;
      tok_.text = "<end>";
      return;
    }
    char c = s_[i_];
    switch (c) {
      case '(': tok_ = {Tok::lparen, "(", 0, line_, col_}; bump(); return;
      case ')': tok_ = {Tok::rparen, ")", 0, line_, col_}; bump(); return;
      case '+': tok_ = {Tok::plus, "+", 0, line_, col_}; bump(); return;
      case '-': tok_ = {Tok::minus, "-", 0, line_, col_}; bump(); return;
      case '*': tok_ = {Tok::star, "*", 0, line_, col_}; bump(); return;
      case '/': tok_ = {Tok::slash, "/", 0, line_, col_}; bump(); return;
      case '@': tok_ = {Tok::hole, "@", 0, line_, col_}; bump(); return;
      case 'P': tok_ = {Tok::p, "P", 0, line_, col_}; bump(); return;
      default: break;
    }
    if (c == 'x') {
      std::size_t l = line_, co = col_;
      bump();
      std::string digits = take_digits();
      if (digits.empty()) throw ParseError(l, co, "generator needs an index, e.g. x1");
      unsigned long idx = std::stoul(digits);
      if (idx == 0) throw ParseError(l, co, "generator indices start at 1");
      tok_ = {Tok::letter, "x" + digits, static_cast<std::uint32_t>(idx - 1), l, co};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t l = line_, co = col_;
      tok_ = {Tok::number, take_digits(), 0, l, co};
      return;
    }
    throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
  }

  std::string take_digits() {
    std::string d;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      d += s_[i_];
      bump();
    }
    return d;
  }

  void bump() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  Parser(std::string_view text, Scalar lambda, std::uint32_t alphabet)
      : lex_(text), lambda_(std::move(lambda)), alphabet_(alphabet) {}

  Poly parse() {
    Poly out = parse_sum();
    const Token& t = lex_.peek();
    if (t.kind != Tok::end) throw ParseError(t.line, t.col, "trailing input '" + t.text + "'");
    return out;
  }

 private:
  Poly parse_sum() {
    Poly acc;
    bool neg = false;
    if (lex_.peek().kind == Tok::plus) lex_.take();
    else if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      neg = true;
    }
    acc += sign(parse_term(), neg);
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      bool n = lex_.take().kind == Tok::minus;
      acc += sign(parse_term(), n);
    }
    return acc;
  }

  static Poly sign(Poly p, bool neg) { return neg ? -std::move(p) : std::move(p); }

  // term := [rational ['*']] factor (['*'] factor)*
  Poly parse_term() {
    Scalar coeff(1);
    bool have_coeff = false;
    if (lex_.peek().kind == Tok::number) {
      coeff = parse_rational();
      have_coeff = true;
      if (lex_.peek().kind == Tok::star) lex_.take();
    }
    if (!starts_factor(lex_.peek().kind)) {
      if (have_coeff)
        throw ParseError(lex_.peek().line, lex_.peek().col,
                         "a term needs at least one generator or bracket (no identity word)");
      throw ParseError(lex_.peek().line, lex_.peek().col,
                       "expected a generator, 'P(', or '@', got '" + lex_.peek().text + "'");
    }
    Poly acc = parse_factor();
    while (true) {
      if (lex_.peek().kind == Tok::star) {
        lex_.take();
        if (!starts_factor(lex_.peek().kind))
          throw ParseError(lex_.peek().line, lex_.peek().col, "expected a factor after '*'");
        acc = multiply(acc, parse_factor(), lambda_);
      } else if (starts_factor(lex_.peek().kind)) {
        acc = multiply(acc, parse_factor(), lambda_);
      } else {
        break;
      }
    }
    return coeff * acc;
  }

  static bool starts_factor(Tok k) { return k == Tok::letter || k == Tok::p || k == Tok::hole; }

  Poly parse_factor() {
    Token t = lex_.take();
    if (t.kind == Tok::letter) {
      if (alphabet_ != 0 && t.value >= alphabet_)
        throw ParseError(t.line, t.col,
                         "unknown generator " + t.text + " (alphabet size " +
                             std::to_string(alphabet_) + ")");
      return Poly(Word::letter(t.value));
    }
    if (t.kind == Tok::hole) return Poly(Word::hole());
    if (t.kind == Tok::p) {
      Token open = lex_.take();
      if (open.kind != Tok::lparen) throw ParseError(open.line, open.col, "expected '(' after P");
      Poly inner = parse_sum();
      Token close = lex_.take();
      if (close.kind != Tok::rparen) throw ParseError(close.line, close.col, "expected ')'");
      return apply_P(inner);
    }
    throw ParseError(t.line, t.col, "expected a factor, got '" + t.text + "'");
  }

  Scalar parse_rational() {
    Token num = lex_.take();
    Scalar v(num.text);
    if (lex_.peek().kind == Tok::slash) {
      lex_.take();
      Token den = lex_.take();
      if (den.kind != Tok::number)
        throw ParseError(den.line, den.col, "expected a denominator after '/'");
      Scalar d(den.text);
      if (d == 0) throw ParseError(den.line, den.col, "zero denominator");
      v /= d;
    }
    return v;
  }

  Lexer lex_;
  Scalar lambda_;
  std::uint32_t alphabet_;
};

}  // namespace

Poly parse_poly(std::string_view text, const Scalar& lambda, std::uint32_t alphabet_size) {
  return Parser(text, lambda, alphabet_size).parse();
}

Word parse_word(std::string_view text, std::uint32_t alphabet_size) {
  Poly p = parse_poly(text, Scalar(0), alphabet_size);
  if (p.term_count() != 1 || p.leading_coeff() != 1)
    throw std::invalid_argument("not a single word: " + std::string(text));
  Word w = p.leading_word();
  if (w.hole_count() != 0) throw std::invalid_argument("word contains a hole: " + std::string(text));
  return w;
}

StarWord parse_star_word(std::string_view text, std::uint32_t alphabet_size) {
  Poly p = parse_poly(text, Scalar(0), alphabet_size);
  if (p.term_count() != 1 || p.leading_coeff() != 1)
    throw std::invalid_argument("not a single star word: " + std::string(text));
  return StarWord(p.leading_word());
}

}  // namespace rba
