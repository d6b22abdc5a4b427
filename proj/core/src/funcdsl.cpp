#include "dlab/funcdsl.hpp"

#include <cctype>
#include <cstdint>
#include <utility>

namespace dlab {

namespace {

enum class Tok {
  Number,  // digits, optionally with one '.'
  Ident,   // letter run: x, pi, exp, cos, sin
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Semi,
  Colon,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  End,
};

struct Token {
  Tok type = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token eat() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r' ||
            src_[pos_] == '\n')) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    current_ = Token{Tok::End, "", line_, col_};
    if (pos_ >= src_.size()) return;

    const char c = src_[pos_];
    const int start_col = col_;
    auto single = [&](Tok t) {
      current_ = Token{t, std::string(1, c), line_, start_col};
      ++pos_;
      ++col_;
    };
    switch (c) {
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case ';': return single(Tok::Semi);
      case ':': return single(Tok::Colon);
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      case '*': return single(Tok::Star);
      case '/': return single(Tok::Slash);
      case '^': return single(Tok::Caret);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      bool seen_dot = false;
      while (end < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[end])) ||
              (src_[end] == '.' && !seen_dot))) {
        if (src_[end] == '.') seen_dot = true;
        ++end;
      }
      current_ = Token{Tok::Number, std::string(src_.substr(pos_, end - pos_)),
                       line_, start_col};
      col_ += static_cast<int>(end - pos_);
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() &&
             std::isalpha(static_cast<unsigned char>(src_[end]))) {
        ++end;
      }
      current_ = Token{Tok::Ident, std::string(src_.substr(pos_, end - pos_)),
                       line_, start_col};
      col_ += static_cast<int>(end - pos_);
      pos_ = end;
      return;
    }
    throw ParseError(ParseErrorKind::Syntax, line_, start_col,
                     std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

[[noreturn]] void fail(const Token& at, const std::string& msg) {
  throw ParseError(ParseErrorKind::Syntax, at.line, at.col, msg);
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  PiecewiseFunction parse_spec() {
    std::vector<Segment> segments;
    std::vector<Token> interval_tokens;
    if (lex_.peek().type == Tok::LBracket) {
      segments.push_back(parse_segment(interval_tokens));
      while (lex_.peek().type == Tok::Semi) {
        lex_.eat();
        segments.push_back(parse_segment(interval_tokens));
      }
    } else {
      // Bare-expression shorthand: one segment on [0, 2pi].
      interval_tokens.push_back(lex_.peek());
      std::vector<Term> terms = parse_expr();
      segments.push_back(make_segment(Bound::plain(Rational{0}),
                                      Bound::pi(Rational{2}),
                                      std::move(terms), interval_tokens.back()));
    }
    expect(Tok::End, "end of input");
    check_tiling(segments, interval_tokens);
    return PiecewiseFunction(std::move(segments));
  }

  double parse_scalar_only() {
    const Token at = lex_.peek();
    Bound b = parse_bound();
    expect(Tok::End, "end of input");
    (void)at;
    return b.to_double_value();
  }

 private:
  Token expect(Tok t, const std::string& what) {
    if (lex_.peek().type != t) {
      fail(lex_.peek(), "expected " + what + ", got '" +
                            (lex_.peek().type == Tok::End ? "end of input"
                                                          : lex_.peek().text) +
                            "'");
    }
    return lex_.eat();
  }

  static Segment make_segment(Bound lo, Bound hi, std::vector<Term> terms,
                              const Token& at) {
    try {
      return Segment(std::move(lo), std::move(hi), std::move(terms));
    } catch (const ArgumentError& e) {
      throw ParseError(ParseErrorKind::Syntax, at.line, at.col, e.what());
    }
  }

  Segment parse_segment(std::vector<Token>& interval_tokens) {
    const Token at = lex_.peek();
    interval_tokens.push_back(at);
    expect(Tok::LBracket, "'['");
    Bound lo = parse_bound();
    expect(Tok::Comma, "','");
    Bound hi = parse_bound();
    if (lex_.peek().type == Tok::RParen || lex_.peek().type == Tok::RBracket) {
      lex_.eat();  // the closing bracket is cosmetic; tiling decides ownership
    } else {
      fail(lex_.peek(), "expected ')' or ']'");
    }
    expect(Tok::Colon, "':'");
    std::vector<Term> terms = parse_expr();
    return make_segment(std::move(lo), std::move(hi), std::move(terms), at);
  }

  void check_tiling(const std::vector<Segment>& segments,
                    const std::vector<Token>& interval_tokens) {
    for (std::size_t i = 1; i < segments.size(); ++i) {
      if (segments[i].lo == segments[i - 1].hi) continue;
      const Token& at = interval_tokens[i];
      const double prev = segments[i - 1].hi_value();
      const double cur = segments[i].lo_value();
      std::string what;
      if (cur > prev) {
        what = "gap";
      } else if (cur < prev) {
        what = "overlap";
      } else {
        what = "breakpoint mismatch (pi-multiple vs plain rational)";
      }
      throw ParseError(ParseErrorKind::Tiling, at.line, at.col,
                       what + ": segment starts at " + segments[i].lo.str() +
                           " but previous ends at " + segments[i - 1].hi.str());
    }
  }

  // rational := digits ['.' digits] | digits '/' digits
  Rational parse_rational() {
    Token num = expect(Tok::Number, "a number");
    if (lex_.peek().type == Tok::Slash) {
      lex_.eat();
      Token den = expect(Tok::Number, "a denominator");
      if (num.text.find('.') != std::string::npos ||
          den.text.find('.') != std::string::npos) {
        fail(num, "fraction parts must be integers");
      }
      const std::int64_t n = to_int(num);
      const std::int64_t d = to_int(den);
      if (d == 0) fail(den, "zero denominator");
      return Rational(n, d);
    }
    return decimal_to_rational(num);
  }

  Rational parse_signed_rational() {
    std::int64_t sign = 1;
    while (lex_.peek().type == Tok::Plus || lex_.peek().type == Tok::Minus) {
      if (lex_.eat().type == Tok::Minus) sign = -sign;
    }
    return sign * parse_rational();
  }

  // bound := signed rational with optional "pi" suffix
  Bound parse_bound() {
    Rational r = parse_signed_rational();
    if (lex_.peek().type == Tok::Ident && lex_.peek().text == "pi") {
      lex_.eat();
      return Bound::pi(std::move(r));
    }
    return Bound::plain(std::move(r));
  }

  std::int64_t to_int(const Token& t) {
    if (t.text.size() > 18) fail(t, "number too large");
    std::int64_t v = 0;
    for (char c : t.text) v = v * 10 + (c - '0');
    return v;
  }

  Rational decimal_to_rational(const Token& t) {
    const std::size_t dot = t.text.find('.');
    if (dot == std::string::npos) return Rational(to_int(t));
    std::string digits = t.text.substr(0, dot) + t.text.substr(dot + 1);
    const std::size_t frac_len = t.text.size() - dot - 1;
    if (frac_len == 0) fail(t, "trailing decimal point");
    if (digits.size() > 18) fail(t, "number has too many digits");
    std::int64_t n = 0;
    for (char c : digits) n = n * 10 + (c - '0');
    std::int64_t d = 1;
    for (std::size_t i = 0; i < frac_len; ++i) d *= 10;
    return Rational(n, d);
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  std::vector<Term> parse_expr() {
    std::vector<Term> terms;
    std::int64_t sign = 1;
    if (lex_.peek().type == Tok::Plus || lex_.peek().type == Tok::Minus) {
      if (lex_.eat().type == Tok::Minus) sign = -1;
    }
    terms.push_back(parse_term(sign));
    while (lex_.peek().type == Tok::Plus || lex_.peek().type == Tok::Minus) {
      sign = lex_.eat().type == Tok::Minus ? -1 : 1;
      terms.push_back(parse_term(sign));
    }
    return terms;
  }

  // term := coefficient ['*' atom] | atom
  Term parse_term(std::int64_t sign) {
    if (lex_.peek().type == Tok::Number) {
      Rational coeff = sign * parse_rational();
      if (lex_.peek().type == Tok::Star) {
        lex_.eat();
        return parse_atom(std::move(coeff));
      }
      return Term(TermKind::Power, std::move(coeff), Rational{0});
    }
    return parse_atom(Rational(sign));
  }

  // atom := 'x' ['^' int] | 'exp' '(' a '*x' ')' | ('cos'|'sin') '(' arg ')'
  Term parse_atom(Rational coeff) {
    Token id = expect(Tok::Ident, "x, exp, cos, or sin");
    if (id.text == "x") {
      Rational expo{1};
      if (lex_.peek().type == Tok::Caret) {
        lex_.eat();
        Token e = expect(Tok::Number, "an exponent");
        if (e.text.find('.') != std::string::npos) {
          fail(e, "exponent must be an integer");
        }
        const std::int64_t k = to_int(e);
        if (k > kMaxPowerExponent) {
          throw ParseError(ParseErrorKind::UnsupportedExponent, e.line, e.col,
                           "unsupported exponent " + e.text + " (max " +
                               std::to_string(kMaxPowerExponent) + ")");
        }
        expo = Rational(k);
      }
      return Term(TermKind::Power, std::move(coeff), std::move(expo));
    }
    if (id.text == "exp") {
      expect(Tok::LParen, "'('");
      Rational rate = parse_linear_in_x();
      expect(Tok::RParen, "')'");
      return Term(TermKind::Exponential, std::move(coeff), std::move(rate));
    }
    if (id.text == "cos" || id.text == "sin") {
      const TermKind kind =
          id.text == "cos" ? TermKind::Cosine : TermKind::Sine;
      expect(Tok::LParen, "'('");
      auto [freq, phase] = parse_trig_arg();
      expect(Tok::RParen, "')'");
      return Term(kind, std::move(coeff), std::move(freq), std::move(phase));
    }
    fail(id, "unknown name '" + id.text + "'");
  }

  // a*x | x | -x  (argument of exp)
  Rational parse_linear_in_x() {
    std::int64_t sign = 1;
    if (lex_.peek().type == Tok::Plus || lex_.peek().type == Tok::Minus) {
      if (lex_.eat().type == Tok::Minus) sign = -1;
    }
    if (lex_.peek().type == Tok::Number) {
      Rational a = sign * parse_rational();
      expect(Tok::Star, "'*'");
      Token x = expect(Tok::Ident, "'x'");
      if (x.text != "x") fail(x, "expected 'x'");
      return a;
    }
    Token x = expect(Tok::Ident, "'x'");
    if (x.text != "x") fail(x, "expected 'x'");
    return Rational(sign);
  }

  // [a '*'] 'x' [('+'|'-') b]  |  b      (argument of cos/sin)
  std::pair<Rational, Rational> parse_trig_arg() {
    std::int64_t sign = 1;
    if (lex_.peek().type == Tok::Plus || lex_.peek().type == Tok::Minus) {
      if (lex_.eat().type == Tok::Minus) sign = -1;
    }
    Rational freq{0}, phase{0};
    bool have_x = false;
    if (lex_.peek().type == Tok::Number) {
      Rational r = sign * parse_rational();
      if (lex_.peek().type == Tok::Star) {
        lex_.eat();
        Token x = expect(Tok::Ident, "'x'");
        if (x.text != "x") fail(x, "expected 'x'");
        freq = std::move(r);
        have_x = true;
      } else {
        phase = std::move(r);  // constant argument
      }
    } else {
      Token x = expect(Tok::Ident, "'x'");
      if (x.text != "x") fail(x, "expected 'x'");
      freq = Rational(sign);
      have_x = true;
    }
    if (have_x &&
        (lex_.peek().type == Tok::Plus || lex_.peek().type == Tok::Minus)) {
      const std::int64_t psign = lex_.eat().type == Tok::Minus ? -1 : 1;
      phase = psign * parse_rational();
    }
    return {std::move(freq), std::move(phase)};
  }

  Lexer lex_;
};

std::string format_term_body(const Term& t, const Rational& mag) {
  auto with_coeff = [&](const std::string& body) {
    return mag == 1 ? body : to_string(mag) + "*" + body;
  };
  switch (t.kind) {
    case TermKind::Power: {
      const std::int64_t k = t.parameter.numerator();
      if (k == 0) return to_string(mag);
      std::string x = k == 1 ? "x" : "x^" + std::to_string(k);
      return with_coeff(x);
    }
    case TermKind::Exponential:
      return with_coeff("exp(" + to_string(t.parameter) + "*x)");
    case TermKind::Cosine:
    case TermKind::Sine: {
      const std::string name = t.kind == TermKind::Cosine ? "cos" : "sin";
      std::string arg;
      if (t.parameter == 0) {
        arg = to_string(t.phase);
      } else {
        arg = t.parameter == 1 ? "x" : to_string(t.parameter) + "*x";
        if (t.phase > 0) {
          arg += "+" + to_string(t.phase);
        } else if (t.phase < 0) {
          arg += "-" + to_string(-t.phase);
        }
      }
      return with_coeff(name + "(" + arg + ")");
    }
  }
  return {};
}

std::string format_expr(const std::vector<Term>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    const bool negative = t.coefficient < 0;
    const Rational mag = negative ? -t.coefficient : t.coefficient;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_term_body(t, mag);
  }
  return out;
}

}  // namespace

PiecewiseFunction parse_function(std::string_view text) {
  Parser p(text);
  return p.parse_spec();
}

std::string format_function(const PiecewiseFunction& f) {
  const auto& segs = f.segments();
  std::string out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i > 0) out += " ; ";
    const bool last = i + 1 == segs.size();
    out += "[" + segs[i].lo.str() + "," + segs[i].hi.str() +
           (last ? "]" : ")") + ": " + format_expr(segs[i].terms);
  }
  return out;
}

std::vector<PiecewiseFunction> parse_corpus(std::string_view text) {
  std::vector<PiecewiseFunction> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    const bool blank =
        line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (!blank) {
      try {
        out.push_back(parse_function(line));
      } catch (const ParseError& e) {
        throw ParseError(e.kind, line_no, e.col, e.detail);
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

double parse_scalar(std::string_view text) {
  Parser p(text);
  return p.parse_scalar_only();
}

}  // namespace dlab
