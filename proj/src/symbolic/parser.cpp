#include "foliaquant/parser.hpp"

#include <cctype>

#include "foliaquant/errors.hpp"

namespace fq {

bool is_identifier(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

namespace {

class Reader {
 public:
  Reader(std::string_view text, const std::set<std::string>& symbols) : text_(text), symbols_(symbols) {}

  Complex run() {
    Complex e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 0, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Complex expr() {
    Complex e = term();
    while (true) {
      if (accept('+')) {
        e += term();
      } else if (accept('-')) {
        e -= term();
      } else {
        return e;
      }
    }
  }

  Complex term() {
    Complex e = unary();
    while (true) {
      if (accept('*')) {
        e *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Complex d = unary();
        if (d.is_structurally_zero()) throw ParseError("division by zero", 0, at + 1);
        e /= d;
      } else {
        return e;
      }
    }
  }

  Complex unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Complex power() {
    Complex base = primary();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (negative && base.is_structurally_zero()) throw ParseError("zero to a negative power", 0, start + 1);
    return pow(base, negative ? -n : n);
  }

  Complex number() {
    std::size_t start = pos_;
    std::string digits;
    int decimals = 0;
    bool point = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (point) ++decimals;
      } else if (c == '.' && !point) {
        point = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) throw ParseError("malformed number", 0, start + 1);
    mpq_class value(mpz_class(digits, 10), 1);
    if (decimals > 0) {
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
      value = mpq_class(mpz_class(digits, 10), scale);
      value.canonicalize();
    }
    return Expr(value);
  }

  Complex primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (accept('(')) {
      Complex e = expr();
      expect(')');
      return e;
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("unexpected '" + std::string(1, c) + "'");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (name == "sin" || name == "cos" || name == "exp") {
      expect('(');
      Complex arg = expr();
      expect(')');
      try {
        if (name == "sin") return sin(arg);
        if (name == "cos") return cos(arg);
        return exp(arg);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), 0, start + 1);
      }
    }
    if (name == "i") return Complex::i();
    if (name == "pi" || symbols_.contains(name)) return Expr::symbol(name);
    throw ParseError("unknown symbol '" + name + "'", 0, start + 1);
  }

  std::string_view text_;
  const std::set<std::string>& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

ExpressionParser::ExpressionParser(std::set<std::string> symbols) : symbols_(std::move(symbols)) {}

Complex ExpressionParser::parse_complex(std::string_view text) const { return Reader(text, symbols_).run(); }

Expr ExpressionParser::parse_real(std::string_view text) const {
  Complex c = parse_complex(text);
  if (!c.is_real()) throw ParseError("expected a real expression", 0, 1);
  return c.re;
}

}  // namespace fq
