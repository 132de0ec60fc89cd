#include "coha/poly_parse.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace coha {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const DimVector& d) : text_(text), d_(d) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    while (eat('*')) p *= unary();
    return p;
  }

  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) return base.pow(integer());
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      try {
        return Polynomial(parse_rational(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    if (eat('x')) {
      int vertex = 0;
      int k = 1;
      if (eat('[')) {
        vertex = integer();
        if (!eat(',')) fail("expected ','");
        k = integer();
        if (!eat(']')) fail("expected ']'");
      }
      try {
        return Polynomial::variable(variable_index(d_, vertex, k));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  const DimVector& d_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const DimVector& d) { return Parser(text, d).parse(); }

SymPoly parse_element(std::string_view text) {
  if (text.substr(0, 2) != "d=") throw std::invalid_argument("element must look like d=<dims>:<polynomial>");
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("element must look like d=<dims>:<polynomial>");
  const DimVector d = parse_dim(text.substr(2, colon - 2));
  return SymPoly(d, parse_polynomial(text.substr(colon + 1), d));
}

}  // namespace coha
