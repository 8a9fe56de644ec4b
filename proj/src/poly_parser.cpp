#include <cctype>
#include <stdexcept>

#include "bordx/graded_poly.hpp"

namespace bordx {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names, const std::vector<int>& degrees)
      : text_(text), names_(names), degrees_(degrees) {}

  GradedPoly parse() {
    GradedPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  GradedPoly expr() {
    GradedPoly acc = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  GradedPoly term() {
    GradedPoly acc = unary();
    while (true) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * unary();
    }
  }

  GradedPoly unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  GradedPoly power() {
    GradedPoly base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent after '^'");
    unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
    return graded_pow(base, static_cast<unsigned>(k), kNoDegreeCap);
  }

  GradedPoly atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      GradedPoly inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return GradedPoly::constant(degrees_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return GradedPoly::generator(degrees_, i);
      pos_ = start;
      fail("unknown generator '" + std::string(name) + "'");
    }
    fail("expected a number, generator or '('");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                                " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  const std::vector<int>& degrees_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedPoly parse_graded_poly(std::string_view text, const std::vector<std::string>& names,
                             const std::vector<int>& degrees) {
  if (names.size() != degrees.size()) throw std::invalid_argument("name count differs from degree count");
  return PolyParser(text, names, degrees).parse();
}

}  // namespace bordx
