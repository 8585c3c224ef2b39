#pragma once

// ASCII expression parser for ring elements: + - * / ^ and parentheses,
// with implicit multiplication ("2xy", "3(x+1)").  Division is allowed
// only by invertible elements.  Symbols are matched greedily against the
// declared names (longest name wins), so "xi^2" reads xi when both x and xi
// are declared.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "coverforge/ring/concepts.hpp"

namespace coverforge {

template <CommutativeRing R>
struct SymbolTable {
  R zero;
  std::vector<std::pair<std::string, R>> symbols;
};

namespace detail {

template <CommutativeRing R>
class ExpressionParser {
 public:
  ExpressionParser(const std::string& text, const SymbolTable<R>& table)
      : s_(text), table_(table) {}

  R parse() {
    R value = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + s_ + "'", 1, pos_ + 1);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  R expr() {
    R value = factor();
    for (;;) {
      if (eat('+'))
        value = value + term_rest(factor());
      else if (eat('-'))
        value = value - term_rest(factor());
      else
        return value;
    }
  }
  // first term is parsed by factor() + term_rest via expr's first call
  R term_rest(R value) {
    for (;;) {
      if (eat('*')) {
        value = value * power();
      } else if (eat('/')) {
        std::size_t at = pos_;
        R d = power();
        auto inv = try_inverse(d);
        if (!inv) {
          pos_ = at;
          fail("division by a non-invertible element");
        }
        value = value * *inv;
      } else if (starts_factor()) {
        value = value * power();
      } else {
        return value;
      }
    }
  }
  R factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    return term_rest(power());
  }
  R power() {
    R base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(s_.substr(start, pos_ - start));
      return pow(base, e);
    }
    return base;
  }
  R atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      R v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return from_integer(table_.zero, Integer(s_.substr(start, pos_ - start)));
    }
    const std::pair<std::string, R>* best = nullptr;
    for (const auto& sym : table_.symbols)
      if (s_.compare(pos_, sym.first.size(), sym.first) == 0 &&
          (!best || sym.first.size() > best->first.size()))
        best = &sym;
    if (!best) fail("unknown symbol");
    pos_ += best->first.size();
    return best->second;
  }

  const std::string& s_;
  const SymbolTable<R>& table_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <CommutativeRing R>
R parse_element(const std::string& text, const SymbolTable<R>& table) {
  return detail::ExpressionParser<R>(text, table).parse();
}

}  // namespace coverforge
