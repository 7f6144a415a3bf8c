#include "wsc/poly_io.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace wsc {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "latex") return Format::Latex;
  if (name == "text") return Format::Text;
  throw Error(ErrorCode::Parse, "unknown format '" + std::string(name) + "'");
}

namespace {

template <class P>
class Parser {
 public:
  using Lookup = std::function<std::optional<P>(char)>;

  Parser(std::string_view text, Lookup lookup) : text_(text), lookup_(std::move(lookup)) {}

  P parse() {
    P result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '('; }

  P expr() {
    P acc;
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    P first = term();
    acc = negate ? -first : first;
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  P term() {
    P acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  P factor() {
    P base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  P primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      P inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return P(typename P::coeff_type(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      if (auto p = lookup_(c)) return *p;
      fail("unknown variable '" + std::string(1, c) + "'");
    }
    fail("expected a factor");
  }

  std::string_view text_;
  Lookup lookup_;
  std::size_t pos_ = 0;
};

template <class P>
std::optional<P> by_name(char c) {
  for (std::size_t i = 0; i < P::arity; ++i)
    if (P::vars_type::names[i].size() == 1 && P::vars_type::names[i][0] == c) return P::variable(i);
  return std::nullopt;
}

}  // namespace

MultiPoly parse_poly(std::string_view text) {
  return Parser<MultiPoly>(text, [](char c) -> std::optional<MultiPoly> {
           if (c == 't') return vars::t();
           return by_name<MultiPoly>(c);
         }).parse();
}

TPoly parse_tpoly(std::string_view text) { return Parser<TPoly>(text, by_name<TPoly>).parse(); }

TuttePoly parse_tutte(std::string_view text) { return Parser<TuttePoly>(text, by_name<TuttePoly>).parse(); }

}  // namespace wsc
