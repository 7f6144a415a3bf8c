#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <string_view>

#include "wsc/error.hpp"
#include "wsc/poly.hpp"

namespace wsc {

enum class Format { Json, Latex, Text };

Format parse_format(std::string_view name);

namespace detail {

template <class Vars>
std::string monomial_text(const std::array<std::uint32_t, Vars::arity>& e, std::string_view mul, bool latex) {
  std::string out;
  for (std::size_t i = 0; i < Vars::arity; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += mul;
    out += Vars::names[i];
    if (e[i] > 1) {
      out += latex ? "^{" : "^";
      out += std::to_string(e[i]);
      if (latex) out += "}";
    }
  }
  return out;
}

template <class Vars>
std::string render(const Polynomial<Vars, mpz_class>& p, std::string_view mul, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.sorted_terms()) {
    const std::string mono = monomial_text<Vars>(e, mul, latex);
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) {
        out += mag.get_str();
        out += mul;
      }
      out += mono;
    }
  }
  return out;
}

}  // namespace detail

// Plain text, e.g. "q^2 + 2*q*s - w". Round-trips through parse_poly.
template <class Vars>
std::string to_text(const Polynomial<Vars, mpz_class>& p) {
  return detail::render(p, "*", false);
}

template <class Vars>
std::ostream& operator<<(std::ostream& os, const Polynomial<Vars, mpz_class>& p) {
  return os << to_text(p);
}

template <class Vars>
std::string to_latex(const Polynomial<Vars, mpz_class>& p) {
  return detail::render(p, " ", true);
}

// {"terms":[{"e":[...], "c":"<decimal>"}]}, terms in graded-lex order.
template <class Vars>
nlohmann::ordered_json to_json(const Polynomial<Vars, mpz_class>& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.sorted_terms()) {
    nlohmann::ordered_json term;
    term["e"] = e;
    term["c"] = c.get_str();
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json out;
  out["terms"] = std::move(terms);
  return out;
}

template <class Vars>
Polynomial<Vars, mpz_class> poly_from_json(const nlohmann::json& j) {
  Polynomial<Vars, mpz_class> p;
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw Error(ErrorCode::Parse, "polynomial JSON needs a \"terms\" array");
  for (const auto& term : j["terms"]) {
    const auto& e = term.at("e");
    if (!e.is_array() || e.size() != Vars::arity)
      throw Error(ErrorCode::Parse, "exponent vector must have " + std::to_string(Vars::arity) + " entries");
    typename Polynomial<Vars, mpz_class>::Exponents ex{};
    for (std::size_t i = 0; i < Vars::arity; ++i) {
      const auto x = e[i].get<long long>();
      if (x < 0) throw Error(ErrorCode::Parse, "negative exponent");
      ex[i] = static_cast<std::uint32_t>(x);
    }
    mpz_class c;
    if (c.set_str(term.at("c").get<std::string>(), 10) != 0)
      throw Error(ErrorCode::Parse, "bad coefficient string");
    p.add_term(ex, c);
  }
  return p;
}

// Parses expressions such as "s(s+v)w^2 + 2s(q-s)w + (q-s)(q-s+v)".
// Juxtaposition multiplies. In parse_poly the letter t stands for s(w-1).
MultiPoly parse_poly(std::string_view text);
TPoly parse_tpoly(std::string_view text);
TuttePoly parse_tutte(std::string_view text);

}  // namespace wsc
