#pragma once

// Sparse multivariate polynomials with exact coefficients.
//
// Polynomial<Vars, Coeff> stores a canonical term map (no zero coefficients)
// from fixed-arity exponent vectors to coefficients. MultiPoly is the
// workhorse: integer coefficients over (q, s, v, w). The t = s(w-1) basis
// and the Tutte (x, y) pair are separate variable sets so that one canonical
// form exists per basis.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace wsc {

struct QSVW {
  static constexpr std::size_t arity = 4;
  static constexpr std::array<std::string_view, 4> names{"q", "s", "v", "w"};
};

struct QTVW {
  static constexpr std::size_t arity = 4;
  static constexpr std::array<std::string_view, 4> names{"q", "t", "v", "w"};
};

struct XY {
  static constexpr std::size_t arity = 2;
  static constexpr std::array<std::string_view, 2> names{"x", "y"};
};

enum class Var : std::size_t { q = 0, s = 1, v = 2, w = 3 };

constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

template <class Vars, class Coeff = mpz_class>
class Polynomial {
 public:
  using vars_type = Vars;
  using coeff_type = Coeff;
  static constexpr std::size_t arity = Vars::arity;
  using Exponents = std::array<std::uint32_t, arity>;
  using TermMap = std::map<Exponents, Coeff>;

  Polynomial() = default;
  Polynomial(long c) { add_term(Exponents{}, Coeff(c)); }  // NOLINT: implicit by design of ring literals
  explicit Polynomial(const Coeff& c) { add_term(Exponents{}, c); }

  static Polynomial constant(const Coeff& c) { return Polynomial(c); }

  static Polynomial variable(std::size_t var, std::uint32_t power = 1) {
    Exponents e{};
    e[var] = power;
    return monomial(e, Coeff(1));
  }

  static Polynomial monomial(const Exponents& e, const Coeff& c) {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
  }

  Coeff constant_term() const { return coefficient(Exponents{}); }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  // Adds c * x^e, dropping the entry when it cancels.
  void add_term(const Exponents& e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::uint32_t degree(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
      std::uint32_t t = 0;
      for (auto x : e) t += x;
      d = std::max(d, t);
    }
    return d;
  }

  // Coefficient of var^k, returned with var's exponent cleared.
  Polynomial coefficient_of(std::size_t var, std::uint32_t k) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      if (e[var] != k) continue;
      Exponents f = e;
      f[var] = 0;
      out.terms_.emplace(f, c);
    }
    return out;
  }

  // Terms in graded-lexicographic order, highest first. Used for display and
  // serialization so output is stable.
  std::vector<std::pair<Exponents, Coeff>> sorted_terms() const {
    std::vector<std::pair<Exponents, Coeff>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      std::uint32_t da = 0, db = 0;
      for (auto x : a.first) da += x;
      for (auto x : b.first) db += x;
      if (da != db) return da > db;
      return a.first > b.first;
    });
    return out;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < arity; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Polynomial scaled(const Coeff& k) const {
    Polynomial out;
    if (k == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
    return out;
  }

  // Multiplies by the monomial x^e.
  Polynomial shifted(const Exponents& by) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      Exponents f;
      for (std::size_t i = 0; i < arity; ++i) f[i] = e[i] + by[i];
      out.terms_.emplace(f, c);
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  TermMap terms_;
};

template <class Vars, class Coeff>
Polynomial<Vars, Coeff> pow(const Polynomial<Vars, Coeff>& base, unsigned exponent) {
  Polynomial<Vars, Coeff> result(Coeff(1));
  Polynomial<Vars, Coeff> b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

using MultiPoly = Polynomial<QSVW, mpz_class>;
using RatPoly = Polynomial<QSVW, mpq_class>;
using TPoly = Polynomial<QTVW, mpz_class>;
using TuttePoly = Polynomial<XY, mpz_class>;

// Variable shorthands for building expressions in code and tests.
namespace vars {
inline MultiPoly q() { return MultiPoly::variable(index(Var::q)); }
inline MultiPoly s() { return MultiPoly::variable(index(Var::s)); }
inline MultiPoly v() { return MultiPoly::variable(index(Var::v)); }
inline MultiPoly w() { return MultiPoly::variable(index(Var::w)); }
// t = s(w - 1)
inline MultiPoly t() { return s() * (w() - MultiPoly(1)); }
// q~ = q - s
inline MultiPoly qt() { return q() - s(); }
}  // namespace vars

}  // namespace wsc
