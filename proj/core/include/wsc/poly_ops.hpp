#pragma once

#include <array>
#include <complex>
#include <optional>
#include <variant>

#include "wsc/error.hpp"
#include "wsc/poly.hpp"

namespace wsc {

// A partial assignment of q, s, v, w to polynomials or rational constants.
class Substitution {
 public:
  using Value = std::variant<MultiPoly, mpq_class>;

  Substitution& bind(Var var, MultiPoly value) {
    slots_[index(var)] = Value(std::move(value));
    return *this;
  }
  Substitution& bind(Var var, const mpq_class& value) {
    slots_[index(var)] = Value(value);
    return *this;
  }
  Substitution& bind(Var var, long value) { return bind(var, MultiPoly(value)); }

  const std::optional<Value>& slot(std::size_t i) const { return slots_[i]; }
  bool empty() const {
    for (const auto& s : slots_)
      if (s) return false;
    return true;
  }

 private:
  std::array<std::optional<Value>, 4> slots_;
};

RatPoly to_rational(const MultiPoly& p);

// Fails with NonIntegerResult if any coefficient is not an integer.
MultiPoly to_integer(const RatPoly& p);

RatPoly substitute_rational(const MultiPoly& p, const Substitution& sub);

// Exact substitution. Rational constants are allowed as long as the result
// has integer coefficients; otherwise NonIntegerResult.
MultiPoly substitute(const MultiPoly& p, const Substitution& sub);

// Shorthand for binding a single variable to an integer.
MultiPoly specialize(const MultiPoly& p, Var var, long value);

// Rewrites p in the (q, t, v, w) basis by eliminating s = t/(w-1).
// NotExpressible when p is not a polynomial in t.
TPoly rebase_t(const MultiPoly& p);

// Inverse of rebase_t: t -> s(w-1).
MultiPoly from_t_basis(const TPoly& p);

using Point = std::array<std::complex<double>, 4>;
using ExactPoint = std::array<mpq_class, 4>;

std::complex<double> eval(const MultiPoly& p, const Point& at);
mpq_class eval_exact(const MultiPoly& p, const ExactPoint& at);

// Exact quotient p / f, or nullopt if f does not divide p in Z[q,s,v,w].
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& f);

inline bool divides(const MultiPoly& f, const MultiPoly& p) { return divide_exact(p, f).has_value(); }

// gcd of the integer coefficients (0 for the zero polynomial).
mpz_class content(const MultiPoly& p);

// p(q, s, v, w) -> p(q, q - s, v, w): the s <-> q-s reflection.
MultiPoly reflect_s(const MultiPoly& p);

// Numerator/denominator pair. Only the common integer content is removed.
class RationalExpr {
 public:
  RationalExpr(MultiPoly numerator, MultiPoly denominator);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }

  // Equality as rational functions (cross multiplication).
  bool equivalent(const RationalExpr& other) const {
    return num_ * other.den_ == other.num_ * den_;
  }

 private:
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace wsc
