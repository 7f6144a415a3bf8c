#include "wsc/poly_ops.hpp"

#include <map>
#include <vector>

namespace wsc {

RatPoly to_rational(const MultiPoly& p) {
  RatPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, mpq_class(c));
  return out;
}

MultiPoly to_integer(const RatPoly& p) {
  MultiPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) throw Error(ErrorCode::NonIntegerResult, "coefficient " + c.get_str() + " is not an integer");
    out.add_term(e, c.get_num());
  }
  return out;
}

RatPoly substitute_rational(const MultiPoly& p, const Substitution& sub) {
  if (sub.empty()) return to_rational(p);

  // Constant bindings fold into the coefficient; polynomial bindings are
  // grouped by their exponent pattern so each power is expanded once.
  std::array<bool, 4> poly_bound{};
  std::array<std::optional<mpq_class>, 4> constant{};
  std::array<RatPoly, 4> target;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& slot = sub.slot(i);
    if (!slot) continue;
    if (const auto* c = std::get_if<mpq_class>(&*slot)) {
      constant[i] = *c;
    } else {
      poly_bound[i] = true;
      target[i] = to_rational(std::get<MultiPoly>(*slot));
    }
  }

  using Key = std::array<std::uint32_t, 4>;
  std::map<Key, RatPoly> groups;
  for (const auto& [e, c] : p.terms()) {
    mpq_class coeff(c);
    RatPoly::Exponents rest{};
    Key key{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (constant[i]) {
        mpq_class f = 1;
        for (std::uint32_t k = 0; k < e[i]; ++k) f *= *constant[i];
        coeff *= f;
      } else if (poly_bound[i]) {
        key[i] = e[i];
      } else {
        rest[i] = e[i];
      }
    }
    groups[key].add_term(rest, coeff);
  }

  std::array<std::vector<RatPoly>, 4> powers;
  auto power_of = [&](std::size_t var, std::uint32_t k) -> const RatPoly& {
    auto& table = powers[var];
    if (table.empty()) table.push_back(RatPoly(mpq_class(1)));
    while (table.size() <= k) table.push_back(table.back() * target[var]);
    return table[k];
  };

  RatPoly out;
  for (auto& [key, partial] : groups) {
    RatPoly term = partial;
    for (std::size_t i = 0; i < 4; ++i)
      if (poly_bound[i] && key[i] > 0) term = term * power_of(i, key[i]);
    out += term;
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p, const Substitution& sub) {
  if (sub.empty()) return p;
  return to_integer(substitute_rational(p, sub));
}

MultiPoly specialize(const MultiPoly& p, Var var, long value) {
  return substitute(p, Substitution().bind(var, mpq_class(value)));
}

namespace {

// Synthetic division of an integer polynomial (ascending coefficients) by (w - 1).
bool divide_by_w_minus_1(std::vector<mpz_class>& coeffs) {
  if (coeffs.empty()) return true;
  const std::size_t n = coeffs.size();
  std::vector<mpz_class> quotient(n - 1);
  mpz_class carry = 0;
  for (std::size_t i = n; i-- > 1;) {
    carry += coeffs[i];
    quotient[i - 1] = carry;
  }
  carry += coeffs[0];
  if (carry != 0) return false;
  coeffs = std::move(quotient);
  return true;
}

}  // namespace

TPoly rebase_t(const MultiPoly& p) {
  // Group by (q, s, v) exponents; the s-exponent b requires (w-1)^b | P(w).
  std::map<std::array<std::uint32_t, 3>, std::vector<mpz_class>> blocks;
  for (const auto& [e, c] : p.terms()) {
    auto& coeffs = blocks[{e[0], e[1], e[2]}];
    if (coeffs.size() <= e[3]) coeffs.resize(e[3] + 1);
    coeffs[e[3]] = c;
  }
  TPoly out;
  for (auto& [key, coeffs] : blocks) {
    for (std::uint32_t k = 0; k < key[1]; ++k) {
      if (!divide_by_w_minus_1(coeffs)) {
        throw Error(ErrorCode::NotExpressible, "s-power " + std::to_string(key[1]) + " block is not divisible by (w-1)^" +
                                                   std::to_string(key[1]));
      }
    }
    for (std::size_t d = 0; d < coeffs.size(); ++d)
      out.add_term({key[0], key[1], key[2], static_cast<std::uint32_t>(d)}, coeffs[d]);
  }
  return out;
}

MultiPoly from_t_basis(const TPoly& p) {
  MultiPoly out;
  const MultiPoly t = vars::t();
  std::vector<MultiPoly> tpow{MultiPoly(1)};
  for (const auto& [e, c] : p.terms()) {
    while (tpow.size() <= e[1]) tpow.push_back(tpow.back() * t);
    out += tpow[e[1]].shifted({e[0], 0, e[2], e[3]}).scaled(c);
  }
  return out;
}

std::complex<double> eval(const MultiPoly& p, const Point& at) {
  std::array<std::vector<std::complex<double>>, 4> pw;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto d = p.degree(i);
    pw[i].resize(d + 1);
    pw[i][0] = 1.0;
    for (std::uint32_t k = 1; k <= d; ++k) pw[i][k] = pw[i][k - 1] * at[i];
  }
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> term = c.get_d();
    for (std::size_t i = 0; i < 4; ++i) term *= pw[i][e[i]];
    sum += term;
  }
  return sum;
}

mpq_class eval_exact(const MultiPoly& p, const ExactPoint& at) {
  std::array<std::vector<mpq_class>, 4> pw;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto d = p.degree(i);
    pw[i].resize(d + 1);
    pw[i][0] = 1;
    for (std::uint32_t k = 1; k <= d; ++k) pw[i][k] = pw[i][k - 1] * at[i];
  }
  mpq_class sum = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class term(c);
    for (std::size_t i = 0; i < 4; ++i) term *= pw[i][e[i]];
    sum += term;
  }
  return sum;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::DegenerateDenominator, "division by the zero polynomial");
  MultiPoly remainder = p;
  MultiPoly quotient;
  const auto& [lead_e, lead_c] = *f.terms().rbegin();
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms().rbegin();
    MultiPoly::Exponents diff;
    for (std::size_t i = 0; i < 4; ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      diff[i] = re[i] - lead_e[i];
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    const mpz_class k = rc / lead_c;
    quotient.add_term(diff, k);
    remainder -= f.shifted(diff).scaled(k);
  }
  return quotient;
}

mpz_class content(const MultiPoly& p) {
  mpz_class g = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MultiPoly reflect_s(const MultiPoly& p) {
  return substitute(p, Substitution().bind(Var::s, vars::q() - vars::s()));
}

RationalExpr::RationalExpr(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorCode::DegenerateDenominator, "rational expression with zero denominator");
  mpz_class g = content(den_);
  const mpz_class gn = content(num_);
  if (gn != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gn.get_mpz_t());
  if (den_.terms().rbegin()->second < 0) g = -g;
  if (g != 1) {
    MultiPoly n, d;
    for (const auto& [e, c] : num_.terms()) n.add_term(e, c / g);
    for (const auto& [e, c] : den_.terms()) d.add_term(e, c / g);
    num_ = std::move(n);
    den_ = std::move(d);
  }
}

}  // namespace wsc
