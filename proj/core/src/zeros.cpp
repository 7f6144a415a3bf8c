#include "wsc/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wsc/error.hpp"

namespace wsc {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<unsigned long>(k));
  trim(out);
  return out;
}

QPoly subtract(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

QPoly monic(QPoly p) {
  if (p.empty()) return p;
  const mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

// quotient and remainder, b nonzero
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  QPoly quot(a.size() - b.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const mpq_class c = a[i + b.size() - 1] / b.back();
    quot[i] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[i + k] -= c * b[k];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(quot);
  return {quot, a};
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

QPoly quotient(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

// Yun: p = prod_i a_i^i with the a_i squarefree and coprime.
std::vector<std::pair<QPoly, std::size_t>> squarefree_parts(const QPoly& p) {
  std::vector<std::pair<QPoly, std::size_t>> out;
  const QPoly dp = derivative(p);
  const QPoly a0 = gcd(p, dp);
  QPoly b = quotient(p, a0);
  QPoly c = quotient(dp, a0);
  QPoly d = subtract(c, derivative(b));
  for (std::size_t i = 1; b.size() > 1; ++i) {
    QPoly a = d.empty() ? monic(b) : gcd(b, d);
    b = quotient(b, a);
    c = quotient(d, a);
    d = subtract(c, derivative(b));
    if (a.size() > 1) out.emplace_back(std::move(a), i);
  }
  return out;
}

struct Horner {
  Complex value, slope;
  double scale;
};

Horner horner(const std::vector<Complex>& a, Complex z) {
  Complex p = 0, dp = 0;
  double scale = 0;
  const double r = std::abs(z);
  for (std::size_t k = a.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    scale = scale * r + std::abs(a[k]);
  }
  return {p, dp, scale};
}

std::vector<Complex> to_complex(const QPoly& p) {
  std::vector<Complex> out;
  for (const auto& c : p) out.emplace_back(c.get_d(), 0.0);
  return out;
}

mpq_class pow_q(const mpq_class& x, std::uint32_t k) {
  mpq_class out = 1;
  for (std::uint32_t i = 0; i < k; ++i) out *= x;
  return out;
}

double real_of(const Bindings& fixed, Var var) {
  auto it = fixed.find(var);
  if (it == fixed.end())
    throw Error(ErrorCode::PreconditionUnmet, "missing binding for " + std::string(QSVW::names[index(var)]));
  return it->second.get_d();
}

[[noreturn]] void degenerate(const std::string& why) { throw Error(ErrorCode::DegenerateDenominator, why); }

}  // namespace

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  auto fail = [&]() -> mpq_class { throw Error(ErrorCode::Parse, "not a number: '" + std::string(text) + "'"); };
  if (s.empty()) return fail();
  if (s.find('/') != std::string::npos) {
    mpq_class out;
    if (out.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0 || out.get_den() == 0) return fail();
    out.canonicalize();
    return out;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
    if (s[pos] == '.') {
      if (seen_dot) return fail();
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos];
      seen_digit = true;
      if (seen_dot) --exponent;
    } else {
      return fail();
    }
  }
  if (!seen_digit) return fail();
  if (pos < s.size()) {
    const std::string e = s.substr(pos + 1);
    try {
      std::size_t used = 0;
      exponent += std::stol(e, &used);
      if (used != e.size()) return fail();
    } catch (const std::logic_error&) {
      return fail();
    }
  }
  mpq_class out{mpz_class(digits)};
  mpz_class ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0)
    out *= ten;
  else
    out /= ten;
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

std::optional<Var> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < QSVW::names.size(); ++i)
    if (QSVW::names[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

Bindings parse_bindings(std::string_view text) {
  Bindings out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, end - start);
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw Error(ErrorCode::Parse, "expected name=value in '" + std::string(item) + "'");
      const auto var = parse_var(item.substr(0, eq));
      if (!var) throw Error(ErrorCode::Parse, "unknown variable '" + std::string(item.substr(0, eq)) + "'");
      out[*var] = parse_rational(item.substr(eq + 1));
    }
    start = end + 1;
  }
  return out;
}

std::vector<Complex> aberth_roots(const std::vector<Complex>& ascending, const ZeroOptions& options) {
  std::vector<Complex> a = ascending;
  while (!a.empty() && a.back() == Complex(0)) a.pop_back();
  if (a.empty()) throw Error(ErrorCode::ZeroPolynomial, "cannot find roots of the zero polynomial");
  const std::size_t n = a.size() - 1;
  if (n == 0) return {};
  if (n == 1) return {-a[0] / a[1]};

  // start on a circle whose radius is the geometric mean of the root moduli
  std::size_t low = 0;
  while (a[low] == Complex(0)) ++low;
  const double radius =
      low == n ? 1.0 : std::pow(std::abs(a[low]) / std::abs(a[n]), 1.0 / static_cast<double>(n - low));
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

  std::vector<bool> done(n, false);
  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto h = horner(a, z[i]);
      if (std::abs(h.value) <= options.tolerance * h.scale * 1e-2) {
        done[i] = true;
        continue;
      }
      all = false;
      const Complex ratio = h.value / h.slope;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[i] -= step;
      if (std::abs(step) <= 1e-3 * options.tolerance * std::max(1.0, std::abs(z[i]))) done[i] = true;
    }
    if (all) break;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto h = horner(a, z[i]);
    if (!(std::abs(h.value) <= options.tolerance * h.scale))
      throw Error(ErrorCode::NoConvergence, "root iteration did not converge within " +
                                                std::to_string(options.max_iterations) + " iterations");
  }
  return z;
}

std::vector<Complex> polynomial_roots(std::vector<mpq_class> ascending, const ZeroOptions& options) {
  trim(ascending);
  if (ascending.empty()) throw Error(ErrorCode::ZeroPolynomial, "cannot find roots of the zero polynomial");
  std::vector<Complex> out;
  std::size_t zeros_at_origin = 0;
  while (ascending[zeros_at_origin] == 0) ++zeros_at_origin;
  out.assign(zeros_at_origin, Complex(0));
  ascending.erase(ascending.begin(), ascending.begin() + static_cast<std::ptrdiff_t>(zeros_at_origin));
  if (ascending.size() <= 1) return out;

  for (const auto& [factor, multiplicity] : squarefree_parts(monic(ascending))) {
    const auto coeffs = to_complex(factor);
    auto roots = aberth_roots(coeffs, options);
    for (auto& z : roots) {
      for (int k = 0; k < 3; ++k) {
        const auto h = horner(coeffs, z);
        if (h.slope == Complex(0) || h.value == Complex(0)) break;
        const Complex next = z - h.value / h.slope;
        if (std::abs(horner(coeffs, next).value) >= std::abs(h.value)) break;
        z = next;
      }
      out.insert(out.end(), multiplicity, z);
    }
  }
  return out;
}

bool ZeroSlice::residuals_ok() const {
  for (std::size_t i = 0; i < residuals.size(); ++i)
    if (!(residuals[i] <= tolerance * scales[i])) return false;
  return true;
}

std::vector<mpq_class> univariate_coefficients(const MultiPoly& p, Var variable, const Bindings& fixed) {
  const std::size_t iv = index(variable);
  QPoly out(p.degree(iv) + 1);
  for (const auto& [e, c] : p.terms()) {
    mpq_class term{c};
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == iv || e[i] == 0) continue;
      auto it = fixed.find(static_cast<Var>(i));
      if (it == fixed.end())
        throw Error(ErrorCode::PreconditionUnmet,
                    "variable " + std::string(QSVW::names[i]) + " occurs in the polynomial but is not fixed");
      term *= pow_q(it->second, e[i]);
    }
    out[e[iv]] += term;
  }
  return out;
}

ZeroSlice zeros(const MultiPoly& p, Var variable, const Bindings& fixed, const ZeroOptions& options) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial is identically zero");
  ZeroSlice slice;
  slice.variable = variable;
  slice.fixed = fixed;
  slice.fixed.erase(variable);
  slice.tolerance = options.tolerance;
  slice.generic_degree = p.degree(index(variable));
  QPoly coeffs = univariate_coefficients(p, variable, slice.fixed);
  trim(coeffs);
  if (coeffs.empty()) throw Error(ErrorCode::ZeroPolynomial, "specialization is identically zero");
  slice.degree = coeffs.size() - 1;
  slice.leading_coeff_magnitude = std::abs(coeffs.back().get_d());
  slice.roots = polynomial_roots(coeffs, options);
  const auto numeric = to_complex(coeffs);
  for (const auto& z : slice.roots) {
    const auto h = horner(numeric, z);
    slice.residuals.push_back(std::abs(h.value));
    slice.scales.push_back(h.scale);
  }
  return slice;
}

Complex l1_zero_formula(Var variable, const Bindings& fixed) {
  switch (variable) {
    case Var::q: return real_of(fixed, Var::s) * (1 - real_of(fixed, Var::w));
    case Var::s: {
      const double w = real_of(fixed, Var::w);
      if (w == 1) degenerate("s-zero of Z(L_1) needs w != 1");
      return real_of(fixed, Var::q) / (1 - w);
    }
    case Var::w: {
      const double s = real_of(fixed, Var::s);
      if (s == 0) degenerate("w-zero of Z(L_1) needs s != 0");
      return 1 - real_of(fixed, Var::q) / s;
    }
    case Var::v: break;
  }
  throw Error(ErrorCode::PreconditionUnmet, "Z(L_1) does not depend on v");
}

L2ZeroFormula l2_zero_formulas(Var variable, const Bindings& fixed, double window) {
  L2ZeroFormula out;
  out.variable = variable;
  const auto get = [&](Var var) { return Complex(real_of(fixed, var), 0.0); };
  switch (variable) {
    case Var::q: {
      const Complex s = get(Var::s), v = get(Var::v), w = get(Var::w);
      const Complex root = std::sqrt(v * (v - 4.0 * s * w * (w - 1.0)));
      const Complex base = -v + 2.0 * s * (1.0 - w);
      out.roots = {(base + root) / 2.0, (base - root) / 2.0};
      break;
    }
    case Var::s: {
      const Complex q = get(Var::q), v = get(Var::v), w = get(Var::w);
      if (w == 1.0) degenerate("s-zeros of Z(L_2) need w != 1");
      const Complex root = std::sqrt(v * (v * (w + 1.0) * (w + 1.0) + 4.0 * q * w));
      const Complex base = -(2.0 * q + v * (w + 1.0));
      out.roots = {(base + root) / (2.0 * (w - 1.0)), (base - root) / (2.0 * (w - 1.0))};
      if (std::abs(w - 1.0) < window) {
        out.regime = "w->1";
        const Complex r = std::sqrt(v * (q + v));
        out.asymptotic = {(-(q + v) + r) / (w - 1.0), (-(q + v) - r) / (w - 1.0)};
      }
      break;
    }
    case Var::w: {
      const Complex q = get(Var::q), s = get(Var::s), v = get(Var::v);
      if (s == 0.0 || s + v == 0.0) degenerate("w-zeros of Z(L_2) need s != 0 and s != -v");
      const Complex root = std::sqrt(s * (s - q) * v * (q + v));
      const Complex base = s * (s - q);
      out.roots = {(base + root) / (s * (s + v)), (base - root) / (s * (s + v))};
      if (std::abs(s) < window && v != 0.0) {
        out.regime = "s->0";
        const Complex r = std::sqrt(-q * (q + v) / (s * v));
        out.asymptotic = {r, -r};
      } else if (std::abs(s + v) < window) {
        out.regime = "s->-v";
        out.asymptotic = {-2.0 * (q + v) / (s + v), (q + 2.0 * v) / (2.0 * v)};
      }
      break;
    }
    case Var::v: {
      const Complex q = get(Var::q), s = get(Var::s), w = get(Var::w);
      const Complex den = q + s * (w - 1.0) * (w + 1.0);
      if (den == 0.0) degenerate("v-zero of Z(L_2) needs q + s(w^2 - 1) != 0");
      const Complex num = q + s * (w - 1.0);
      out.roots = {-num * num / den};
      break;
    }
  }
  return out;
}

double l2_v_divergence_s(double q, double w) { return q / (1 - w * w); }

std::vector<double> l2_s_root_divergence_limits(double q, double v) {
  const Complex r = std::sqrt(Complex(v * (q + v), 0.0));
  return {std::abs(-(q + v) + r), std::abs(-(q + v) - r)};
}

double l2_w_root_divergence_limit(double q, double v) { return std::sqrt(std::abs(q * (q + v) / v)); }

bool same_multiset(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    std::size_t best = b.size();
    double best_dist = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (best == b.size() || d < best_dist) {
        best = j;
        best_dist = d;
      }
    }
    if (best_dist > tol * std::max(1.0, std::abs(b[best]))) return false;
    used[best] = true;
  }
  return true;
}

}  // namespace wsc
