#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsc/poly.hpp"

namespace wsc {

using Complex = std::complex<double>;
using Bindings = std::map<Var, mpq_class>;

// "3", "-1/4", "0.2", "1e-3", "2.5e2" parsed exactly.
mpq_class parse_rational(std::string_view text);

// "s=1,w=0.5" into bindings.
Bindings parse_bindings(std::string_view text);

std::optional<Var> parse_var(std::string_view name);

struct ZeroOptions {
  double tolerance = 1e-12;
  std::size_t max_iterations = 200;
};

// Roots of a univariate polynomial with exact rational coefficients (ascending
// order). Repeated factors are split off exactly first, so multiple roots come
// out to full precision with their multiplicity. Trailing zero coefficients
// are ignored; the zero polynomial raises ZeroPolynomial.
std::vector<Complex> polynomial_roots(std::vector<mpq_class> ascending, const ZeroOptions& options = {});

// Simultaneous (Aberth) iteration on floating coefficients, no deflation.
std::vector<Complex> aberth_roots(const std::vector<Complex>& ascending, const ZeroOptions& options = {});

struct ZeroSlice {
  Var variable = Var::q;
  Bindings fixed;
  std::vector<Complex> roots;
  // |p(root)| and sum_k |a_k| |root|^k for each root.
  std::vector<double> residuals;
  std::vector<double> scales;
  double leading_coeff_magnitude = 0;
  std::size_t generic_degree = 0;
  std::size_t degree = 0;
  double tolerance = 1e-12;

  // Roots lost to a vanishing leading coefficient.
  std::size_t roots_at_infinity() const { return generic_degree - degree; }
  bool residuals_ok() const;
};

// Zeros of p in `variable` with every other variable of p bound in `fixed`.
ZeroSlice zeros(const MultiPoly& p, Var variable, const Bindings& fixed, const ZeroOptions& options = {});

// Exact univariate coefficients of p in `variable` after binding the rest.
std::vector<mpq_class> univariate_coefficients(const MultiPoly& p, Var variable, const Bindings& fixed);

// Closed-form zeros of Z(L_2) = (q - s + sw)^2 + v(q - s + sw^2) in one
// variable, the others taken from `fixed`.
struct L2ZeroFormula {
  Var variable = Var::q;
  // In the order of the +/- branch.
  std::vector<Complex> roots;
  // Set when the fixed point is within `window` of a divergence:
  // "w->1" for s-roots, "s->0" or "s->-v" for w-roots.
  std::optional<std::string> regime;
  // Leading asymptotic forms for that regime: the +/- pair for "w->1" and
  // "s->0"; for "s->-v" the divergent root first, then the finite limit.
  std::vector<Complex> asymptotic;
};

L2ZeroFormula l2_zero_formulas(Var variable, const Bindings& fixed, double window = 1e-3);

// Z(L_1) = q - s + sw: the single zero in q, s or w.
Complex l1_zero_formula(Var variable, const Bindings& fixed);

// The s at which the v-zero of Z(L_2) diverges: q / (1 - w^2).
double l2_v_divergence_s(double q, double w);

// Finite limits of |s-root| |w-1| as w -> 1 and |w-root| sqrt(s) as s -> 0.
std::vector<double> l2_s_root_divergence_limits(double q, double v);
double l2_w_root_divergence_limit(double q, double v);

// Each of `a` matched to a distinct element of `b` within
// tol * max(1, |b|); the two must have equal size.
bool same_multiset(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol);

}  // namespace wsc
