#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsc/zeros.hpp"

namespace wsc {

// Roots of x^2 - e1 x + e2 for the circuit, e1 = q-s+v+w(s+v), e2 = vw(q+v),
// principal square root; first is the + branch.
std::pair<Complex, Complex> circuit_lambdas(Complex q, Complex s, Complex v, Complex w);
// The same at v = -1.
std::pair<Complex, Complex> circuit_lambdas_ph(Complex q, Complex s, Complex w);

enum class PhiRegion { R1, R2, Boundary };

std::string_view to_string(PhiRegion region);

struct PhiCandidate {
  std::string name;
  Complex value;
  double modulus = 0;
  // False when the term's coefficient vanishes at this (q, s).
  bool present = true;
};

struct PhiReport {
  double q = 0, s = 0, w = 0;
  // lambda_1, lambda_2, -w (coefficient s-1), -1 (coefficient q-s-1)
  std::vector<PhiCandidate> candidates;
  std::size_t dominant = 0;
  double phi = 0;
  PhiRegion region = PhiRegion::R1;
  // ln w + ln(s-1)/2 for w > 1, integer 2 <= s <= q, q >= 2.
  std::optional<double> entropy_bound_large_w;
  // ln(q-s-1)/2 for 0 <= w < 1, integer 1 <= s <= q-3.
  std::optional<double> entropy_bound_small_w;
};

// Phi of the infinite circuit (equal to that of the infinite line in R1),
// with s fixed before the limit.
PhiReport phi_circuit(double q, double s, double w);

enum class QcKind { ClosedCurve, Arc, Unspecified };

std::string_view to_string(QcKind kind);

struct QcReport {
  long s = 0;
  double w = 0;
  double qc = 0;
  QcKind kind = QcKind::ClosedCurve;
  std::optional<std::pair<Complex, Complex>> arc_endpoints;
  // Numeric equimodularity scan along the real q axis.
  double scan_qc = 0;
  // Empty when a closed form applies; otherwise the clause that failed.
  std::string note;
};

// Right-hand crossing of the real axis by the Phi(C) phase boundary in q,
// for 0 <= w <= 1.
QcReport qc_circuit(long s, double w);

// Largest real q below which lambda_1 stops being the unique dominant term.
double qc_scan(long s, double w);

// Zeros in q of the discriminant of the two circuit eigenvalues at v = -1,
// where they coalesce; found by the root finder, upper half plane first.
std::pair<Complex, Complex> lambda_coalescence(long s, double w);

struct NoncommutativityReport {
  double q = 0, s = 0, v = 0, w = 0;
  std::vector<std::size_t> n;
  // |Z(C_n)|^(1/n) with s fixed first, and with the term that vanishes at
  // this s kept at unit weight as the generic-s expression would have it.
  std::vector<double> fixed_first;
  std::vector<double> limit_first;
  double limit_fixed_first = 0;
  double limit_limit_first = 0;
  // The term whose coefficient vanishes: "(s-1)(vw)^n", "(q-s-1)v^n" or "".
  std::string dropped_term;
  double dropped_modulus = 0;
  bool distinct = false;
};

// Compares the two orders of limits for Z(C_n) at a special s (s = 1 or
// s = q - 1).
NoncommutativityReport noncommutativity_demo(const std::vector<std::size_t>& n_list, double q, double s, double v,
                                             double w);

struct SeriesCheck {
  std::string name;
  // Residuals of Phi minus the truncated series at the small parameter and
  // at half of it.
  double residual = 0;
  double residual_half = 0;
  double predicted_ratio = 0;
  double observed_ratio = 0;
  bool within_tolerance = false;
};

// Truncation-order checks of the expansions of Phi(L) about w = 1, q = inf,
// s = 0, s = q and w = inf; a check passes when the residual shrink factor is
// within 25% of the predicted one.
std::vector<SeriesCheck> phi_series_checks(double q, double s, double w);

// Phi(L) - (s-1)w at large w against s(q-s)/(s-1), the sum of the two
// constant terms of the large-w expansion.
struct LargeWConstant {
  double observed = 0;
  double predicted = 0;
  bool matches = false;
};
LargeWConstant large_w_constant(double q, double s);

struct MonotonicityViolation {
  std::string property;
  double q = 0, s = 0, w = 0;
  double before = 0, after = 0;
};

// Sampled-grid observations for the infinite circuit: Phi increasing in q
// (w > 0) and in w (w > 0), increasing in s for w > 1 and decreasing in s for
// w < 1. Reports, does not assert.
std::vector<MonotonicityViolation> phi_monotonicity(const std::vector<double>& q_grid,
                                                    const std::vector<double>& w_grid);

}  // namespace wsc
