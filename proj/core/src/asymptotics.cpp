#include "wsc/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wsc/error.hpp"

namespace wsc {

namespace {

bool is_integer(double x) { return std::floor(x) == x; }

double lambda1_modulus(double q, double s, double w) { return std::abs(circuit_lambdas_ph(q, s, w).first); }

// |lambda_1| minus the largest competing modulus. The -1 term is always
// treated as present so the scan is continuous through q = s + 1.
double dominance_gap(double q, double s, double w) {
  const auto [l1, l2] = circuit_lambdas_ph(q, s, w);
  double rival = std::max(std::abs(l2), 1.0);
  if (s >= 2) rival = std::max(rival, w);
  return std::abs(l1) - rival;
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

SeriesCheck series_check(std::string name, double residual, double residual_half, double predicted) {
  SeriesCheck c;
  c.name = std::move(name);
  c.residual = residual;
  c.residual_half = residual_half;
  c.predicted_ratio = predicted;
  c.observed_ratio = std::abs(residual / residual_half);
  c.within_tolerance = std::abs(c.observed_ratio / predicted - 1) <= 0.25;
  return c;
}

}  // namespace

std::pair<Complex, Complex> circuit_lambdas(Complex q, Complex s, Complex v, Complex w) {
  const Complex e1 = q - s + v + w * (s + v);
  const Complex e2 = v * w * (q + v);
  const Complex root = std::sqrt(e1 * e1 - 4.0 * e2);
  return {(e1 + root) / 2.0, (e1 - root) / 2.0};
}

std::pair<Complex, Complex> circuit_lambdas_ph(Complex q, Complex s, Complex w) {
  return circuit_lambdas(q, s, -1.0, w);
}

std::string_view to_string(PhiRegion region) {
  switch (region) {
    case PhiRegion::R1: return "R1";
    case PhiRegion::R2: return "R2";
    case PhiRegion::Boundary: return "boundary";
  }
  return "?";
}

std::string_view to_string(QcKind kind) {
  switch (kind) {
    case QcKind::ClosedCurve: return "closed-curve";
    case QcKind::Arc: return "arc";
    case QcKind::Unspecified: return "unspecified";
  }
  return "?";
}

PhiReport phi_circuit(double q, double s, double w) {
  if (w < 0) throw Error(ErrorCode::PreconditionUnmet, "phi needs w >= 0");
  PhiReport r;
  r.q = q;
  r.s = s;
  r.w = w;
  const auto [l1, l2] = circuit_lambdas_ph(q, s, w);
  r.candidates = {{"lambda_1", l1, std::abs(l1), true},
                  {"lambda_2", l2, std::abs(l2), true},
                  {"-w", Complex(-w, 0), w, s != 1},
                  {"-1", Complex(-1, 0), 1.0, q - s - 1 != 0}};
  if (s == 0) {
    // one eigenvalue is -w and the (s-1)(-w)^n term cancels it
    const std::size_t cancelled = std::abs(l1 + w) < std::abs(l2 + w) ? 0 : 1;
    r.candidates[cancelled].present = false;
    r.candidates[2].present = false;
  }
  if (s == q) {
    // likewise -1 and the (q-s-1)(-1)^n term
    const std::size_t cancelled = std::abs(l1 + 1.0) < std::abs(l2 + 1.0) ? 0 : 1;
    r.candidates[cancelled].present = false;
    r.candidates[3].present = false;
  }
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    const auto& c = r.candidates[i];
    if (c.present && c.modulus > r.phi) {
      r.phi = c.modulus;
      r.dominant = i;
    }
  }
  bool tie = false;
  for (std::size_t i = 0; i < r.candidates.size(); ++i)
    if (i != r.dominant && r.candidates[i].present && relative_gap(r.candidates[i].modulus, r.phi) < 1e-12) tie = true;
  r.region = tie ? PhiRegion::Boundary : r.dominant == 0 ? PhiRegion::R1 : PhiRegion::R2;

  if (w > 1 && q >= 2 && is_integer(s) && s >= 2 && s <= q) r.entropy_bound_large_w = std::log(w) + 0.5 * std::log(s - 1);
  if (w >= 0 && w < 1 && is_integer(s) && s >= 1 && s <= q - 3) r.entropy_bound_small_w = 0.5 * std::log(q - s - 1);
  return r;
}

double qc_scan(long s, double w) {
  const double sd = static_cast<double>(s);
  double hi = sd + 12;
  while (dominance_gap(hi, sd, w) <= 0) {
    hi *= 2;
    if (hi > 1e6) return std::numeric_limits<double>::quiet_NaN();
  }
  constexpr double step = 1e-3;
  double lo = hi;
  while (dominance_gap(lo, sd, w) > 0) {
    hi = lo;
    lo -= step;
    if (lo < -1) return std::numeric_limits<double>::quiet_NaN();
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (dominance_gap(mid, sd, w) > 0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::pair<Complex, Complex> lambda_coalescence(long s, double w) {
  // (q - s - 1 + w(s-1))^2 + 4w(q-1) as a quadratic in q
  const mpq_class wq(w), sq(s);
  const mpq_class c = -sq - 1 + wq * (sq - 1);
  std::vector<mpq_class> coeffs{c * c - 4 * wq, 2 * c + 4 * wq, 1};
  auto roots = polynomial_roots(coeffs);
  if (roots.size() != 2) throw Error(ErrorCode::NoConvergence, "expected two coalescence points");
  if (roots[0].imag() < roots[1].imag()) std::swap(roots[0], roots[1]);
  return {roots[0], roots[1]};
}

QcReport qc_circuit(long s, double w) {
  if (w < 0 || w > 1) throw Error(ErrorCode::PreconditionUnmet, "q_c is defined here for 0 <= w <= 1");
  if (s < 0) throw Error(ErrorCode::PreconditionUnmet, "q_c needs s >= 0");
  QcReport r;
  r.s = s;
  r.w = w;
  r.scan_qc = qc_scan(s, w);
  const double sd = static_cast<double>(s);
  if (s <= 2) {
    r.kind = QcKind::ClosedCurve;
    r.qc = 2 + sd * (1 - w) / (1 + w);
    return r;
  }
  const double lower = 1.0 / (sd - 1);
  if (w > lower && w < 1) {
    r.kind = QcKind::Arc;
    r.qc = sd + 1 - w * (sd - 1);
    const double re = (sd + 1) * (1 - w);
    const double im = 2 * std::sqrt(sd * w * (1 - w));
    r.arc_endpoints = std::make_pair(Complex(re, im), Complex(re, -im));
    return r;
  }
  r.kind = QcKind::Unspecified;
  r.qc = r.scan_qc;
  if (w <= lower)
    r.note = "|lambda_1| = |lambda_2| > 1 fails: w <= 1/(s-1); value from numeric scan, unspecified by closed form";
  else
    r.note = "w = 1 is outside 1/(s-1) < w < 1; value from numeric scan, unspecified by closed form";
  return r;
}

NoncommutativityReport noncommutativity_demo(const std::vector<std::size_t>& n_list, double q, double s, double v,
                                             double w) {
  if (!std::is_sorted(n_list.begin(), n_list.end()) ||
      std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end())
    throw Error(ErrorCode::PreconditionUnmet, "n_list must be strictly increasing");
  NoncommutativityReport r;
  r.q = q;
  r.s = s;
  r.v = v;
  r.w = w;
  r.n = n_list;
  const auto [l1, l2] = circuit_lambdas(q, s, v, w);
  const Complex vw(v * w, 0), vv(v, 0);
  double a = s - 1, b = q - s - 1;
  double a_generic = a, b_generic = b;
  if (a == 0) {
    r.dropped_term = "(s-1)(vw)^n";
    r.dropped_modulus = std::abs(vw);
    a_generic = 1;
  } else if (b == 0) {
    r.dropped_term = "(q-s-1)v^n";
    r.dropped_modulus = std::abs(vv);
    b_generic = 1;
  }
  auto z = [&](std::size_t n, double ca, double cb) {
    const auto k = static_cast<int>(n);
    const Complex total = std::pow(l1, k) + std::pow(l2, k) + ca * std::pow(vw, k) + cb * std::pow(vv, k);
    return std::pow(std::abs(total), 1.0 / static_cast<double>(n));
  };
  for (auto n : n_list) {
    r.fixed_first.push_back(z(n, a, b));
    r.limit_first.push_back(z(n, a_generic, b_generic));
  }
  r.limit_fixed_first = std::max(std::abs(l1), std::abs(l2));
  if (a != 0) r.limit_fixed_first = std::max(r.limit_fixed_first, std::abs(vw));
  if (b != 0) r.limit_fixed_first = std::max(r.limit_fixed_first, std::abs(vv));
  r.limit_limit_first = std::max(r.limit_fixed_first, r.dropped_modulus);
  r.distinct = relative_gap(r.limit_limit_first, r.limit_fixed_first) > 1e-12;
  return r;
}

std::vector<SeriesCheck> phi_series_checks(double q, double s, double w) {
  std::vector<SeriesCheck> out;
  auto phi = [](double qq, double ss, double ww) { return lambda1_modulus(qq, ss, ww); };

  auto near_w1 = [&](double e) {
    return phi(q, s, 1 + e) - (q - 1 + s * (q - 1) * e / q - s * (q - 1) * (q - s) * e * e / (q * q * q));
  };
  out.push_back(series_check("w->1", near_w1(1e-2), near_w1(5e-3), 8));

  auto large_q = [&](double big) { return phi(big, s, w) - (big + s * (w - 1) - 1 - s * w * (w - 1) / big); };
  out.push_back(series_check("q->inf", large_q(200), large_q(400), 4));

  auto small_s = [&](double h) { return phi(q, h, w) - (q - 1 + (w - 1) * (q - 1) * h / (w + q - 1)); };
  out.push_back(series_check("s->0", small_s(1e-3), small_s(5e-4), 4));

  auto s_to_q = [&](double h) {
    return phi(q, q - h, w) - (w * (q - 1) - w * (w - 1) * (q - 1) * h / (w * (q - 1) + 1));
  };
  out.push_back(series_check("s->q", s_to_q(1e-3), s_to_q(5e-4), 4));

  // 1/sqrt(w) halves when w quadruples; the 1/sqrt(w) correction vanishes at q = 2
  auto s1_large_w = [&](double big) { return phi(q, 1, big) / std::sqrt((q - 1) * big) - 1; };
  out.push_back(series_check("w->inf (s=1)", s1_large_w(1e4), s1_large_w(4e4), q == 2 ? 4 : 2));

  if (s > 1) {
    auto gen_large_w = [&](double big) { return phi(q, s, big) / big - (s - 1); };
    out.push_back(series_check("w->inf (leading)", gen_large_w(1e4), gen_large_w(2e4), 2));
  }
  return out;
}

LargeWConstant large_w_constant(double q, double s) {
  if (s == 1) throw Error(ErrorCode::PreconditionUnmet, "the large-w constant needs s != 1");
  constexpr double big = 1e6;
  LargeWConstant c;
  c.observed = lambda1_modulus(q, s, big) - (s - 1) * big;
  c.predicted = (q - s - 1) / 2 + (s * (q - s) + q - 1) / (2 * (s - 1));
  c.matches = std::abs(c.observed - c.predicted) <= 1e-4 * std::max(1.0, std::abs(c.predicted));
  return c;
}

std::vector<MonotonicityViolation> phi_monotonicity(const std::vector<double>& q_grid,
                                                    const std::vector<double>& w_grid) {
  std::vector<MonotonicityViolation> out;
  auto value = [](double q, double s, double w) { return phi_circuit(q, s, w).phi; };
  auto check = [&](const char* property, double q, double s, double w, double before, double after, bool increasing) {
    const double slack = 1e-12 * std::max(1.0, std::abs(before));
    const bool ok = increasing ? after >= before - slack : after <= before + slack;
    if (!ok) out.push_back({property, q, s, w, before, after});
  };

  for (double w : w_grid) {
    if (w <= 0) continue;
    for (std::size_t i = 1; i < q_grid.size(); ++i) {
      const double q0 = q_grid[i - 1], q1 = q_grid[i];
      for (long s = 0; s <= static_cast<long>(std::floor(q0)); ++s)
        check("increasing in q", q1, static_cast<double>(s), w, value(q0, s, w), value(q1, s, w), true);
    }
  }
  for (double q : q_grid) {
    for (long s = 0; s <= static_cast<long>(std::floor(q)); ++s) {
      for (std::size_t i = 1; i < w_grid.size(); ++i) {
        const double w0 = w_grid[i - 1], w1 = w_grid[i];
        if (w0 <= 0) continue;
        check("increasing in w", q, static_cast<double>(s), w1, value(q, s, w0), value(q, s, w1), true);
      }
    }
    for (double w : w_grid) {
      if (w == 1) continue;
      for (long s = 1; s <= static_cast<long>(std::floor(q)); ++s)
        check(w > 1 ? "increasing in s" : "decreasing in s", q, static_cast<double>(s), w, value(q, s - 1, w),
              value(q, s, w), w > 1);
    }
  }
  return out;
}

}  // namespace wsc
