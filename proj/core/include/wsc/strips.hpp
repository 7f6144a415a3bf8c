#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsc/poly.hpp"

namespace wsc {

// c^(d)(x) = sum_{j=0}^{d} (-1)^j C(2d-j, j) x^(d-j). With x = q - s this is
// the strip coefficient c~^(d).
MultiPoly c_tilde(std::size_t d, const MultiPoly& argument);

enum class StripRole { Zh, Ph };

std::string_view to_string(StripRole role);

enum class StripRecurrence {
  // n(L+1,d) = n(L,d-1) + k n(L,d) + n(L,d+1); reproduces the tabulated counts.
  Corrected,
  // n(L+1,d) = n(L+1,d-1) + k n(L,d) + n(L,d+1), the form as usually quoted.
  Quoted,
};

// Multiplicities n_Zh(L_y,d,s) and n_Ph(L_y,d,s) as polynomials in s, for
// d = 0..L_y, with their totals.
struct StripCountTable {
  std::size_t ly = 0;
  std::vector<MultiPoly> zh;
  std::vector<MultiPoly> ph;
  MultiPoly total_zh;
  MultiPoly total_ph;

  // Zero for d > L_y.
  MultiPoly count(StripRole role, std::size_t d) const;
  const MultiPoly& total(StripRole role) const { return role == StripRole::Zh ? total_zh : total_ph; }
};

// Tables for L_y = 0..ly_max, indexed by L_y. The L_y = 0 entry holds only the
// Zh seed n_Zh(0,0,s) = 1; its Ph side is empty.
std::vector<StripCountTable> build_counts(std::size_t ly_max, StripRecurrence form = StripRecurrence::Corrected);

struct StripCheck {
  std::string name;
  std::size_t ly = 0;
  bool holds = false;
  MultiPoly residual;
};

// sum_d c~^(d) n_Zh(L_y,d,s) = q^L_y and sum_d c~^(d) n_Ph(L_y,d,s) = q(q-1)^(L_y-1).
std::vector<StripCheck> verify_sum_identities(const std::vector<StripCountTable>& tables, std::size_t ly);

// n_Ph(L,d,s) = n_Zh(L,d,s-1) + n_Zh(L-1,d,s-1), the binomial total formulas,
// the tabulated totals for L_y <= 6, and the d = L_y, L_y - 1 counts.
std::vector<StripCheck> verify_relation_and_totals(const std::vector<StripCountTable>& tables, std::size_t ly);

// sum_j C(L,j) C(2j,j) s^(L-j)
MultiPoly total_zh_closed_form(std::size_t ly);
// The Zh closed form at s-1 for L and L-1, added.
MultiPoly total_ph_closed_form(std::size_t ly);
// Reference totals for 1 <= L_y <= 6.
std::optional<MultiPoly> tabulated_total(StripRole role, std::size_t ly);

// N(L+1)/N(L) at integer s for L = 1..ly_max-1.
std::vector<double> growth_rate(StripRole role, long s, std::size_t ly_max);

// Throws IdentityFailed naming the first failing check.
void require_all(const std::vector<StripCheck>& checks);

}  // namespace wsc
