#pragma once

#include <vector>

#include "wsc/graph.hpp"
#include "wsc/poly.hpp"

namespace wsc {

// Power sums p_k = l1^k + l2^k of the two roots of x^2 - e1 x + e2,
// generated by p_k = e1 p_{k-1} - e2 p_{k-2} without ever forming l1, l2.
class PowerSumPair {
 public:
  PowerSumPair(MultiPoly e1, MultiPoly e2);

  const MultiPoly& e1() const { return e1_; }
  const MultiPoly& e2() const { return e2_; }
  const MultiPoly& p(std::size_t k);

 private:
  MultiPoly e1_;
  MultiPoly e2_;
  std::vector<MultiPoly> cache_;
};

// (q + t)^n
MultiPoly z_null(std::size_t n);
// q (q + v)^(n-1); the zero-field value shared by every tree on n vertices.
MultiPoly z_tree(std::size_t n);
// Open chain by a two-state transfer recurrence (last vertex favored or not).
MultiPoly z_line(std::size_t n);
// sum_j C(n-1,j) v^j (q~ + s w^(j+1)) (q~ + s w)^(n-1-j)
MultiPoly z_star(std::size_t n);
// sum_l C(n,l) s(s-1)..(s-l+1) (q-s)(q-s-1)..(q-s-n+l+1) w^l
MultiPoly ph_complete(std::size_t n);
// p_n + (s-1)(vw)^n + (q-s-1)v^n with e1 = q-s+v+w(s+v), e2 = vw(q+v).
MultiPoly z_circuit(std::size_t n);
// z_circuit at v = -1; zero for the looped single vertex.
MultiPoly ph_circuit(std::size_t n);

// The two circuit eigenvalue symmetric functions, shared with the
// asymptotic code.
MultiPoly circuit_e1();
MultiPoly circuit_e2();

// Closed form for the family when one exists, otherwise the subgraph sum
// on make_family(kind, n). Z of complete graphs and c4d use the latter.
MultiPoly family_z(FamilyKind kind, std::size_t n);
MultiPoly family_ph(FamilyKind kind, std::size_t n);

struct TransmigrationReport {
  std::size_t n = 0;
  bool holds = false;
  // z_circuit(n)|_{s=q} - w^n [(q+v)^n + (q-1) v^n]
  MultiPoly residual;
};

TransmigrationReport transmigration_check(std::size_t n);

}  // namespace wsc
