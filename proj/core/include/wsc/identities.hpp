#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsc/graph.hpp"
#include "wsc/poly_ops.hpp"
#include "wsc/subgraphs.hpp"

namespace wsc {

// w^n p(q, q-s, v, 1/w), a polynomial whenever deg_w p <= n (else
// DegreeTooHigh). Z and Ph are fixed points of this map.
MultiPoly symmetry_image(const MultiPoly& p, std::size_t n);

enum class DeviationKind { Dcr, Kit, Cycles, TutteSeparator };

std::string_view to_string(DeviationKind kind);

struct DeviationReport {
  DeviationKind kind = DeviationKind::Dcr;
  RationalExpr value{MultiPoly(), MultiPoly(1)};
  // Candidate factors that divide the numerator exactly, and those that do not.
  std::vector<MultiPoly> verified_factors;
  std::vector<MultiPoly> failed_factors;
  // Cycles only: the power of s multiplied through to clear denominators.
  std::uint32_t s_clearing_power = 0;
  // TutteSeparator only.
  std::optional<bool> tutte_equivalent;

  bool is_zero() const { return value.numerator().is_zero(); }
  bool factors_ok() const { return failed_factors.empty(); }
};

enum class DcrMode { Z, Ph };

// Z(G) - [Z(G-e) + v Z(G/e)], or the Ph analogue Ph(G) - [Ph(G-e) - Ph(G/e)].
// Contraction keeps parallel edges; reduce_contracted applies R_E to G/e,
// which only makes sense in Ph mode. Candidate factors: s, v, w, w-1 (v
// dropped in Ph mode).
DeviationReport dcr_deviation(const Graph& graph, std::size_t edge, DcrMode mode = DcrMode::Z,
                              bool reduce_contracted = false, const EnumerationOptions& options = {});

// Ph(G) - Ph(G1) Ph(G2) / Ph(K_m) with numerator Ph(G)Ph(K_m) - Ph(G1)Ph(G2).
// Vertices are matched by label (index strings when unlabeled). BadDecomposition
// unless G = G1 u G2 with G1 n G2 a complete graph on m vertices.
DeviationReport kit_deviation(const Graph& g, const Graph& g1, const Graph& g2, std::size_t m,
                              const EnumerationOptions& options = {});

// Z(G,q,s,v,w) - s^n Z(G, q/s, 1, v/s, w), multiplied by s^D to clear
// denominators; the report's value is the uncleared rational expression.
DeviationReport cycle_deviation(const Graph& graph, const EnumerationOptions& options = {});

// Z(G) - Z(H); factor theorem s(q-s)vw(w-1) checked when T(G) = T(H).
DeviationReport tutte_separator(const Graph& g, const Graph& h, const EnumerationOptions& options = {});

struct BoundCheck {
  std::string name;
  bool applicable = false;
  std::string precondition;
  mpq_class bound;
  bool holds = false;
};

struct BoundsReport {
  std::vector<BoundCheck> checks;
  bool all_hold() const {
    for (const auto& c : checks)
      if (c.applicable && !c.holds) return false;
    return true;
  }
};

// Lower bounds for a bipartite graph with classes of sizes 1 <= n1 <= n2 against
// the supplied value of Ph(G,q,s,w). Bounds whose preconditions fail are
// reported as not applicable.
BoundsReport bipartite_bounds(std::size_t n1, std::size_t n2, const mpq_class& q, const mpq_class& s,
                              const mpq_class& w, const mpq_class& ph_value);

// Same, taking the classes and Ph(G) from the graph itself, which needs at
// least one edge.
BoundsReport bipartite_bounds(const Graph& graph, long q, long s, const mpq_class& w);

}  // namespace wsc
