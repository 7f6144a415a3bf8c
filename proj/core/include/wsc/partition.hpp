#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wsc/graph.hpp"
#include "wsc/poly.hpp"
#include "wsc/subgraphs.hpp"

namespace wsc {

enum class LoopPolicy { Reject, Allow };

// Z(G,q,s,v,w) as the sum over spanning subgraphs G' of
// v^e(G') * prod_i (q - s + s w^n(G'_i)).
// LoopyGraph unless loops are explicitly allowed (deletion/contraction
// needs them internally); CapExceeded above the edge cap.
MultiPoly z_subgraph_sum(const Graph& graph, const EnumerationOptions& options = {},
                         LoopPolicy loops = LoopPolicy::Reject);

// Ph(G,q,s,w) = Z at v = -1. Zero for graphs with a loop.
MultiPoly ph(const Graph& graph, const EnumerationOptions& options = {});

// Z assembled from an already computed census, with v left free or fixed.
MultiPoly assemble_z(const SubgraphCensus& census, std::optional<long> v_value = std::nullopt);

inline constexpr std::uint64_t kDefaultColoringCap = 10'000'000;

struct OracleOptions {
  std::uint64_t coloring_cap = kDefaultColoringCap;
  unsigned workers = 0;
};

// Brute force over all q^n colorings: sum of (1+v)^m w^n_s, where m counts
// monochromatic edges and n_s the vertices colored from {1..s}. The result
// only involves v and w.
MultiPoly oracle_z(const Graph& graph, long q, long s, const OracleOptions& options = {});

// Sum of w^n_s over proper colorings.
MultiPoly oracle_ph(const Graph& graph, long q, long s, const OracleOptions& options = {});

// Coefficients of w^j, j = 0..n; each is a polynomial in q, s, v.
struct BetaDecomposition {
  std::size_t n = 0;
  std::vector<MultiPoly> coefficients;

  const MultiPoly& beta(std::size_t j) const { return coefficients.at(j); }
  MultiPoly reassemble() const;
};

// DegreeTooHigh when deg_w p > n.
BetaDecomposition beta_decompose(const MultiPoly& p, std::size_t n);

// Coefficients of q^k, k = 0..n; each is a polynomial in s, v, w.
struct AlphaDecomposition {
  std::size_t n = 0;
  std::vector<MultiPoly> coefficients;

  // alpha(k) multiplies q^k, so alpha(n) is the leading coefficient.
  const MultiPoly& alpha(std::size_t k) const { return coefficients.at(k); }
  MultiPoly reassemble() const;
};

// DegreeMismatch unless deg_q p == n.
AlphaDecomposition alpha_decompose(const MultiPoly& p, std::size_t n);

// Sum over spanning subgraphs of (x-1)^(k(G')-k(G)) (y-1)^c(G').
TuttePoly tutte(const Graph& graph, const EnumerationOptions& options = {});

// Values of alpha(n-j), j = 0..n, at v = -1 and the given s, w.
std::vector<mpq_class> alpha_values(const AlphaDecomposition& alpha, const mpq_class& s, const mpq_class& w);

// First j <= n-1 whose alpha(n-j) does not have sign (-1)^j, if any.
std::optional<std::size_t> sign_alternation_failure(const std::vector<mpq_class>& values);

// Indices j where |alpha(n-j)| dips below both neighbours.
std::vector<std::size_t> unimodality_violations(const std::vector<mpq_class>& values);

}  // namespace wsc
