#include "wsc/partition.hpp"

#include <map>
#include <thread>

#include "wsc/error.hpp"
#include "wsc/poly_ops.hpp"

namespace wsc {

namespace {

// Exponents of v^e (q-s)^m s^j w^W before (q-s)^m is expanded.
using Pending = std::map<std::array<std::uint32_t, 4>, mpz_class>;

// prod_i (A + s w^{a_i}) as a list of ((j, W), multiplicity): choosing the
// s w^{a_i} factor for j of the components with total size W.
std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, mpz_class>> component_product(
    const std::vector<std::uint32_t>& sizes) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, mpz_class> dp{{{0, 0}, 1}};
  for (auto a : sizes) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, mpz_class> next;
    for (const auto& [key, c] : dp) {
      next[key] += c;
      next[{key.first + 1, key.second + a}] += c;
    }
    dp = std::move(next);
  }
  return {dp.begin(), dp.end()};
}

std::vector<std::vector<mpz_class>> binomial_rows(std::size_t n) {
  std::vector<std::vector<mpz_class>> rows(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (std::size_t k = 1; k < i; ++k) rows[i][k] = rows[i - 1][k - 1] + rows[i - 1][k];
  }
  return rows;
}

MultiPoly expand_pending(const Pending& pending) {
  std::uint32_t max_m = 0;
  for (const auto& [e, c] : pending) max_m = std::max(max_m, e[1]);
  const auto binom = binomial_rows(max_m);
  MultiPoly out;
  for (const auto& [e, c] : pending) {
    const auto [ev, m, j, W] = e;
    // (q - s)^m = sum_i C(m,i) q^i (-s)^(m-i)
    for (std::uint32_t i = 0; i <= m; ++i) {
      mpz_class coeff = c * binom[m][i];
      if ((m - i) % 2 == 1) coeff = -coeff;
      out.add_term({i, j + m - i, ev, W}, coeff);
    }
  }
  return out;
}

void check_coloring_args(const Graph& graph, long q, long s, const OracleOptions& options) {
  if (q < 1) throw Error(ErrorCode::PreconditionUnmet, "oracle needs q >= 1");
  if (s < 0 || s > q) throw Error(ErrorCode::PreconditionUnmet, "oracle needs 0 <= s <= q");
  double total = 1;
  for (std::size_t i = 0; i < graph.num_vertices(); ++i) {
    total *= static_cast<double>(q);
    if (total > static_cast<double>(options.coloring_cap)) {
      throw Error(ErrorCode::CapExceeded, "q^n = " + std::to_string(q) + "^" + std::to_string(graph.num_vertices()) +
                                              " colorings exceeds the cap of " + std::to_string(options.coloring_cap));
    }
  }
}

// counts[m][n_s] over all colorings.
std::vector<std::vector<std::uint64_t>> coloring_census(const Graph& graph, long q, long s, unsigned workers) {
  const std::size_t n = graph.num_vertices(), e = graph.num_edges();
  std::vector<std::vector<std::uint64_t>> total(e + 1, std::vector<std::uint64_t>(n + 1, 0));
  if (n == 0) {
    total[0][0] = 1;
    return total;
  }
  const auto& edges = graph.edges();
  const unsigned parts = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(q));
  std::vector<std::vector<std::vector<std::uint64_t>>> partial(parts, total);
  std::vector<std::thread> threads;
  for (unsigned part = 0; part < parts; ++part) {
    threads.emplace_back([&, part] {
      auto& counts = partial[part];
      std::vector<long> color(n, 0);
      for (long first = part; first < q; first += parts) {
        std::fill(color.begin(), color.end(), 0);
        color[0] = first;
        for (;;) {
          std::size_t m = 0, ns = 0;
          for (const auto& ed : edges) m += color[ed.u] == color[ed.v];
          for (auto c : color) ns += c < s;
          ++counts[m][ns];
          std::size_t i = 1;
          while (i < n && ++color[i] == q) color[i++] = 0;
          if (i >= n) break;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& p : partial)
    for (std::size_t m = 0; m <= e; ++m)
      for (std::size_t k = 0; k <= n; ++k) total[m][k] += p[m][k];
  return total;
}

}  // namespace

MultiPoly assemble_z(const SubgraphCensus& census, std::optional<long> v_value) {
  std::map<std::vector<std::uint32_t>, std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, mpz_class>>> memo;
  Pending pending;
  for (const auto& [key, count] : census) {
    auto it = memo.find(key.component_sizes);
    if (it == memo.end()) it = memo.emplace(key.component_sizes, component_product(key.component_sizes)).first;
    mpz_class weight = mpz_class(std::to_string(count));
    std::uint32_t ev = key.num_edges;
    if (v_value) {
      mpz_class vp;
      mpz_pow_ui(vp.get_mpz_t(), mpz_class(*v_value).get_mpz_t(), ev);
      weight *= vp;
      ev = 0;
    }
    const auto k = static_cast<std::uint32_t>(key.component_sizes.size());
    for (const auto& [jw, mult] : it->second) {
      const auto [j, W] = jw;
      pending[{ev, k - j, j, W}] += weight * mult;
    }
  }
  return expand_pending(pending);
}

MultiPoly z_subgraph_sum(const Graph& graph, const EnumerationOptions& options, LoopPolicy loops) {
  if (loops == LoopPolicy::Reject && graph.has_loop())
    throw Error(ErrorCode::LoopyGraph, "Z is computed for loopless graphs only");
  return assemble_z(subgraph_census(graph, options));
}

MultiPoly ph(const Graph& graph, const EnumerationOptions& options) {
  if (graph.has_loop()) return MultiPoly();
  return assemble_z(subgraph_census(graph, options), -1);
}

MultiPoly oracle_z(const Graph& graph, long q, long s, const OracleOptions& options) {
  check_coloring_args(graph, q, s, options);
  const auto counts = coloring_census(graph, q, s, options.workers);
  const auto binom = binomial_rows(graph.num_edges());
  MultiPoly out;
  for (std::size_t m = 0; m < counts.size(); ++m) {
    for (std::size_t ns = 0; ns < counts[m].size(); ++ns) {
      if (counts[m][ns] == 0) continue;
      const mpz_class c(std::to_string(counts[m][ns]));
      // (1+v)^m
      for (std::size_t i = 0; i <= m; ++i)
        out.add_term({0, 0, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(ns)}, c * binom[m][i]);
    }
  }
  return out;
}

MultiPoly oracle_ph(const Graph& graph, long q, long s, const OracleOptions& options) {
  check_coloring_args(graph, q, s, options);
  const auto counts = coloring_census(graph, q, s, options.workers);
  MultiPoly out;
  for (std::size_t ns = 0; ns < counts[0].size(); ++ns)
    if (counts[0][ns] != 0) out.add_term({0, 0, 0, static_cast<std::uint32_t>(ns)}, mpz_class(std::to_string(counts[0][ns])));
  return out;
}

MultiPoly BetaDecomposition::reassemble() const {
  MultiPoly out;
  for (std::size_t j = 0; j < coefficients.size(); ++j)
    out += coefficients[j].shifted({0, 0, 0, static_cast<std::uint32_t>(j)});
  return out;
}

BetaDecomposition beta_decompose(const MultiPoly& p, std::size_t n) {
  const auto d = p.degree(index(Var::w));
  if (d > n) {
    throw Error(ErrorCode::DegreeTooHigh,
                "w-degree " + std::to_string(d) + " exceeds the vertex count " + std::to_string(n));
  }
  BetaDecomposition out;
  out.n = n;
  for (std::size_t j = 0; j <= n; ++j) out.coefficients.push_back(p.coefficient_of(index(Var::w), static_cast<std::uint32_t>(j)));
  return out;
}

MultiPoly AlphaDecomposition::reassemble() const {
  MultiPoly out;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    out += coefficients[k].shifted({static_cast<std::uint32_t>(k), 0, 0, 0});
  return out;
}

AlphaDecomposition alpha_decompose(const MultiPoly& p, std::size_t n) {
  const auto d = p.degree(index(Var::q));
  if (p.is_zero() || d != n) {
    throw Error(ErrorCode::DegreeMismatch,
                "q-degree " + std::to_string(d) + " differs from the vertex count " + std::to_string(n));
  }
  AlphaDecomposition out;
  out.n = n;
  for (std::size_t k = 0; k <= n; ++k) out.coefficients.push_back(p.coefficient_of(index(Var::q), static_cast<std::uint32_t>(k)));
  return out;
}

TuttePoly tutte(const Graph& graph, const EnumerationOptions& options) {
  const auto census = subgraph_census(graph, options);
  const auto kG = static_cast<std::uint32_t>(graph.component_count());
  const auto n = static_cast<std::uint32_t>(graph.num_vertices());
  std::map<std::pair<std::uint32_t, std::uint32_t>, mpz_class> by_rank;
  for (const auto& [key, count] : census) {
    const auto k = static_cast<std::uint32_t>(key.component_sizes.size());
    by_rank[{k - kG, key.num_edges + k - n}] += mpz_class(std::to_string(count));
  }
  std::uint32_t top = 0;
  for (const auto& [ab, c] : by_rank) top = std::max({top, ab.first, ab.second});
  const auto binom = binomial_rows(top);
  TuttePoly out;
  for (const auto& [ab, c] : by_rank) {
    const auto [a, b] = ab;
    for (std::uint32_t i = 0; i <= a; ++i) {
      for (std::uint32_t j = 0; j <= b; ++j) {
        mpz_class coeff = c * binom[a][i] * binom[b][j];
        if ((a - i + b - j) % 2 == 1) coeff = -coeff;
        out.add_term({i, j}, coeff);
      }
    }
  }
  return out;
}

std::vector<mpq_class> alpha_values(const AlphaDecomposition& alpha, const mpq_class& s, const mpq_class& w) {
  std::vector<mpq_class> out;
  for (std::size_t j = 0; j <= alpha.n; ++j) out.push_back(eval_exact(alpha.alpha(alpha.n - j), {0, s, -1, w}));
  return out;
}

std::optional<std::size_t> sign_alternation_failure(const std::vector<mpq_class>& values) {
  for (std::size_t j = 0; j + 1 < values.size(); ++j) {
    const int want = j % 2 == 0 ? 1 : -1;
    if (sgn(values[j]) != want) return j;
  }
  return std::nullopt;
}

std::vector<std::size_t> unimodality_violations(const std::vector<mpq_class>& values) {
  std::vector<std::size_t> out;
  bool falling = false;
  for (std::size_t j = 1; j < values.size(); ++j) {
    const int step = cmp(abs(values[j]), abs(values[j - 1]));
    if (step < 0) falling = true;
    if (step > 0 && falling) out.push_back(j);
  }
  return out;
}

}  // namespace wsc
