#include "wsc/identities.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wsc/families.hpp"
#include "wsc/partition.hpp"

namespace wsc {

using namespace vars;

namespace {

void check_factors(DeviationReport& report, const std::vector<MultiPoly>& candidates) {
  for (const auto& f : candidates) {
    if (divides(f, report.value.numerator()))
      report.verified_factors.push_back(f);
    else
      report.failed_factors.push_back(f);
  }
}

MultiPoly w_minus_1() { return w() - MultiPoly(1); }

using LabelEdge = std::pair<std::string, std::string>;

std::multiset<LabelEdge> label_edges(const Graph& g) {
  std::multiset<LabelEdge> out;
  for (const auto& e : g.edges()) {
    auto a = g.label(e.u), b = g.label(e.v);
    if (b < a) std::swap(a, b);
    out.emplace(std::move(a), std::move(b));
  }
  return out;
}

std::set<std::string> label_set(const Graph& g) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) out.insert(g.label(i));
  return out;
}

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::BadDecomposition, why); }

void validate_kit(const Graph& g, const Graph& g1, const Graph& g2, std::size_t m) {
  const auto all = label_set(g), l1 = label_set(g1), l2 = label_set(g2);
  if (all.size() != g.num_vertices() || l1.size() != g1.num_vertices() || l2.size() != g2.num_vertices())
    bad("vertex labels must be unique");
  std::set<std::string> joined = l1, shared;
  joined.insert(l2.begin(), l2.end());
  if (joined != all) bad("the vertex labels of G1 and G2 together must be exactly those of G");
  std::set_intersection(l1.begin(), l1.end(), l2.begin(), l2.end(), std::inserter(shared, shared.end()));
  if (shared.size() != m)
    bad("G1 and G2 share " + std::to_string(shared.size()) + " vertices, expected " + std::to_string(m));

  auto inside = [&](const std::multiset<LabelEdge>& edges) {
    std::multiset<LabelEdge> out;
    for (const auto& e : edges)
      if (shared.count(e.first) && shared.count(e.second)) out.insert(e);
    return out;
  };
  const auto e1 = label_edges(g1), e2 = label_edges(g2);
  const auto c1 = inside(e1), c2 = inside(e2);
  if (c1 != c2) bad("G1 and G2 induce different edges on their shared vertices");
  std::multiset<LabelEdge> clique;
  for (auto a = shared.begin(); a != shared.end(); ++a)
    for (auto b = std::next(a); b != shared.end(); ++b) clique.emplace(*a, *b);
  if (c1 != clique) bad("the shared vertices do not form a complete graph K_" + std::to_string(m));

  std::multiset<LabelEdge> expected = e1;
  for (const auto& e : e2)
    if (!c2.count(e)) expected.insert(e);
  if (expected != label_edges(g)) bad("the edges of G are not the union of the edges of G1 and G2");
}

}  // namespace

MultiPoly symmetry_image(const MultiPoly& p, std::size_t n) {
  constexpr auto iw = index(Var::w);
  if (p.degree(iw) > n) throw Error(ErrorCode::DegreeTooHigh, "w-degree exceeds " + std::to_string(n));
  MultiPoly out;
  const MultiPoly reflected = reflect_s(p);
  for (const auto& [e, c] : reflected.terms()) {
    auto f = e;
    f[iw] = static_cast<std::uint32_t>(n) - e[iw];
    out.add_term(f, c);
  }
  return out;
}

std::string_view to_string(DeviationKind kind) {
  switch (kind) {
    case DeviationKind::Dcr: return "dcr";
    case DeviationKind::Kit: return "kit";
    case DeviationKind::Cycles: return "cycles";
    case DeviationKind::TutteSeparator: return "tutte-separator";
  }
  return "?";
}

DeviationReport dcr_deviation(const Graph& graph, std::size_t edge, DcrMode mode, bool reduce_contracted,
                              const EnumerationOptions& options) {
  const Graph deleted = graph.without_edge(edge);
  Graph contracted = graph.contract_edge(edge);
  if (reduce_contracted) contracted = contracted.reduce_multi_edges();

  DeviationReport report;
  report.kind = DeviationKind::Dcr;
  MultiPoly diff;
  if (mode == DcrMode::Z) {
    diff = z_subgraph_sum(graph, options) -
           (z_subgraph_sum(deleted, options) + v() * z_subgraph_sum(contracted, options, LoopPolicy::Allow));
  } else {
    diff = ph(graph, options) - (ph(deleted, options) - ph(contracted, options));
  }
  report.value = RationalExpr(std::move(diff), MultiPoly(1));
  std::vector<MultiPoly> candidates{s(), w(), w_minus_1()};
  if (mode == DcrMode::Z) candidates.insert(candidates.begin() + 1, v());
  check_factors(report, candidates);
  return report;
}

DeviationReport kit_deviation(const Graph& g, const Graph& g1, const Graph& g2, std::size_t m,
                              const EnumerationOptions& options) {
  validate_kit(g, g1, g2, m);
  const MultiPoly clique = m == 0 ? MultiPoly(1) : ph_complete(m);
  DeviationReport report;
  report.kind = DeviationKind::Kit;
  report.value = RationalExpr(ph(g, options) * clique - ph(g1, options) * ph(g2, options), clique);
  check_factors(report, {s(), q() - s(), w(), w_minus_1()});
  return report;
}

DeviationReport cycle_deviation(const Graph& graph, const EnumerationOptions& options) {
  const MultiPoly z = z_subgraph_sum(graph, options);
  const auto n = static_cast<std::int64_t>(graph.num_vertices());
  constexpr auto iq = index(Var::q), is = index(Var::s), iv = index(Var::v);

  // s^n Z(q/s, 1, v/s, w): q^a s^b v^c w^d -> q^a v^c w^d s^(n-a-c).
  std::int64_t clear = 0;
  for (const auto& [e, c] : z.terms()) clear = std::max<std::int64_t>(clear, e[iq] + e[iv] - n);
  MultiPoly scaled;
  for (const auto& [e, c] : z.terms()) {
    auto f = e;
    f[is] = static_cast<std::uint32_t>(n + clear - e[iq] - e[iv]);
    scaled.add_term(f, c);
  }
  const MultiPoly sd = MultiPoly::variable(is, static_cast<std::uint32_t>(clear));

  DeviationReport report;
  report.kind = DeviationKind::Cycles;
  report.s_clearing_power = static_cast<std::uint32_t>(clear);
  report.value = RationalExpr(sd * z - scaled, sd);
  return report;
}

DeviationReport tutte_separator(const Graph& g, const Graph& h, const EnumerationOptions& options) {
  DeviationReport report;
  report.kind = DeviationKind::TutteSeparator;
  report.value = RationalExpr(z_subgraph_sum(g, options) - z_subgraph_sum(h, options), MultiPoly(1));
  report.tutte_equivalent = tutte(g, options) == tutte(h, options);
  if (*report.tutte_equivalent) check_factors(report, {s(), q() - s(), v(), w(), w_minus_1()});
  return report;
}

BoundsReport bipartite_bounds(std::size_t n1, std::size_t n2, const mpq_class& q, const mpq_class& s,
                              const mpq_class& w, const mpq_class& ph_value) {
  auto power = [](const mpq_class& x, std::size_t k) {
    mpq_class out = 1;
    for (std::size_t i = 0; i < k; ++i) out *= x;
    return out;
  };
  BoundsReport report;
  auto add = [&](std::string name, bool ok, std::string pre, mpq_class bound) {
    BoundCheck c{std::move(name), ok && q >= 2 && n1 >= 1 && n1 <= n2, std::move(pre), std::move(bound), false};
    if (c.applicable) c.holds = ph_value >= c.bound;
    report.checks.push_back(std::move(c));
  };
  add("large-w", s >= 2, "s >= 2", s * power(s - 1, n2) * power(w, n1 + n2));
  add("small-w", q >= s + 2, "q >= s + 2", (q - s) * power(q - s - 1, n2));
  add("moderate-w", q >= s + 1, "q >= s + 1", s * power(w, n1) * power(q - s, n2));
  add("unweighted", w == 1, "w = 1", q * power(q - 1, n2));
  return report;
}

BoundsReport bipartite_bounds(const Graph& graph, long q, long s, const mpq_class& w) {
  const auto parts = graph.bipartition();
  if (!parts) throw Error(ErrorCode::PreconditionUnmet, "graph is not bipartite");
  if (graph.num_edges() == 0) throw Error(ErrorCode::PreconditionUnmet, "graph has no edges, so chromatic number 1");
  const mpq_class value = eval_exact(ph(graph), {q, s, -1, w});
  return bipartite_bounds(parts->first.size(), parts->second.size(), q, s, w, value);
}

}  // namespace wsc
