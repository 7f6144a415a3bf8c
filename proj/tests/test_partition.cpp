#include <gtest/gtest.h>

#include "golden.hpp"
#include "wsc/error.hpp"
#include "wsc/partition.hpp"
#include "wsc/poly_ops.hpp"

using namespace wsc;
using namespace wsc::vars;

namespace {

Graph family(FamilyKind k, std::size_t n) { return make_family(k, n); }

MultiPoly at(const MultiPoly& p, long q, long s) {
  return substitute(p, Substitution().bind(Var::q, q).bind(Var::s, s));
}

}  // namespace

TEST(SubgraphSum, Line2) { EXPECT_EQ(z_subgraph_sum(family(FamilyKind::Line, 2)), golden::z_line2()); }
TEST(SubgraphSum, Line3) { EXPECT_EQ(z_subgraph_sum(family(FamilyKind::Line, 3)), golden::z_line3()); }
TEST(SubgraphSum, Line4) { EXPECT_EQ(z_subgraph_sum(family(FamilyKind::Line, 4)), golden::z_line4()); }
TEST(SubgraphSum, Star4) { EXPECT_EQ(z_subgraph_sum(family(FamilyKind::Star, 4)), golden::z_star4()); }
TEST(SubgraphSum, Circuits) {
  EXPECT_EQ(z_subgraph_sum(family(FamilyKind::Circuit, 2)), golden::z_c2());
  EXPECT_EQ(z_subgraph_sum(family(FamilyKind::Circuit, 3)), golden::z_c3());
  EXPECT_EQ(z_subgraph_sum(family(FamilyKind::Circuit, 4)), golden::z_c4());
}

TEST(SubgraphSum, QBasisForms) {
  EXPECT_EQ(z_subgraph_sum(family(FamilyKind::Line, 2)), golden::z_line2_q());
  EXPECT_EQ(z_subgraph_sum(family(FamilyKind::Line, 3)), golden::z_line3_q());
  EXPECT_EQ(z_subgraph_sum(family(FamilyKind::Circuit, 2)), golden::z_c2_q());
}

TEST(SubgraphSum, LoopsRejected) {
  try {
    z_subgraph_sum(Graph(1, {{0, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LoopyGraph);
  }
  // A loop is always monochromatic, so it contributes a factor (1 + v).
  EXPECT_EQ(z_subgraph_sum(Graph(1, {{0, 0}}), {}, LoopPolicy::Allow), (MultiPoly(1) + v()) * (q() + t()));
}

TEST(SubgraphSum, WorkerCountDoesNotMatter) {
  const Graph k4 = family(FamilyKind::Complete, 4);
  EXPECT_EQ(z_subgraph_sum(k4, {kDefaultEdgeCap, 1}), z_subgraph_sum(k4, {kDefaultEdgeCap, 4}));
}

TEST(SubgraphSum, DisjointUnionFactorizes) {
  const Graph a = family(FamilyKind::Circuit, 3), b = family(FamilyKind::Star, 3);
  EXPECT_EQ(z_subgraph_sum(disjoint_union(a, b)), z_subgraph_sum(a) * z_subgraph_sum(b));
}

TEST(Ph, NullGraph) { EXPECT_EQ(ph(family(FamilyKind::Null, 3)), pow(q() + t(), 3)); }

TEST(Ph, TriangleAtQ2) {
  EXPECT_EQ(specialize(ph(family(FamilyKind::Circuit, 3)), Var::q, 2),
            s() * (s() - MultiPoly(1)) * (s() - MultiPoly(2)) * pow(w() - MultiPoly(1), 3));
}

TEST(Ph, MultiEdgeInvisible) { EXPECT_EQ(ph(family(FamilyKind::Circuit, 2)), ph(family(FamilyKind::Line, 2))); }

TEST(Ph, LoopGivesZero) { EXPECT_TRUE(ph(Graph(2, {{0, 1}, {1, 1}})).is_zero()); }

TEST(Ph, Reductions) {
  const Graph g = family(FamilyKind::C4d, 4);
  const MultiPoly p = ph(g);
  const MultiPoly chromatic = specialize(p, Var::w, 1);
  EXPECT_EQ(specialize(p, Var::s, 0), chromatic);
  EXPECT_EQ(chromatic.degree(index(Var::s)), 0u);
  EXPECT_EQ(specialize(p, Var::w, 0), substitute(chromatic, Substitution().bind(Var::q, q() - s())));
  EXPECT_EQ(substitute(p, Substitution().bind(Var::s, q())), pow(w(), 4) * chromatic);
}

TEST(Oracle, MatchesSubgraphSum) {
  for (const Graph& g : {family(FamilyKind::Line, 3), family(FamilyKind::Circuit, 4), family(FamilyKind::C4d, 4)}) {
    const MultiPoly z = z_subgraph_sum(g), p = ph(g);
    for (long q = 1; q <= 3; ++q) {
      for (long s = 0; s <= q; ++s) {
        EXPECT_EQ(oracle_z(g, q, s), at(z, q, s));
        EXPECT_EQ(oracle_ph(g, q, s), at(p, q, s));
      }
    }
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_ph(family(FamilyKind::Complete, 3), 3, 1), w() * MultiPoly(6));
  EXPECT_EQ(oracle_ph(family(FamilyKind::Circuit, 4), 2, 2), pow(w(), 4) * MultiPoly(2));
  EXPECT_TRUE(oracle_ph(family(FamilyKind::Circuit, 3), 2, 1).is_zero());
  const Graph l3 = family(FamilyKind::Line, 3);
  EXPECT_EQ(oracle_z(l3, 1, 0), pow(MultiPoly(1) + v(), 2));
  EXPECT_EQ(oracle_z(l3, 1, 1), pow(MultiPoly(1) + v(), 2) * pow(w(), 3));
}

TEST(Oracle, Preconditions) {
  const Graph g = family(FamilyKind::Line, 8);
  EXPECT_THROW(oracle_z(g, 2, 3), Error);
  EXPECT_THROW(oracle_z(g, 0, 0), Error);
  try {
    oracle_z(g, 10, 1, {1000, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(Beta, Decomposition) {
  const MultiPoly z = z_subgraph_sum(family(FamilyKind::Circuit, 3));
  const auto beta = beta_decompose(z, 3);
  EXPECT_EQ(beta.beta(2), MultiPoly(3) * s() * (q() - s()) * (s() + v()));
  EXPECT_EQ(beta.reassemble(), z);
  EXPECT_EQ(beta_decompose(z_subgraph_sum(family(FamilyKind::Circuit, 2)), 2).beta(1), MultiPoly(2) * s() * (q() - s()));
  try {
    beta_decompose(z, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooHigh);
  }
}

TEST(Alpha, Decomposition) {
  const auto a = alpha_decompose(ph(family(FamilyKind::Line, 3)), 3);
  EXPECT_EQ(a.alpha(3), MultiPoly(1));
  EXPECT_EQ(a.alpha(2), MultiPoly(3) * t() - MultiPoly(2));
  const auto n2 = alpha_decompose(ph(family(FamilyKind::Null, 2)), 2);
  EXPECT_EQ(n2.alpha(1), MultiPoly(2) * t());
  EXPECT_EQ(n2.alpha(0), t() * t());
  EXPECT_EQ(alpha_decompose(z_subgraph_sum(family(FamilyKind::Line, 5)), 5).alpha(4), MultiPoly(5) * t() + MultiPoly(4) * v());
  EXPECT_THROW(alpha_decompose(ph(family(FamilyKind::Line, 3)), 4), Error);
}

TEST(Alpha, SignsAndShape) {
  const auto a = alpha_decompose(ph(family(FamilyKind::C4d, 4)), 4);
  const auto values = alpha_values(a, 1, mpq_class(1, 2));
  EXPECT_FALSE(sign_alternation_failure(values));
  EXPECT_TRUE(unimodality_violations(values).empty());
  EXPECT_EQ(sign_alternation_failure({1, 2, 3}), 1u);
  EXPECT_EQ(unimodality_violations({1, 3, 2, 4}), std::vector<std::size_t>{3});
}

TEST(Tutte, Examples) {
  EXPECT_EQ(tutte(family(FamilyKind::Star, 5)), pow(TuttePoly::variable(0), 4));
  EXPECT_EQ(tutte(family(FamilyKind::Line, 5)), pow(TuttePoly::variable(0), 4));
  EXPECT_EQ(tutte(family(FamilyKind::Circuit, 3)), parse_tutte("x^2 + x + y"));
  EXPECT_EQ(tutte(family(FamilyKind::Null, 1)), TuttePoly(1));
}

TEST(Tutte, MatchesZeroFieldZ) {
  // Z(G,q,v) = q^k(G) v^(n-k(G)) T(1 + q/v, 1 + v), so x^a y^b maps to
  // q^k(G) (q+v)^a v^(n-k(G)-a) (1+v)^b.
  for (const Graph& g : {family(FamilyKind::C4d, 4), family(FamilyKind::Complete, 4), family(FamilyKind::Circuit, 2)}) {
    const auto t = tutte(g);
    const auto n = static_cast<unsigned>(g.num_vertices()), kg = static_cast<unsigned>(g.component_count());
    MultiPoly rhs;
    for (const auto& [e, c] : t.terms()) {
      ASSERT_LE(e[0], n - kg);
      rhs += (pow(q() + v(), e[0]) * pow(v(), n - kg - e[0]) * pow(MultiPoly(1) + v(), e[1])).scaled(c);
    }
    rhs *= pow(q(), kg);
    EXPECT_EQ(specialize(z_subgraph_sum(g), Var::s, 0), rhs);
  }
}
