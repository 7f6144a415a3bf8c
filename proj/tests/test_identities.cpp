#include <gtest/gtest.h>

#include "golden.hpp"
#include "wsc/families.hpp"
#include "wsc/identities.hpp"
#include "wsc/partition.hpp"
#include "wsc/poly_io.hpp"

using namespace wsc;
using namespace wsc::vars;

namespace {

const MultiPoly one(1);

Graph labeled(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels) {
  return Graph(n, std::move(edges), std::move(labels));
}

MultiPoly svww1() { return s() * v() * w() * (w() - one); }

}  // namespace

TEST(Symmetry, ZAndPhAreFixed) {
  for (const Graph& g : {make_family(FamilyKind::C4d, 4), make_family(FamilyKind::Star, 5),
                         disjoint_union(make_family(FamilyKind::Line, 2), make_family(FamilyKind::Circuit, 3))}) {
    const auto n = g.num_vertices();
    const auto z = z_subgraph_sum(g);
    EXPECT_EQ(symmetry_image(z, n), z);
    EXPECT_EQ(symmetry_image(ph(g), n), ph(g));
  }
  EXPECT_THROW(symmetry_image(pow(w(), 3), 2), Error);
}

TEST(Beta, Theorems) {
  for (const Graph& g : {make_family(FamilyKind::C4d, 4), make_family(FamilyKind::Complete, 4),
                         make_family(FamilyKind::Circuit, 5), make_family(FamilyKind::Star, 4)}) {
    const auto n = g.num_vertices();
    const auto z = z_subgraph_sum(g);
    const auto zero_field = specialize(z, Var::s, 0);
    const auto beta = beta_decompose(z, n);
    EXPECT_EQ(beta.beta(0), substitute(zero_field, Substitution().bind(Var::q, q() - s())));
    EXPECT_EQ(beta.beta(n), substitute(zero_field, Substitution().bind(Var::q, s())));
    EXPECT_EQ(beta.beta(n).degree(index(Var::q)), 0u);
    for (std::size_t j = 0; j <= n; ++j) {
      EXPECT_EQ(beta.beta(j), reflect_s(beta.beta(n - j)));
      if (j < n) EXPECT_TRUE(divides(q() - s(), beta.beta(j)));
      if (j > 0) EXPECT_TRUE(divides(s(), beta.beta(j)));
    }
    const auto chi = *g.chromatic_number();
    const auto pb = beta_decompose(ph(g), n);
    MultiPoly top(1), bottom(1);
    for (unsigned j = 0; j < chi; ++j) {
      top *= s() - MultiPoly(j);
      bottom *= q() - s() - MultiPoly(j);
    }
    EXPECT_TRUE(divides(top, pb.beta(n)));
    EXPECT_TRUE(divides(bottom, pb.beta(0)));
  }
}

TEST(Beta, CompleteGraphCoefficients) {
  const auto beta = beta_decompose(ph(make_family(FamilyKind::Complete, 4)), 4);
  // l = 2: C(4,2) s(s-1) (q-s)(q-s-1)
  EXPECT_EQ(beta.beta(2), MultiPoly(6) * s() * (s() - one) * (q() - s()) * (q() - s() - one));
}

TEST(Alpha, LeadingTerms) {
  for (const Graph& g : {make_family(FamilyKind::C4d, 4), make_family(FamilyKind::Circuit, 2),
                         make_family(FamilyKind::Complete, 4)}) {
    const auto n = g.num_vertices();
    const auto a = alpha_decompose(ph(g), n);
    EXPECT_EQ(a.alpha(n), one);
    const long e = static_cast<long>(g.reduce_multi_edges().num_edges());
    EXPECT_EQ(a.alpha(n - 1), MultiPoly(static_cast<long>(n)) * t() - MultiPoly(e));
    EXPECT_TRUE(divides(t(), alpha_decompose(z_subgraph_sum(g), n).alpha(0)));
  }
}

TEST(Dcr, KnownValues) {
  const auto l2 = dcr_deviation(make_family(FamilyKind::Line, 2), 0);
  EXPECT_EQ(l2.value.numerator(), svww1());
  EXPECT_TRUE(l2.factors_ok());
  for (std::size_t e = 0; e < 2; ++e) {
    EXPECT_EQ(dcr_deviation(make_family(FamilyKind::Line, 3), e).value.numerator(),
              svww1() * (s() * (w() - one) + w() * v() + q()));
  }
  for (std::size_t e = 0; e < 3; ++e) {
    const auto r = dcr_deviation(make_family(FamilyKind::Circuit, 3), e);
    EXPECT_EQ(r.value.numerator(), svww1() * (w() * v() * v() + MultiPoly(2) * w() * v() + s() * (w() - one) + q()));
    EXPECT_EQ(r.verified_factors.size(), 4u);
  }
}

TEST(Dcr, VanishesOnReductions) {
  const Graph g = make_family(FamilyKind::C4d, 4);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto d = dcr_deviation(g, e).value.numerator();
    EXPECT_TRUE(specialize(d, Var::w, 1).is_zero());
    EXPECT_TRUE(specialize(d, Var::w, 0).is_zero());
    EXPECT_TRUE(specialize(d, Var::s, 0).is_zero());
    EXPECT_TRUE(specialize(d, Var::v, 0).is_zero());
    const auto p = dcr_deviation(g, e, DcrMode::Ph, true);
    EXPECT_TRUE(p.factors_ok());
    EXPECT_EQ(p.value.numerator(), specialize(d, Var::v, -1));
  }
}

TEST(Dcr, MultiEdgeContractionMakesLoop) {
  const auto r = dcr_deviation(make_family(FamilyKind::Circuit, 2), 0);
  EXPECT_TRUE(r.factors_ok());
}

TEST(Kit, Line3) {
  const Graph g = labeled(3, {{0, 1}, {1, 2}}, {"a", "b", "c"});
  const Graph g1 = labeled(2, {{0, 1}}, {"a", "b"});
  const Graph g2 = labeled(2, {{0, 1}}, {"b", "c"});
  const auto r = kit_deviation(g, g1, g2, 1);
  EXPECT_TRUE(r.value.equivalent(RationalExpr(s() * (q() - s()) * w() * pow(w() - one, 2), q() + t())));
  EXPECT_TRUE(r.factors_ok());
}

TEST(Kit, Line4) {
  const Graph g = make_family(FamilyKind::Line, 4);
  const Graph g1 = labeled(3, {{0, 1}, {1, 2}}, {"0", "1", "2"});
  const Graph g2 = labeled(2, {{0, 1}}, {"2", "3"});
  const auto r = kit_deviation(g, g1, g2, 1);
  EXPECT_TRUE(r.value.equivalent(
      RationalExpr(s() * (q() - s()) * w() * pow(w() - one, 2) * (q() + t() - (w() + one)), q() + t())));
}

TEST(Kit, BoxWithDiagonal) {
  const Graph g = make_family(FamilyKind::C4d, 4);
  const Graph g1 = labeled(3, {{0, 1}, {1, 2}, {0, 2}}, {"0", "1", "2"});
  const Graph g2 = labeled(3, {{0, 1}, {1, 2}, {0, 2}}, {"2", "3", "0"});
  const auto r = kit_deviation(g, g1, g2, 2);
  const MultiPoly k2 = ph_complete(2);
  const MultiPoly expected = MultiPoly(2) * s() * (q() - s()) * w() * pow(w() - one, 2) * (k2 - MultiPoly(2) * (q() - one) * w());
  EXPECT_TRUE(r.value.equivalent(RationalExpr(expected, k2)));
  EXPECT_TRUE(r.factors_ok());
  const auto& n = r.value.numerator();
  for (auto [var, val] : {std::pair{Var::w, 1L}, {Var::w, 0L}, {Var::s, 0L}}) EXPECT_TRUE(specialize(n, var, val).is_zero());
  EXPECT_TRUE(substitute(n, Substitution().bind(Var::s, q())).is_zero());
}

TEST(Kit, RejectsBadDecomposition) {
  const Graph g = make_family(FamilyKind::Line, 3);
  const Graph g1 = labeled(2, {{0, 1}}, {"0", "1"});
  auto code = [&](const Graph& a, const Graph& b, std::size_t m) {
    try {
      kit_deviation(g, a, b, m);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  EXPECT_EQ(code(g1, labeled(2, {{0, 1}}, {"1", "2"}), 2), ErrorCode::BadDecomposition);
  EXPECT_EQ(code(g1, labeled(2, {{0, 1}}, {"0", "2"}), 1), ErrorCode::BadDecomposition);
  EXPECT_EQ(code(g1, labeled(2, {}, {"1", "2"}), 1), ErrorCode::BadDecomposition);
  EXPECT_EQ(code(g1, labeled(2, {{0, 1}}, {"1", "x"}), 1), ErrorCode::BadDecomposition);
}

TEST(Cycles, ForestsVanish) {
  EXPECT_TRUE(cycle_deviation(make_family(FamilyKind::Star, 4)).is_zero());
  EXPECT_TRUE(cycle_deviation(make_family(FamilyKind::Line, 3)).is_zero());
  EXPECT_TRUE(cycle_deviation(disjoint_union(make_family(FamilyKind::Line, 3), make_family(FamilyKind::Star, 4))).is_zero());
}

TEST(Cycles, Circuits) {
  for (unsigned n = 2; n <= 7; ++n) {
    const auto r = cycle_deviation(make_family(FamilyKind::Circuit, n));
    EXPECT_EQ(r.s_clearing_power, 1u);
    EXPECT_TRUE(r.value.equivalent(RationalExpr((s() - one) * (q() - s() + s() * pow(w(), n)) * pow(v(), n), s())));
  }
}

TEST(TutteSeparator, StarVersusLine) {
  const auto r = tutte_separator(make_family(FamilyKind::Star, 4), make_family(FamilyKind::Line, 4));
  EXPECT_TRUE(*r.tutte_equivalent);
  EXPECT_EQ(r.value.numerator(), s() * (q() - s()) * v() * v() * w() * pow(w() - one, 2));
  EXPECT_TRUE(r.factors_ok());
}

TEST(TutteSeparator, DoubleEdge) {
  const auto r = tutte_separator(make_family(FamilyKind::Circuit, 2), make_family(FamilyKind::Line, 2));
  EXPECT_FALSE(*r.tutte_equivalent);
  // The quoted form has (s-1) where the difference of the two reference
  // polynomials gives (w-1).
  EXPECT_EQ(r.value.numerator(), v() * (v() + one) * (q() + s() * (w() - one) * (w() + one)));
  EXPECT_TRUE(specialize(r.value.numerator(), Var::v, -1).is_zero());
  EXPECT_TRUE(tutte_separator(make_family(FamilyKind::Line, 4), make_family(FamilyKind::Line, 4)).is_zero());
}

TEST(ChromaticEquivalence, VanishesAtQ1) {
  // Trees on the same number of vertices share P(G,q) = q(q-1)^(n-1).
  const auto d = ph(make_family(FamilyKind::Star, 5)) - ph(make_family(FamilyKind::Line, 5));
  for (long s : {0L, 1L})
    EXPECT_TRUE(substitute(d, Substitution().bind(Var::q, 1).bind(Var::s, s)).is_zero());
}

TEST(Bounds, Examples) {
  const Graph c4 = make_family(FamilyKind::Circuit, 4);
  auto find = [](const BoundsReport& r, const std::string& name) {
    for (const auto& c : r.checks)
      if (c.name == name) return c;
    return BoundCheck{};
  };
  auto r = bipartite_bounds(c4, 3, 2, 2);
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(find(r, "large-w").bound, 32);
  EXPECT_TRUE(find(r, "large-w").applicable);
  r = bipartite_bounds(c4, 4, 1, mpq_class(1, 10));
  EXPECT_EQ(find(r, "small-w").bound, 12);
  EXPECT_FALSE(find(r, "large-w").applicable);
  EXPECT_TRUE(r.all_hold());
  r = bipartite_bounds(c4, 3, 1, mpq_class(9, 10));
  EXPECT_EQ(find(r, "moderate-w").bound, mpq_class(81, 25));
  EXPECT_TRUE(r.all_hold());
  EXPECT_FALSE(bipartite_bounds(2, 2, 3, 1, 1, 1).all_hold());
  EXPECT_THROW(bipartite_bounds(make_family(FamilyKind::Circuit, 3), 3, 1, 1), Error);
}

TEST(Positivity, SubsetInequality) {
  // Any subset of proper colorings contributes a partial sum no larger than Ph.
  const Graph g = make_family(FamilyKind::Circuit, 4);
  for (long q = 2; q <= 4; ++q)
    for (long s = 0; s <= q; ++s) {
      const mpq_class w(3, 4);
      const auto full = eval_exact(oracle_ph(g, q, s), {0, 0, 0, w});
      EXPECT_GE(full, 0);
      const auto ph_value = eval_exact(ph(g), {q, s, -1, w});
      EXPECT_EQ(full, ph_value);
    }
}
