#include <gtest/gtest.h>

#include <random>

#include "wsc/poly_io.hpp"
#include "wsc/poly_ops.hpp"

using namespace wsc;
using namespace wsc::vars;

TEST(Poly, SquareInTBasis) {
  const TPoly q = TPoly::variable(0), t = TPoly::variable(1);
  EXPECT_EQ((q + t) * (q + t), q * q + t * q * 2 + t * t);
}

TEST(Poly, GeometricFactorization) {
  EXPECT_EQ((w() - MultiPoly(1)) * (MultiPoly(1) + w() + w() * w()), pow(w(), 3) - MultiPoly(1));
}

TEST(Poly, ZeroAnnihilates) {
  EXPECT_TRUE((v() * MultiPoly(0)).is_zero());
  EXPECT_TRUE(MultiPoly(0).is_zero());
  EXPECT_EQ((q() - q()).size(), 0u);
}

TEST(Poly, PowZeroIsOne) { EXPECT_EQ(pow(q() + s(), 0), MultiPoly(1)); }

TEST(Poly, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5), expo(0, 3);
  auto random_poly = [&] {
    MultiPoly p;
    for (int i = 0; i < 5; ++i) {
      MultiPoly::Exponents e;
      for (auto& x : e) x = static_cast<std::uint32_t>(expo(rng));
      p.add_term(e, coeff(rng));
    }
    return p;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Poly, ParseAndRenderRoundTrip) {
  const auto p = parse_poly("s(s+v)w^2 + 2s(q-s)w + (q-s)(q-s+v)");
  EXPECT_EQ(parse_poly(to_text(p)), p);
  EXPECT_EQ(poly_from_json<QSVW>(nlohmann::json::parse(to_json(p).dump())), p);
  EXPECT_EQ(to_text(parse_poly("2q^2 - w + 1")), "2*q^2 - w + 1");
  EXPECT_EQ(to_latex(parse_poly("q^2 s")), "q^{2} s");
}

TEST(Poly, ParseErrors) {
  EXPECT_THROW(parse_poly("q +"), Error);
  EXPECT_THROW(parse_poly("(q"), Error);
  EXPECT_THROW(parse_poly("z"), Error);
  EXPECT_THROW(parse_poly("q^"), Error);
}

TEST(Poly, SubstituteVMinusOne) {
  const auto z = parse_poly("s(s+v)w^2 + 2s(q-s)w + (q-s)(q-s+v)");
  EXPECT_EQ(specialize(z, Var::v, -1), parse_poly("s(s-1)w^2 + 2s(q-s)w + (q-s)(q-s-1)"));
  EXPECT_EQ(substitute(z, Substitution()), z);
}

TEST(Poly, SubstituteRationalNeedsIntegerResult) {
  const auto p = parse_poly("2q + s");
  EXPECT_EQ(substitute(p, Substitution().bind(Var::q, mpq_class(1, 2))), parse_poly("1 + s"));
  try {
    substitute(p, Substitution().bind(Var::s, mpq_class(1, 3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIntegerResult);
  }
}

TEST(Poly, RebaseT) {
  EXPECT_EQ(rebase_t(t()), TPoly::variable(1));
  const auto z = parse_poly("s(s+v)w^2 + 2s(q-s)w + (q-s)(q-s+v)");
  EXPECT_EQ(rebase_t(z), parse_tpoly("q^2 + (2t+v)q + t(t + v(w+1))"));
  EXPECT_EQ(from_t_basis(rebase_t(z)), z);
  try {
    rebase_t(s());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotExpressible);
  }
}

TEST(Poly, Eval) {
  EXPECT_NEAR(std::abs(eval(q() + t(), {3, 1, 0, 0}) - 2.0), 0.0, 1e-15);
  EXPECT_EQ(eval_exact(q() * q() - s(), {mpq_class(1, 2), 1, 0, 0}), mpq_class(-3, 4));
}

TEST(Poly, ExactDivision) {
  const auto f = s() * (q() - s());
  const auto g = parse_poly("q^2 + v w + 1");
  EXPECT_EQ(*divide_exact(f * g, f), g);
  EXPECT_FALSE(divide_exact(g, s()).has_value());
  EXPECT_THROW(divide_exact(g, MultiPoly()), Error);
  EXPECT_EQ(content(parse_poly("6q + 4s")), 2);
}

TEST(Poly, ReflectS) { EXPECT_EQ(reflect_s(parse_poly("s w + (q-s)")), parse_poly("(q-s)w + s")); }

TEST(Poly, RationalExprNormalizes) {
  RationalExpr r(parse_poly("4q"), parse_poly("-2s"));
  EXPECT_EQ(r.numerator(), parse_poly("-2q"));
  EXPECT_EQ(r.denominator(), parse_poly("s"));
  EXPECT_TRUE(r.equivalent(RationalExpr(parse_poly("-2q s"), parse_poly("s^2"))));
  EXPECT_THROW(RationalExpr(q(), MultiPoly()), Error);
}
