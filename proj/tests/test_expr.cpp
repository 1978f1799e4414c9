#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "wgalg/error.hpp"
#include "wgalg/expr.hpp"

using namespace wgalg;

TEST(Expr, Scalars) {
  const Field F = FieldSpec::get(5);
  EXPECT_EQ(parse_scalar("3/6", F), FieldElement(F, Rational(1, 2)));
  EXPECT_EQ(parse_scalar("theta^2 - theta - 1", F), FieldElement::zero(F));
  EXPECT_EQ(parse_laurent("v^-1 * v", F), LaurentPoly(FieldElement::one(F)));
  EXPECT_EQ(parse_laurent("-(v - v^-1)", F).to_string(), "-v + v^-1");
  EXPECT_THROW(parse_scalar("v", F), ParseError);
  EXPECT_THROW(parse_scalar("1/0", F), ParseError);
  EXPECT_THROW(parse_scalar("theta^-1", F), ParseError);
}

TEST(Expr, ErrorPositions) {
  auto W = system_of("A2");
  Quiver Q(W);
  ExprContext ctx{&Q};
  try {
    parse_omega("E{s1} + E{s9}", ctx);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
  EXPECT_THROW(parse_omega("E{s1} +", ctx), ParseError);
  EXPECT_THROW(parse_omega("X{s1}->{s1}", ctx), ParseError);
  EXPECT_THROW(parse_omega("X{s1}->{}^s2", ctx), ParseError);
  EXPECT_THROW(parse_omega("F{sign}", ctx), ParseError);
  EXPECT_THROW(parse_omega("T_s1", ctx), ParseError);  // depends on v
}

TEST(Expr, Generators) {
  auto W = system_of("A1");
  Quiver Q(W);
  ExprContext ctx{&Q};
  EXPECT_EQ(parse_omega("e_s1", ctx), OmegaElement::vertex(1));
  EXPECT_EQ(parse_omega("1 - e_s1", ctx), OmegaElement::vertex(0));
  EXPECT_EQ(parse_omega("x_s1", ctx), OmegaElement::arrow(1, 0, 0));
  EXPECT_TRUE(parse_omega("x_s1 * x_s1", ctx).is_zero());
  EXPECT_TRUE(parse_omega("x_s1 * e_s1", ctx).is_zero());
  EXPECT_EQ(parse_omega("e_s1 * x_s1", ctx), parse_omega("x_s1", ctx));
  const LaurentOmega T = parse_omega_laurent("T_s1*T_s1 - 1 - (v - v^-1)*T_s1", ctx);
  EXPECT_TRUE(T.empty());
}

TEST(Expr, UnletteredEdgeTakesSmallestLetter) {
  auto W = system_of("A2");
  Quiver Q(W);
  ExprContext ctx{&Q};
  EXPECT_EQ(parse_omega("X{s1,s2}->{}", ctx), OmegaElement::arrow(3, 0, 0));
  // Not an edge of the quiver: parses to zero.
  auto W2 = system_of("A1xA1");
  Quiver Q2(W2);
  EXPECT_TRUE(parse_omega("X{s1}->{t1}", ExprContext{&Q2}).is_zero());
}

TEST(Expr, FreeAlgebraMatchesOmega) {
  auto W = system_of("A2");
  Quiver Q(W);
  for (const char* text : {"X{s1,s2}->{s1}^s2 * X{s1}->{}", "E{s2} * x_s2 * E{s1}", "e_s1*x_s2 - 2*x_s1"}) {
    EXPECT_EQ(expand_to_paths(parse_free(text, *W), Q), parse_omega(text, ExprContext{&Q})) << text;
  }
}

TEST(Property, RoundTrip) {
  std::mt19937 rng(11);
  int cases = 0;
  for (const char* name : {"A2", "I2(5)", "A1xA1", "B3"}) {
    auto W = system_of(name);
    Quiver Q(W);
    const Field F = W->field();
    ExprContext ctx{&Q};
    for (int k = 0; k < 130; ++k) {
      OmegaElement e;
      const int terms = std::uniform_int_distribution<int>(0, 4)(rng);
      for (int j = 0; j < terms; ++j) {
        Path p = Path::vertex(std::uniform_int_distribution<Subset>(0, W->full())(rng));
        const int len = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int l = 0; l < len; ++l) {
          const auto out = Q.arrows_from(p.end());
          if (out.empty()) break;
          const Arrow& a = Q.arrow(out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)]);
          p = concat(p, Path::arrow(a.source, a.target, a.letter));
        }
        std::vector<Rational> c(F->degree());
        for (auto& q : c) q = Rational(std::uniform_int_distribution<int>(-7, 7)(rng),
                                       std::uniform_int_distribution<int>(1, 4)(rng));
        for (auto& q : c) q.canonicalize();
        e.add(p, FieldElement(F, c));
      }
      const std::string text = e.to_string(*W);
      EXPECT_EQ(parse_omega(text, ctx), e) << text;
      ++cases;
    }
  }
  EXPECT_GE(cases, 500);
}
