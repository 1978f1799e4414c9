#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wgalg/error.hpp"
#include "wgalg/linalg.hpp"
#include "wgalg/scalar.hpp"

using namespace wgalg;

namespace {

// Minimal polynomial of 2cos(pi/L) recomputed numerically as the product of
// (x - 2cos(pi k/L)) over k coprime to 2L, then rounded.
std::vector<long> numeric_minpoly(int L) {
  std::vector<double> poly{1.0};
  for (int k = 1; k < 2 * L; ++k) {
    if (std::gcd(k, 2 * L) != 1 || k > L) continue;
    const double root = 2 * std::cos(std::numbers::pi * k / L);
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = next;
  }
  std::vector<long> out;
  for (double c : poly) out.push_back(std::lround(c));
  return out;
}

FieldElement random_element(const Field& K, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c;
  for (int i = 0; i < K->degree(); ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return FieldElement(K, c);
}

}  // namespace

TEST(Field, MinimalPolynomialOfGoldenRatioField) {
  const auto K = FieldSpec::get(5);
  const std::vector<Integer> expected{-1, -1, 1};
  EXPECT_EQ(K->minimal_polynomial(), expected);
  EXPECT_EQ(K->degree(), 2);
}

TEST(Field, MinimalPolynomialsMatchNumericProduct) {
  for (int L = 1; L <= 40; ++L) {
    const auto mp = theta_minimal_polynomial(L);
    const auto expected = numeric_minpoly(L);
    ASSERT_EQ(mp.size(), expected.size()) << "L=" << L;
    for (std::size_t i = 0; i < mp.size(); ++i) {
      EXPECT_EQ(mp[i], Integer(expected[i])) << "L=" << L << " i=" << i;
    }
  }
}

TEST(Field, SmallConductors) {
  EXPECT_EQ(FieldSpec::get(1)->degree(), 1);
  EXPECT_EQ(FieldSpec::get(2)->degree(), 1);
  EXPECT_EQ(FieldSpec::get(3)->degree(), 1);
  EXPECT_EQ(FieldSpec::get(4)->degree(), 2);
  EXPECT_EQ(FieldSpec::get(6)->degree(), 2);
  // theta = 2cos(pi/3) = 1 is rational.
  EXPECT_TRUE(FieldElement::theta(FieldSpec::get(3)).is_one());
}

TEST(Field, MakeFieldUsesLcm) {
  const std::vector<int> orders{3, 4};
  EXPECT_EQ(make_field(orders)->conductor(), 12);
  const std::vector<int> none;
  EXPECT_EQ(make_field(none)->conductor(), 1);
  const std::vector<int> bad{1};
  EXPECT_THROW(make_field(bad), UnsupportedOrderError);
}

TEST(Field, TwoCosValues) {
  const auto K = FieldSpec::get(12);
  for (int m : {1, 2, 3, 4, 6, 12}) {
    for (int j = 0; j <= 2 * m; ++j) {
      const auto x = FieldElement::two_cos(K, j, m);
      EXPECT_NEAR(x.to_double(), 2 * std::cos(std::numbers::pi * j / m), 1e-9);
    }
  }
  EXPECT_THROW(FieldElement::two_cos(K, 1, 5), UnsupportedOrderError);
}

TEST(Field, GoldenRatioIdentity) {
  const auto K = FieldSpec::get(5);
  const auto t = FieldElement::theta(K);
  EXPECT_EQ(t * t, t + FieldElement(1));
  EXPECT_EQ((t * t).to_string(), "(1 + theta)");
}

TEST(Field, RandomizedFieldAxioms) {
  std::mt19937 rng(20240601);
  for (int L : {3, 4, 5, 7, 8, 9, 12}) {
    const auto K = FieldSpec::get(L);
    const double th = 2 * std::cos(std::numbers::pi / L);
    for (int trial = 0; trial < 150; ++trial) {
      const auto a = random_element(K, rng);
      const auto b = random_element(K, rng);
      const auto c = random_element(K, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      // The coordinate embedding is a ring homomorphism into the reals.
      auto embed = [&](const FieldElement& x) {
        double v = 0, p = 1;
        for (const auto& q : x.coords()) {
          v += q.get_d() * p;
          p *= th;
        }
        return v;
      };
      EXPECT_NEAR(embed(a * b), embed(a) * embed(b), 1e-7);
      EXPECT_NEAR((a * b).to_double(), a.to_double() * b.to_double(), 1e-7);
    }
  }
}

TEST(Field, MismatchedFieldsThrow) {
  const auto a = FieldElement::theta(FieldSpec::get(5));
  const auto b = FieldElement::theta(FieldSpec::get(4));
  EXPECT_THROW(a + b, IncompatibleFieldError);
  EXPECT_THROW(FieldElement::zero(FieldSpec::get(5)).inverse(), std::domain_error);
}

TEST(Field, UnattachedRationalsEmbed) {
  const auto K = FieldSpec::get(5);
  const auto t = FieldElement::theta(K);
  FieldElement half(Rational(1, 2));
  EXPECT_EQ((t + half).field()->conductor(), 5);
  EXPECT_EQ((half * FieldElement(2)), FieldElement(1));
  EXPECT_EQ(FieldElement(Rational(3, 2)).to_string(), "3/2");
  EXPECT_EQ(FieldElement(K, Rational(-1)).to_string(), "-1");
}

TEST(Laurent, ThetaVSquared) {
  const auto K = FieldSpec::get(5);
  const auto t = FieldElement::theta(K);
  const LaurentPoly x(t, 1);
  const LaurentPoly expected(t + FieldElement(1), 2);
  EXPECT_EQ(x * x, expected);
}

TEST(Laurent, ArithmeticAndPrinting) {
  const LaurentPoly v = LaurentPoly::v();
  const LaurentPoly vi = LaurentPoly::v(-1);
  const LaurentPoly d = v - vi;
  EXPECT_EQ((d * d).to_string(), "v^2 - 2 + v^-2");
  EXPECT_TRUE((v * vi - LaurentPoly(1)).is_zero());
  EXPECT_EQ(laurent_arith(v, vi, LaurentOp::kMul), LaurentPoly(1));
  EXPECT_EQ(*(d * d).min_exponent(), -2);
  EXPECT_EQ(*(d * d).max_exponent(), 2);
  const auto a = LaurentPoly(FieldElement::theta(FieldSpec::get(5)));
  const auto b = LaurentPoly(FieldElement::theta(FieldSpec::get(4)));
  EXPECT_THROW(laurent_arith(a, b, LaurentOp::kAdd), IncompatibleFieldError);
}

TEST(Linalg, SpanBasisSolve) {
  const auto K = FieldSpec::get(5);
  const auto t = FieldElement::theta(K);
  SpanBasis b(3);
  EXPECT_TRUE(b.insert({FieldElement(1), t, FieldElement(0)}));
  EXPECT_TRUE(b.insert({FieldElement(0), FieldElement(1), t}));
  EXPECT_FALSE(b.insert({FieldElement(2), t * FieldElement(2) + FieldElement(3),
                         t * FieldElement(3)}));
  const auto coeffs = b.solve({FieldElement(1), t + FieldElement(1), t});
  ASSERT_TRUE(coeffs.has_value());
  EXPECT_TRUE((*coeffs)[0].is_one());
  EXPECT_TRUE((*coeffs)[1].is_one());
  EXPECT_FALSE(b.contains({FieldElement(0), FieldElement(0), FieldElement(1)}));
  EXPECT_EQ(b.rank(), 2u);
}
