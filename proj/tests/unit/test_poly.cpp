#include <gtest/gtest.h>

#include <random>

#include "inscribed/errors.hpp"
#include "inscribed/poly.hpp"

using namespace inscribed;

namespace {

Polynomial random_poly(std::mt19937& rng, int degree, int magnitude) {
  std::vector<mpz_class> c;
  for (int i = 0; i <= degree; ++i) {
    c.emplace_back(static_cast<long>(rng() % static_cast<unsigned>(2 * magnitude + 1)) - magnitude);
  }
  return Polynomial(std::move(c));
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  const Polynomial a{1, 2};
  const Polynomial b{-1, 0, 3};
  EXPECT_EQ(a * b, (Polynomial{-1, -2, 3, 6}));
  EXPECT_EQ(a + b, (Polynomial{0, 2, 3}));
  EXPECT_EQ(a - a, Polynomial{});
  EXPECT_EQ(Polynomial{}.degree(), -1);
  EXPECT_EQ(a.shifted(2), (Polynomial{0, 0, 1, 2}));
  EXPECT_EQ(b.truncated(2), (Polynomial{-1}));
  EXPECT_EQ(evaluate(b, 2), 11);
  EXPECT_EQ(to_string(Polynomial{1, -2, 3}), "1 - 2*x + 3*x^2");
  EXPECT_EQ(to_string(Polynomial{}), "0");
}

TEST(Polynomial, ContentAndPrimitivePart) {
  const Polynomial p{6, -4, -2};
  EXPECT_EQ(content(p), 2);
  EXPECT_EQ(primitive_part(p), (Polynomial{-3, 2, 1}));
}

TEST(Polynomial, ExactQuotient) {
  const Polynomial a{1, 2};
  const Polynomial b{-1, 0, 3};
  EXPECT_EQ(exact_quotient(a * b, b), a);
  EXPECT_THROW(exact_quotient(b, a), InvalidArgument);
  Polynomial q;
  Polynomial r;
  EXPECT_TRUE(divide_over_integers(Polynomial{1, 0, 1}, Polynomial{1, 1}, q, r));
  EXPECT_EQ(q * (Polynomial{1, 1}) + r, (Polynomial{1, 0, 1}));
  EXPECT_LT(r.degree(), 1);
}

TEST(Polynomial, GcdOfConstructedProducts) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial g = primitive_part(random_poly(rng, static_cast<int>(rng() % 6), 9));
    const Polynomial a = random_poly(rng, static_cast<int>(rng() % 8), 30);
    const Polynomial b = random_poly(rng, static_cast<int>(rng() % 8), 30);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    const Polynomial d = gcd(a * g, b * g);
    // d is a multiple of g and divides both products.
    EXPECT_NO_THROW(exact_quotient(d, g)) << to_string(d) << " / " << to_string(g);
    EXPECT_NO_THROW(exact_quotient(a * g, d));
    EXPECT_NO_THROW(exact_quotient(b * g, d));
    EXPECT_GT(d.leading(), 0);
    // The cofactors are coprime.
    const Polynomial ca = exact_quotient(a * g, d);
    const Polynomial cb = exact_quotient(b * g, d);
    EXPECT_EQ(gcd(primitive_part(ca), primitive_part(cb)).degree(), 0);
  }
}

TEST(Polynomial, GcdEdgeCases) {
  EXPECT_EQ(gcd(Polynomial{}, Polynomial{}), Polynomial{});
  EXPECT_EQ(gcd(Polynomial{0, 2}, Polynomial{}), (Polynomial{0, 2}));
  EXPECT_EQ(gcd(Polynomial{4, 6}, Polynomial{6, 9}), (Polynomial{2, 3}));
  EXPECT_EQ(gcd(Polynomial{2, 4}, Polynomial{3}), Polynomial{1});
  // Large coefficients push the evaluation point up.
  const Polynomial big{mpz_class("123456789012345678901234567890"), 1};
  const Polynomial other{mpz_class("-98765432109876543210"), 7, 1};
  EXPECT_EQ(gcd(big * other, big * Polynomial{3, 1}), big);
}

TEST(Bivariate, EvaluateInner) {
  const BivariatePolynomial p{Polynomial{1}, Polynomial{0, 0, 1}, Polynomial{0, 0, 0, 4, 1}};
  EXPECT_EQ(evaluate_inner(p, 1), (Polynomial{1, 1, 5}));
  EXPECT_EQ(to_string(p), "(1) + (q^2)*x + (4*q^3 + q^4)*x^2");
}
