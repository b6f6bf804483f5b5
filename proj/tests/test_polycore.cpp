#include <gtest/gtest.h>

#include <random>

#include "prolong/polarize.hpp"
#include "prolong/polynomial.hpp"
#include "test_util.hpp"

using namespace prolong;

namespace {

VarSet x4() { return numbered_vars("x", 4); }

Monomial mono(std::vector<Monomial::Exponent> e) { return Monomial(std::move(e)); }

// Polarization via the t-expansion: substitute x_i -> sum_b t_b x_{i,b}
// and read off the coefficient of t_1 ... t_k. `block_of_t[b]` names the
// variable block that t_b multiplies.
Polynomial t_expansion(const Polynomial& f, std::size_t blocks, const std::vector<std::size_t>& block_of_t) {
  const std::size_t n = f.vars().size(), k = block_of_t.size();
  std::vector<std::string> names = MultiPolynomial::block_varset(f.vars(), blocks).names();
  for (std::size_t b = 0; b < k; ++b) names.push_back("t" + std::to_string(b + 1));
  VarSet big(names);
  const std::size_t N = big.size();
  std::vector<Polynomial> subst;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial s(big);
    for (std::size_t b = 0; b < k; ++b)
      s.add_term(Monomial::variable(N, block_of_t[b] * n + i) * Monomial::variable(N, n * blocks + b), 1);
    subst.push_back(s);
  }
  Polynomial total(big);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::from_monomial(big, Monomial(N), c);
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned e = 0; e < m[i]; ++e) term = term * subst[i];
    total += term;
  }
  VarSet small = MultiPolynomial::block_varset(f.vars(), blocks);
  Polynomial out(small);
  for (const auto& [m, c] : total.terms()) {
    bool all_one = true;
    for (std::size_t b = 0; b < k; ++b) all_one = all_one && m[n * blocks + b] == 1;
    if (!all_one) continue;
    std::vector<Monomial::Exponent> e(m.exponents().begin(), m.exponents().begin() + static_cast<long>(n * blocks));
    out.add_term(Monomial(e), c);
  }
  return out;
}

}  // namespace

TEST(Parse, SingleTerm) {
  auto f = parse_polynomial("x1^2*x2", x4());
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.leading_monomial(), mono({2, 1, 0, 0}));
  EXPECT_EQ(f.leading_coefficient(), 1);
}

TEST(Parse, FourierBinomial) {
  VarSet q = fourier_vars(4);
  auto f = parse_polynomial("q0000*q1111 - q0011*q1100", q);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE(f.is_homogeneous(2));
}

TEST(Parse, Cancellation) {
  auto f = parse_polynomial("x1 - x1", x4());
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.to_string(), "0");
}

TEST(Parse, CoefficientsAndConstants) {
  auto f = parse_polynomial(" -3/6*x1^2 + 2*x3*x4 - 7 ", x4());
  EXPECT_EQ(f.to_string(), "-1/2*x1^2 + 2*x3*x4 - 7");
  EXPECT_EQ(parse_polynomial("+x2", x4()).to_string(), "x2");
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_polynomial("x1 + y", x4()), ParseError);
  EXPECT_THROW(parse_polynomial("x1 +", x4()), ParseError);
  EXPECT_THROW(parse_polynomial("x1^", x4()), ParseError);
  EXPECT_THROW(parse_polynomial("2/0*x1", x4()), ParseError);
  try {
    parse_polynomial("x1*x2 ** x3", x4());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
}

TEST(Print, GrlexOrder) {
  auto f = parse_polynomial("x4 + x1*x3 + x2^2 + x1^2", x4());
  EXPECT_EQ(f.to_string(), "x1^2 + x1*x3 + x2^2 + x4");
}

TEST(Differentiate, Examples) {
  auto f = parse_polynomial("x1^2*x2", x4());
  EXPECT_EQ(differentiate(f, mono({1, 0, 0, 0})).to_string(), "2*x1*x2");
  EXPECT_EQ(differentiate(f, mono({2, 0, 0, 0})).to_string(), "2*x2");
  EXPECT_TRUE(differentiate(f, mono({0, 0, 1, 0})).is_zero());
  EXPECT_THROW(differentiate(f, mono({1, 0})), std::invalid_argument);
}

TEST(Evaluate, Examples) {
  auto f = parse_polynomial("x1^2*x2", x4());
  std::vector<Rational> p{2, 3, 5, 7};
  EXPECT_EQ(evaluate(f, p), 12);
  EXPECT_EQ(evaluate(Polynomial(x4()), p), 0);
  VarSet q({"q00", "q01", "q10", "q11"});
  auto minor = parse_polynomial("q00*q11 - q01*q10", q);
  Rational a0(2, 3), a1(5), b0(7), b1(-1, 4);
  std::vector<Rational> rank_one{a0 * b0, a0 * b1, a1 * b0, a1 * b1};
  EXPECT_EQ(evaluate(minor, rank_one), 0);
  EXPECT_THROW(evaluate(f, std::vector<Rational>{1, 2}), std::invalid_argument);
}

TEST(Polarize, ThreeVariableCubic) {
  VarSet v = numbered_vars("x", 3);
  auto F = polarize(parse_polynomial("x1^2*x2", v));
  ASSERT_EQ(F.blocks(), 3u);
  // Subscripts x_{bj}: block b, variable j; here named x<j>_<b>.
  auto expected = parse_polynomial("2*x1_1*x1_2*x2_3 + 2*x1_1*x2_2*x1_3 + 2*x2_1*x1_2*x1_3", F.poly().vars());
  EXPECT_EQ(F.poly(), expected);
}

TEST(Polarize, Linear) {
  VarSet v = numbered_vars("x", 3);
  auto F = polarize(parse_polynomial("x1", v));
  EXPECT_EQ(F.poly().to_string(), "x1_1");
}

TEST(Polarize, Diagonal) {
  VarSet v = numbered_vars("x", 3);
  auto f = parse_polynomial("x1^2*x2", v);
  EXPECT_EQ(diagonal(polarize(f)), f * Rational(6));
}

TEST(Polarize, RejectsInhomogeneous) {
  EXPECT_THROW(polarize(parse_polynomial("x1^2 + x2", x4())), std::invalid_argument);
}

TEST(PartialPolarize, CubeOneVariable) {
  VarSet v({"x"});
  auto F = partial_polarize(parse_polynomial("x^3", v), 2, 1);
  EXPECT_EQ(F.poly().to_string(), "6*x_1^2*x_2");
  // Oracle: blocks t1, t2 -> x, t3 -> y.
  EXPECT_EQ(F.poly(), t_expansion(parse_polynomial("x^3", v), 2, {0, 0, 1}));
}

TEST(PartialPolarize, DerivativeIdentityExample) {
  VarSet v = numbered_vars("x", 4);
  auto f = parse_polynomial("x1^2*x2", v);
  auto F = partial_polarize(f, 2, 1);
  Monomial y1 = F.lift(mono({1, 0, 0, 0}), 1);
  // d! r! df/dx1 with d = 2, r = 1, placed in the x block.
  auto lhs = differentiate(f, mono({1, 0, 0, 0})) * Rational(2);
  auto rhs = differentiate(F.poly(), y1);
  MultiPolynomial lifted(v, 2);
  for (const auto& [m, c] : lhs.terms()) lifted.poly().add_term(lifted.lift(m, 0), c);
  EXPECT_EQ(rhs, lifted.poly());
}

TEST(PartialPolarize, ZeroR) {
  VarSet v = numbered_vars("x", 3);
  auto f = parse_polynomial("x1^2*x2 - 3*x3^3", v);
  auto F = partial_polarize(f, 3, 0);
  MultiPolynomial expected(v, 2);
  for (const auto& [m, c] : f.terms()) expected.poly().add_term(expected.lift(m, 0), c * 6);
  EXPECT_EQ(F.poly(), expected.poly());
}

TEST(PartialPolarize, DegreeMismatch) {
  EXPECT_THROW(partial_polarize(parse_polynomial("x1^2", x4()), 2, 1), std::invalid_argument);
}

// ---- randomized properties (>= 100 instances each) ----

class PolyProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240611};
  Polynomial random_poly(std::size_t n, unsigned d) {
    auto f = testutil::random_poly(rng, numbered_vars("x", n), d, 5);
    // Cancellation can leave zero, whose degree is undefined.
    if (f.is_zero()) f.add_term(Monomial::variable(n, 0, d), 1);
    return f;
  }
  std::size_t rn() { return std::uniform_int_distribution<std::size_t>(1, 5)(rng); }
  unsigned rd() { return std::uniform_int_distribution<unsigned>(1, 3)(rng); }
};

TEST_F(PolyProperty, MixedPartialsCommute) {
  for (int it = 0; it < 150; ++it) {
    std::size_t n = rn();
    auto f = random_poly(n, rd() + 1);
    auto b1 = monomials_of_degree(n, 1 + it % 2), b2 = monomials_of_degree(n, 1);
    const auto& m1 = b1[static_cast<std::size_t>(it) % b1.size()];
    const auto& m2 = b2[static_cast<std::size_t>(it) % b2.size()];
    EXPECT_EQ(differentiate(differentiate(f, m1), m2), differentiate(f, m1 * m2));
    EXPECT_EQ(differentiate(differentiate(f, m2), m1), differentiate(f, m1 * m2));
  }
}

TEST_F(PolyProperty, PolarizationSymmetricMultilinearDiagonal) {
  for (int it = 0; it < 120; ++it) {
    std::size_t n = std::min<std::size_t>(rn(), 4);
    unsigned d = rd();
    auto f = random_poly(n, d);
    auto F = polarize(f);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) EXPECT_EQ(swap_blocks(F, a, b), F);
    for (const auto& [m, c] : F.poly().terms())
      for (std::size_t b = 0; b < d; ++b) EXPECT_EQ(F.block_degree(m, b), 1u);
    EXPECT_EQ(diagonal(F), f * Rational(factorial(d)));
  }
}

TEST_F(PolyProperty, PolarizationMatchesTExpansion) {
  for (int it = 0; it < 100; ++it) {
    std::size_t n = std::min<std::size_t>(rn(), 3);
    unsigned d = rd();
    auto f = random_poly(n, d);
    std::vector<std::size_t> blocks(d);
    std::iota(blocks.begin(), blocks.end(), 0);
    EXPECT_EQ(polarize(f).poly(), t_expansion(f, d, blocks));
  }
}

TEST_F(PolyProperty, PartialPolarizationMatchesTExpansion) {
  for (int it = 0; it < 100; ++it) {
    std::size_t n = std::min<std::size_t>(rn(), 3);
    unsigned d = rd(), r = 1 + it % 2;
    auto f = random_poly(n, d + r);
    std::vector<std::size_t> blocks(d, 0);
    blocks.insert(blocks.end(), r, 1);
    EXPECT_EQ(partial_polarize(f, d, r).poly(), t_expansion(f, 2, blocks));
  }
}

TEST_F(PolyProperty, DerivativeIdentity) {
  // d! r! d^beta f = d^beta_y F(x..x, y..y), evaluated at y = 0.
  for (int it = 0; it < 120; ++it) {
    std::size_t n = rn();
    unsigned d = rd(), r = 1 + it % 2;
    auto f = random_poly(n, d + r);
    auto F = partial_polarize(f, d, r);
    for (const auto& beta : monomials_of_degree(n, r)) {
      auto lhs = differentiate(f, beta) * Rational(factorial(d) * factorial(r));
      MultiPolynomial expected(f.vars(), 2);
      for (const auto& [m, c] : lhs.terms()) expected.poly().add_term(expected.lift(m, 0), c);
      EXPECT_EQ(differentiate(F.poly(), F.lift(beta, 1)), expected.poly());
    }
  }
}

TEST_F(PolyProperty, ParsePrintRoundTrip) {
  for (int it = 0; it < 150; ++it) {
    std::size_t n = rn();
    auto f = random_poly(n, rd()) * Rational(1 + it % 3, 1 + it % 5);
    EXPECT_EQ(parse_polynomial(f.to_string(), f.vars()), f);
  }
}
