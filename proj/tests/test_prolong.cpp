#include <gtest/gtest.h>

#include <random>

#include "prolong/monomial_comb.hpp"
#include "prolong/phylo.hpp"
#include "prolong/prolong.hpp"
#include "test_util.hpp"

using namespace prolong;
using testutil::random_instance;

namespace {

FormSpace space(const VarSet& v, unsigned d, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, v));
  return make_formspace(v, d, ps);
}

std::vector<std::string> basis_strings(const FormSpace& A) {
  std::vector<std::string> out;
  for (const auto& b : A.basis()) out.push_back(b.to_string());
  return out;
}

const Strategy kStrategies[] = {Strategy::derivative, Strategy::catalecticant, Strategy::tensor};

}  // namespace

TEST(MakeFormSpace, DependentInputs) {
  VarSet v = numbered_vars("x", 2);
  auto A = space(v, 2, {"x1^2", "2*x1^2"});
  EXPECT_EQ(basis_strings(A), std::vector<std::string>{"x1^2"});
}

TEST(MakeFormSpace, Empty) {
  VarSet v = numbered_vars("x", 2);
  EXPECT_EQ(make_formspace(v, 2, {}).dimension(), 0u);
}

TEST(MakeFormSpace, QuartetQuadrics) {
  VarSet q = fourier_vars(4);
  auto A = space(q, 2, {"q0000*q1111 - q0011*q1100", "q0101*q1010 - q0110*q1001"});
  EXPECT_EQ(A.dimension(), 2u);
}

TEST(MakeFormSpace, CanonicalRref) {
  VarSet v = numbered_vars("x", 3);
  auto A = space(v, 2, {"x1^2 + x2^2 + x3^2", "x1^2 - x2^2", "3*x2^2 + x1*x2"});
  auto B = space(v, 2, {"2*x1^2 + x3^2", "x1^2 - x2^2", "x1^2 + x1*x2 + 2*x2^2"});
  EXPECT_EQ(A, B);
  for (const auto& b : A.basis()) EXPECT_EQ(b.leading_coefficient(), 1);
  EXPECT_EQ(make_formspace(v, 2, A.basis()), A);
}

TEST(MakeFormSpace, Errors) {
  VarSet v = numbered_vars("x", 2);
  EXPECT_THROW(space(v, 2, {"x1^2 + x2"}), std::invalid_argument);
  EXPECT_THROW(space(v, 3, {"x1^2"}), std::invalid_argument);
  EXPECT_NO_THROW(space(v, 2, {"x1 - x1", "x2^2"}));
}

TEST(Intersect, Examples) {
  VarSet v({"x", "y"});
  auto A = space(v, 2, {"x^2", "x*y"}), B = space(v, 2, {"x*y", "y^2"});
  EXPECT_EQ(intersect(A, A), A);
  EXPECT_EQ(intersect(A, FormSpace(v, 2)), FormSpace(v, 2));
  EXPECT_EQ(intersect(A, B), space(v, 2, {"x*y"}));
  EXPECT_THROW(intersect(A, FormSpace(v, 3)), std::invalid_argument);
}

TEST(IdealPiece, Examples) {
  VarSet v({"x", "y"});
  auto A = space(v, 2, {"x^2"});
  EXPECT_EQ(ideal_graded_piece(A, 0), A);
  EXPECT_EQ(ideal_graded_piece(A, 1), space(v, 3, {"x^3", "x^2*y"}));
}

TEST(IdealPiece, QuartetRankOracle) {
  auto T = testutil::load_tree_file("quartet.txt");
  auto A = phylo_quadrics(T);
  auto I3 = ideal_graded_piece(A, 1);
  // Oracle: rank of the 16 products m * g by direct dependency search.
  std::vector<Polynomial> prods;
  for (const auto& m : monomials_of_degree(A.vars().size(), 1))
    for (const auto& g : A.basis()) prods.push_back(g * m);
  std::size_t rank = 0;
  std::vector<Polynomial> kept;
  for (const auto& p : prods)
    if (!in_span(p, kept)) {
      kept.push_back(p);
      ++rank;
    }
  EXPECT_LE(I3.dimension(), 16u);
  EXPECT_EQ(I3.dimension(), rank);
  // Both quadrics are binomials with disjoint variables, so all 16 products are independent.
  EXPECT_EQ(rank, 16u);
}

TEST(Prolong, ExampleThreeSeven) {
  VarSet v = numbered_vars("x", 4);
  auto A = space(v, 2, {"x1^2", "x1*x2", "x2*x3", "x2*x4", "x3*x4"});
  for (Strategy s : kStrategies)
    for (bool prune : {true, false}) {
      auto B = prolong::prolong(A, 1, {s, 200000, prune});
      EXPECT_EQ(basis_strings(B), (std::vector<std::string>{"x1^3", "x1^2*x2", "x2*x3*x4"})) << to_string(s);
    }
}

TEST(Prolong, FullLinearSpace) {
  for (std::size_t n = 1; n <= 4; ++n) {
    VarSet v = numbered_vars("x", n);
    std::vector<Polynomial> lin;
    for (std::size_t i = 0; i < n; ++i) lin.push_back(Polynomial::from_monomial(v, Monomial::variable(n, i)));
    auto A = make_formspace(v, 1, lin);
    for (unsigned r = 1; r <= 2; ++r)
      for (Strategy s : kStrategies) {
        auto B = prolong::prolong(A, r, {s});
        EXPECT_EQ(Integer(static_cast<unsigned long>(B.dimension())), binomial(n + r, r + 1));
      }
  }
}

TEST(Prolong, SegreThreeByThree) {
  VarSet v = testutil::matrix_vars(3, 3);
  auto A = make_formspace(v, 2, testutil::all_minors(v, 3, 3, 2));
  ASSERT_EQ(A.dimension(), 9u);
  auto det = make_formspace(v, 3, testutil::all_minors(v, 3, 3, 3));
  for (Strategy s : kStrategies) EXPECT_EQ(prolong::prolong(A, 1, {s}), det);
}

TEST(Prolong, Errors) {
  VarSet v = numbered_vars("x", 2);
  auto A = space(v, 2, {"x1^2"});
  EXPECT_THROW(prolong::prolong(A, 0), std::invalid_argument);
  EXPECT_THROW(prolong::prolong(FormSpace(VarSet{}, 2), 1), std::invalid_argument);
  EXPECT_THROW(prolong::prolong(A, 3, {Strategy::derivative, 3}), CapExceeded);
}

TEST(Prolong, ZeroSpace) {
  VarSet v = numbered_vars("x", 3);
  for (Strategy s : kStrategies) EXPECT_TRUE(prolong::prolong(FormSpace(v, 2), 2, {s}).is_zero());
}

TEST(Catalecticant, SystemShape) {
  VarSet v = numbered_vars("x", 2);
  auto A = space(v, 1, {"x1"});
  auto unknowns = monomials_of_degree(2, 2);
  auto sys = build_catalecticant_system(A, 1, unknowns);
  EXPECT_EQ(sys.betas.size(), 2u);
  EXPECT_EQ(sys.rows.size(), 2u);  // x1, x2
  // Row x2, beta = x1: coefficient of x2 in dF/dx1 is c_{x1 x2}.
  ASSERT_EQ(sys.rows[1], Monomial::variable(2, 1));
  EXPECT_EQ(sys.c_part[1].at(0 * 3 + 1), 1);
  // Row x1, beta = x1: coefficient of x1 in dF/dx1 is 2 c_{x1^2}.
  EXPECT_EQ(sys.c_part[0].at(0 * 3 + 0), 2);
  // x2 is not in A: dF/dx_j has no x2 term, i.e. c_{x1x2} = 0 and c_{x2^2} = 0.
  auto eqs = sys.consistency_equations();
  linalg::EchelonBasis<Rational> eb;
  for (const auto& e : eqs) eb.insert(e);
  EXPECT_EQ(eb.rank(), 2u);
}

TEST(DiffPower, Examples) {
  VarSet v = numbered_vars("x", 4);
  auto A = space(v, 2, {"x1^2", "x1*x2", "x2*x3", "x2*x4", "x3*x4"});
  auto B = prolong::prolong(A, 1);
  for (const auto& f : B.basis()) EXPECT_TRUE(differential_power_member(f, A, 1));
  auto A2 = space(v, 2, {"x1*x2", "x3*x4"});
  EXPECT_FALSE(differential_power_member(parse_polynomial("x1^3", v), A2, 1));
  EXPECT_THROW(differential_power_member(parse_polynomial("x1^2", v), A2, 1), std::invalid_argument);
}

TEST(DiffPower, SnowflakeQuartic) {
  auto T = testutil::load_tree_file("snowflake.txt");
  auto A = phylo_quadrics(T);
  auto Q = prolong::prolong(A, 2);
  ASSERT_EQ(Q.dimension(), 1u);
  EXPECT_EQ(Q.basis()[0].size(), 64u);
  EXPECT_TRUE(differential_power_member(Q.basis()[0], A, 2));
  EXPECT_TRUE(derivatives_in(Q.basis()[0], A, 2));
}

// ---- randomized properties ----

class ProlongProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{977};
};

TEST_F(ProlongProperty, StrategiesAgree) {
  for (int it = 0; it < 120; ++it) {
    auto [A, r] = random_instance(rng);
    auto ref = prolong::prolong(A, r, {Strategy::derivative});
    EXPECT_EQ(prolong::prolong(A, r, {Strategy::catalecticant}), ref);
    EXPECT_EQ(prolong::prolong(A, r, {Strategy::tensor}), ref);
    EXPECT_EQ(prolong::prolong(A, r, {Strategy::derivative, 200000, false}), ref);
  }
}

TEST_F(ProlongProperty, IteratedProlongation) {
  for (int it = 0; it < 100; ++it) {
    auto [A, r] = random_instance(rng);
    FormSpace step = A;
    for (unsigned k = 0; k < r; ++k) step = prolong::prolong(step, 1);
    EXPECT_EQ(step, prolong::prolong(A, r));
  }
}

TEST_F(ProlongProperty, DefinitionClosure) {
  for (int it = 0; it < 100; ++it) {
    auto [A, r] = random_instance(rng);
    auto P = prolong::prolong(A, r);
    for (const auto& f : P.basis()) EXPECT_TRUE(derivatives_in(f, A, r));
  }
}

TEST_F(ProlongProperty, Monotone) {
  for (int it = 0; it < 100; ++it) {
    auto [A, r] = random_instance(rng);
    // B = A + extra generators of the same degree.
    std::vector<Polynomial> gens = A.basis();
    for (const auto& m : monomials_of_degree(A.vars().size(), A.degree()))
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) gens.push_back(Polynomial::from_monomial(A.vars(), m));
    auto B = make_formspace(A.vars(), A.degree(), gens);
    ASSERT_TRUE(B.contains(A));
    EXPECT_TRUE(prolong::prolong(B, r).contains(prolong::prolong(A, r)));
  }
}

TEST_F(ProlongProperty, DifferentialPowerIff) {
  for (int it = 0; it < 100; ++it) {
    auto [A, r] = random_instance(rng);
    auto P = prolong::prolong(A, r);
    for (const auto& f : P.basis()) EXPECT_TRUE(differential_power_member(f, A, r));
    // Random forms outside P must fail; random forms inside must pass.
    for (int k = 0; k < 3; ++k) {
      auto g = testutil::random_poly(rng, A.vars(), A.degree() + r, 4);
      EXPECT_EQ(differential_power_member(g, A, r), P.contains(g));
    }
    if (!P.is_zero()) {
      Polynomial combo = P.basis()[0] * Rational(3);
      if (P.dimension() > 1) combo -= P.basis()[1];
      EXPECT_TRUE(differential_power_member(combo, A, r));
    }
  }
}

TEST_F(ProlongProperty, MakeFormSpaceIdempotent) {
  for (int it = 0; it < 100; ++it) {
    auto [A, r] = random_instance(rng);
    (void)r;
    EXPECT_EQ(make_formspace(A.vars(), A.degree(), A.basis()), A);
    std::vector<Polynomial> mixed;
    for (std::size_t i = 0; i < A.dimension(); ++i) {
      Polynomial p = A.basis()[i];
      if (i + 1 < A.dimension()) p += A.basis()[i + 1] * Rational(2, 3);
      mixed.push_back(p);
    }
    EXPECT_EQ(make_formspace(A.vars(), A.degree(), mixed), A);
  }
}
