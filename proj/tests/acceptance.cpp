// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "prolong/monomial_comb.hpp"
#include "prolong/polarize.hpp"
#include "prolong/prolong.hpp"
#include "test_util.hpp"

using namespace prolong;
using testutil::load_tree_file;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <class A, class B>
void require_eq(const A& a, const B& b, const std::string& what) {
  if (!(a == b)) {
    std::ostringstream os;
    os << what << ": got " << a << ", expected " << b;
    throw Failure{os.str()};
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> basis_strings(const FormSpace& A) {
  std::vector<std::string> out;
  for (const auto& b : A.basis()) out.push_back(b.to_string());
  return out;
}

const Strategy kStrategies[] = {Strategy::derivative, Strategy::catalecticant, Strategy::tensor};

Polynomial det_of(const VarSet& q, const std::vector<std::vector<std::size_t>>& M) {
  std::vector<std::size_t> p(M.size());
  std::iota(p.begin(), p.end(), 0);
  Polynomial det(q);
  do {
    int sign = 1;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b)
        if (p[a] > p[b]) sign = -sign;
    Polynomial term = Polynomial::from_monomial(q, Monomial(q.size()), Rational(sign));
    for (std::size_t i = 0; i < M.size(); ++i)
      term = term * Polynomial::from_monomial(q, Monomial::variable(q.size(), M[i][p[i]]));
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

std::string criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  VarSet v = numbered_vars("x", 4);
  std::vector<Polynomial> gens;
  for (const char* s : {"x1^2", "x1*x2", "x2*x3", "x2*x4", "x3*x4"}) gens.push_back(parse_polynomial(s, v));
  auto A = make_formspace(v, 2, gens);
  const std::vector<std::string> expected{"x1^3", "x1^2*x2", "x2*x3*x4"};
  for (Strategy s : kStrategies) require(basis_strings(prolong::prolong(A, 1, {s})) == expected, std::string(to_string(s)));
  auto cl = clique_prolong(build_blowup_graph(monomial_support(A), 1));
  require(cl.to_formspace() == make_formspace(v, 3, [&] {
            std::vector<Polynomial> p;
            for (const auto& s : expected) p.push_back(parse_polynomial(s, v));
            return p;
          }()),
          "clique path");
  double t = seconds_since(t0);
  require(t < 1.0, "runtime " + std::to_string(t) + " s");
  return "dim 3, basis {x1^3, x1^2*x2, x2*x3*x4} by 3 strategies and cliques, " + std::to_string(t) + " s";
}

std::string criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  auto A = phylo_quadrics(load_tree_file("snowflake.txt"));
  auto P1 = prolong::prolong(A, 1);
  require_eq(P1.dimension(), 32u, "dim A^(1)");
  auto dec = circuits_and_decomposition(P1);
  require_eq(dec.blocks.size(), 32u, "blocks");
  for (std::size_t k = 0; k < dec.blocks.size(); ++k) {
    require_eq(dec.blocks[k].size(), 8u, "block monomials");
    require_eq(dec.spaces[k].dimension(), 1u, "block dimension");
  }
  auto P2 = prolong::prolong(A, 2);
  require_eq(P2.dimension(), 1u, "dim A^(2)");
  require_eq(P2.basis()[0].size(), 64u, "quartic terms");
  return "dim A^(1) = 32 in 32 blocks of 8, dim A^(2) = 1 with 64 terms, " + std::to_string(seconds_since(t0)) + " s";
}

std::string criterion3() {
  auto T = load_tree_file("caterpillar.txt");
  auto A = phylo_quadrics(T);
  auto P1 = prolong::prolong(A, 1);
  require_eq(P1.dimension(), 32u, "dim A^(1)");
  auto d1 = circuits_and_decomposition(P1);
  require_eq(d1.blocks.size(), 32u, "cubic blocks");
  for (const auto& b : d1.blocks) require_eq(b.size(), 6u, "cubic block monomials");
  auto P2 = prolong::prolong(A, 2);
  require_eq(P2.dimension(), 2u, "dim A^(2)");
  auto d2 = circuits_and_decomposition(P2);
  require_eq(d2.blocks.size(), 2u, "quartic blocks");
  auto sm = split_matrices(T, *T.edge_id(8, 9));
  std::vector<Polynomial> dets{det_of(A.vars(), sm.M[0]), det_of(A.vars(), sm.M[1])};
  for (const auto& s : d2.spaces) {
    require_eq(s.dimension(), 1u, "quartic block dimension");
    require_eq(s.basis()[0].size(), 24u, "quartic terms");
    require(proportional(s.basis()[0], dets[0]) || proportional(s.basis()[0], dets[1]),
            "quartic block is not a middle-edge determinant");
  }
  require(!proportional(dets[0], dets[1]), "determinants coincide");
  return "dim A^(1) = 32 in 6-term blocks, dim A^(2) = 2 equal to the two 4x4 middle-edge determinants";
}

std::string criterion4() {
  VarSet v33 = testutil::matrix_vars(3, 3);
  auto m2 = testutil::all_minors(v33, 3, 3, 2);
  auto A = make_formspace(v33, 2, m2);
  require_eq(A.dimension(), m2.size(), "3x3 quadrics");
  auto B = prolong::prolong(A, 1);
  require_eq(B.dimension(), 1u, "3x3 prolongation");
  require(B == make_formspace(v33, 3, testutil::all_minors(v33, 3, 3, 3)), "determinant span");
  VarSet v34 = testutil::matrix_vars(3, 4);
  auto m34 = testutil::all_minors(v34, 3, 4, 3);
  auto C = prolong::prolong(make_formspace(v34, 2, testutil::all_minors(v34, 3, 4, 2)), 1);
  require_eq(C.dimension(), m34.size(), "3x4 prolongation");
  require(C == make_formspace(v34, 3, m34), "3x4 minors span");
  return "3x3: dim 1 = det span; 3x4: dim " + std::to_string(m34.size()) + " = span of the 3x3 minors";
}

std::string criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  for (auto [l, m, n] : {std::tuple<int, int, int>{2, 2, 2}, {2, 2, 3}, {2, 3, 3}}) {
    auto A = no_three_way_quartics(l, m, n);
    std::string tag = std::to_string(l) + std::to_string(m) + std::to_string(n);
    require(!A.is_zero(), tag + " has no quartics");
    require_eq(monomial_prolong(monomial_support(A), 1).size(), 0u, tag + " M(A)^(1)");
    require(prolong::prolong(A, 1).is_zero(), tag + " A^(1)");
  }
  double t = seconds_since(t0);
  require(t < 10.0, "runtime " + std::to_string(t) + " s");
  return "M(A)^(1) empty and A^(1) = 0 for 222, 223, 233, " + std::to_string(t) + " s";
}

std::string criterion6() {
  std::size_t checked = 0;
  for (const char* file : {"snowflake.txt", "caterpillar.txt"}) {
    auto T = load_tree_file(file);
    auto A = phylo_quadrics(T);
    for (unsigned d = 3; d <= 4; ++d) {
      auto polys = frame_polynomials(T, d);
      require(!polys.empty(), std::string(file) + ": no frame polynomials");
      for (const auto& p : polys) {
        require(differential_power_member(p, A, d - 2), std::string(file) + ": not a member: " + p.to_string());
        for (const auto& beta : monomials_of_degree(A.vars().size(), d - 2)) {
          auto q = differentiate(p, beta);
          if (!q.is_zero()) require(A.contains(q), std::string(file) + ": derivative outside A_T");
        }
        ++checked;
      }
    }
  }
  return std::to_string(checked) + " frame polynomials are differential-power members";
}

std::string criterion7() {
  auto T = load_tree_file("snowflake.txt");
  auto A = phylo_quadrics(T);
  auto map = phylo_parametrization(T);
  auto quartic = prolong::prolong(A, 2).basis().at(0);
  auto rep = secant_vanish_check(quartic, map, 3, 50, {});
  require(rep.passed(), "quartic on the 3rd secant");
  auto cubics = prolong::prolong(A, 1);
  for (const auto& c : cubics.basis()) require(secant_vanish_check(c, map, 2, 50, {}).passed(), "cubic");
  Polynomial bad = quartic;
  auto [m0, c0] = *quartic.terms().begin();
  bad.add_term(m0, Rational(1));
  auto badrep = secant_vanish_check(bad, map, 3, 5, {});
  require(!badrep.passed() && badrep.witness && badrep.witness->trial < 5, "corrupted quartic not detected");
  return "quartic 50/50 zero at r=3, 32 cubics 50/50 at r=2, corrupted quartic witness at trial " +
         std::to_string(badrep.witness->trial);
}

std::string criterion8() {
  auto quartet = load_tree_file("quartet.txt");
  auto AT = phylo_quadrics(quartet);
  auto qmap = phylo_parametrization(quartet);
  auto segre = testutil::segre_map(3, 3);
  VarSet v33 = testutil::matrix_vars(3, 3);
  auto det = make_formspace(v33, 3, testutil::all_minors(v33, 3, 3, 3));
  for (std::uint64_t seed : {1u, 2u}) {
    auto a = interpolate_vanishing_piece(qmap, 1, 2, {seed, 97});
    require(a.stable, "quartet unstable");
    require(a.batches >= 2, "quartet single batch");
    require(a.space == AT, "quartet piece differs from A_T, seed " + std::to_string(seed));
    auto b = interpolate_vanishing_piece(segre, 2, 3, {seed, 97});
    require(b.stable && b.batches >= 2, "Segre unstable");
    require(b.space == det, "Segre piece differs from det, seed " + std::to_string(seed));
  }
  return "quartet r=1 m=2 gives A_T (dim 2), Segre 3x3 r=2 m=3 gives det, stable for seeds 1 and 2";
}

std::string criterion9() {
  std::mt19937_64 rng(977);
  int agree = 0, iterated = 0, containment = 0, circuits = 0, polar = 0, deriv = 0;
  for (int it = 0; it < 100; ++it) {
    auto [A, r] = testutil::random_instance(rng);
    auto P = prolong::prolong(A, r, {Strategy::derivative, 200000, false});
    for (Strategy s : {Strategy::catalecticant, Strategy::tensor})
      require(prolong::prolong(A, r, {s}) == P, "strategy disagreement");
    ++agree;
    require(prolong::prolong(prolong::prolong(A, 1), 1) == prolong::prolong(A, 2), "iterated prolongation");
    ++iterated;
    auto MP = monomial_prolong(monomial_support(A), r);
    auto MS = monomial_support(P);
    for (const auto& m : MS.monomials) require(MP.contains(m), "containment in M(A)^(r)");
    ++containment;
  }
  while (circuits < 100) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    unsigned d = std::uniform_int_distribution<unsigned>(1, n == 5 ? 2 : 3)(rng);
    unsigned r = std::uniform_int_distribution<unsigned>(1, 2)(rng);
    VarSet v = numbered_vars("x", n);
    auto mons = monomials_of_degree(n, d);
    std::shuffle(mons.begin(), mons.end(), rng);
    std::vector<Polynomial> gens;
    std::size_t pos = 0;
    while (pos < mons.size() && gens.size() < 6) {
      std::size_t len = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      Polynomial g(v);
      for (std::size_t k = 0; k < len && pos < mons.size(); ++k, ++pos)
        g.add_term(mons[pos], Rational(std::uniform_int_distribution<int>(1, 4)(rng)) * (k % 2 ? -1 : 1));
      gens.push_back(g);
    }
    auto A = make_formspace(v, d, gens);
    if (!circuits_and_decomposition(A).minimally_generated_by_circuits) continue;
    require(circuits_and_decomposition(prolong::prolong(A, r)).minimally_generated_by_circuits,
            "circuit preservation");
    ++circuits;
  }
  for (int it = 0; it < 100; ++it) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    unsigned d = std::uniform_int_distribution<unsigned>(1, 3)(rng);
    auto f = testutil::random_poly(rng, numbered_vars("x", n), d, 5);
    auto F = polarize(f);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) require(swap_blocks(F, a, b) == F, "polarization symmetry");
    for (const auto& [m, c] : F.poly().terms())
      for (std::size_t b = 0; b < d; ++b) require(F.block_degree(m, b) == 1, "polarization multilinearity");
    require(diagonal(F) == f * Rational(factorial(d)), "diagonal identity");
    ++polar;
  }
  for (int it = 0; it < 100; ++it) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    unsigned d = std::uniform_int_distribution<unsigned>(1, 3)(rng), r = 1 + it % 2;
    auto f = testutil::random_poly(rng, numbered_vars("x", n), d + r, 5);
    auto F = partial_polarize(f, d, r);
    for (const auto& beta : monomials_of_degree(n, r)) {
      auto lhs = differentiate(f, beta) * Rational(factorial(d) * factorial(r));
      MultiPolynomial expected(f.vars(), 2);
      for (const auto& [m, c] : lhs.terms()) expected.poly().add_term(expected.lift(m, 0), c);
      require(differentiate(F.poly(), F.lift(beta, 1)) == expected.poly(), "derivative identity");
    }
    ++deriv;
  }
  std::ostringstream os;
  os << "strategies " << agree << ", iterated " << iterated << ", containment " << containment << ", circuits "
     << circuits << ", polarization " << polar << ", derivative identity " << deriv << " instances";
  return os.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"golden cubic prolongation of five quadratic monomials", criterion1},
      {"snowflake prolongations and blocks", criterion2},
      {"caterpillar prolongations and determinants", criterion3},
      {"Segre prolongations", criterion4},
      {"no-3-way monomial prolongation is empty", criterion5},
      {"frame polynomials are differential-power members", criterion6},
      {"secant vanishing and corrupted witness", criterion7},
      {"interpolation equals the prolongation", criterion8},
      {"randomized property suites", criterion9},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::string status = "PASS", detail;
    try {
      detail = criteria[k].second();
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    if (status == "FAIL") ++failed;
    std::cout << status << " criterion " << k + 1 << ": " << criteria[k].first << " (" << detail << ")" << std::endl;
  }
  return failed ? 1 : 0;
}
