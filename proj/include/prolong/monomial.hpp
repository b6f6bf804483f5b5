#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "prolong/rational.hpp"
#include "prolong/varset.hpp"

namespace prolong {

// Exponent vector x^alpha over a fixed number of variables.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t i, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  bool is_squarefree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  Exponent degree_ = 0;
};

// Graded lexicographic order: total degree first, then lexicographic on the
// exponent vector (x1 > x2 > ... > xn).
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// alpha! = alpha_1! ... alpha_n!
Integer exponent_factorial(const Monomial& alpha);

// alpha! / (alpha - beta)!, the constant produced by d^beta / dx^beta on x^alpha.
Integer falling_factorial(const Monomial& alpha, const Monomial& beta);

// prod_i binom(alpha_i, beta_i)
Integer binomial_product(const Monomial& alpha, const Monomial& beta);

// All degree-d monomials in n variables, grlex descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

// binom(n + d - 1, d), the dimension of S_d.
Integer count_monomials(std::size_t nvars, unsigned degree);

// Degree-r divisors of m, grlex descending.
std::vector<Monomial> divisors_of_degree(const Monomial& m, unsigned r);

// "x1^2*x2", or "1" for the constant monomial.
std::string format_monomial(const Monomial& m, const VarSet& vars);

}  // namespace prolong
