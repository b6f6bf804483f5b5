#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prolong/monomial.hpp"
#include "prolong/rational.hpp"
#include "prolong/varset.hpp"

namespace prolong {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Sparse polynomial over the rationals. Terms are kept in grlex-descending
// order and never hold a zero coefficient; the zero polynomial has no terms.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(VarSet vars) : vars_(std::move(vars)) {}
  Polynomial(VarSet vars, Terms terms);

  static Polynomial from_monomial(VarSet vars, Monomial m, Rational coeff = 1);

  const VarSet& vars() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Degree of the leading term; 0 for the zero polynomial.
  unsigned total_degree() const;
  // The zero polynomial is homogeneous of every degree.
  bool is_homogeneous(unsigned degree) const;
  bool is_homogeneous() const;

  Rational coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  // Adds c * x^m in place.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  // Multiplication by a monomial.
  friend Polynomial operator*(const Polynomial& a, const Monomial& m);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_same_vars(const Polynomial& other) const;
  void add_term_canonical(const Monomial& m, const Rational& c);

  VarSet vars_;
  Terms terms_;
};

Polynomial parse_polynomial(std::string_view text, const VarSet& vars);

// d^|beta| f / dx^beta
Polynomial differentiate(const Polynomial& f, const Monomial& beta);

Rational evaluate(const Polynomial& f, std::span<const Rational> point);

// f scaled so that its leading coefficient is 1 (zero stays zero).
Polynomial normalized(const Polynomial& f);

// True if f and g agree up to a nonzero scalar.
bool proportional(const Polynomial& f, const Polynomial& g);

// Monomials appearing in f, grlex descending.
std::vector<Monomial> support(const Polynomial& f);

}  // namespace prolong
