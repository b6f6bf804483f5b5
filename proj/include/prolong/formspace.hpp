#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "prolong/linalg.hpp"
#include "prolong/polynomial.hpp"

namespace prolong {

using RationalVector = linalg::SparseVector<Rational>;

// Assigns column indices to monomials. Built from a grlex-descending list the
// indices follow grlex order, which is what canonical bases are defined over.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> monomials);

  // Index of m, adding it at the end if absent.
  std::size_t intern(const Monomial& m);
  std::optional<std::size_t> find(const Monomial& m) const;
  const Monomial& monomial(std::size_t i) const { return monomials_.at(i); }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  // Throws if f has a term outside the index (unless interning).
  RationalVector to_vector(const Polynomial& f) const;
  RationalVector to_vector_interning(const Polynomial& f);
  Polynomial to_polynomial(const RationalVector& v, const VarSet& vars) const;

 private:
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// A vector space of degree-d forms, stored as the reduced row-echelon basis
// over grlex-descending monomial coordinates. Two FormSpaces are equal iff
// their stored bases coincide.
class FormSpace {
 public:
  FormSpace(VarSet vars, unsigned degree) : vars_(std::move(vars)), degree_(degree) {}

  const VarSet& vars() const noexcept { return vars_; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }

  // f minus its projection on the pivot monomials; zero iff f is in the space.
  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const FormSpace& other) const;

  friend bool operator==(const FormSpace& a, const FormSpace& b) {
    return a.vars_ == b.vars_ && a.degree_ == b.degree_ && a.basis_ == b.basis_;
  }

 private:
  friend FormSpace make_formspace(const VarSet&, unsigned, const std::vector<Polynomial>&);
  VarSet vars_;
  unsigned degree_;
  std::vector<Polynomial> basis_;
};

// Canonical RREF basis of span(polys). Zero polynomials are dropped.
// Throws std::invalid_argument on inhomogeneous input or degree mismatch.
FormSpace make_formspace(const VarSet& vars, unsigned degree, const std::vector<Polynomial>& polys);

FormSpace intersect(const FormSpace& a, const FormSpace& b);

// Degree-(d+k) piece of the ideal generated by A: span of m * f over
// monomials m of degree k and basis elements f.
FormSpace ideal_graded_piece(const FormSpace& A, unsigned k);

// Whether f lies in the span of `generators`, restricted to the generators
// connected to supp(f) through shared monomials (other components cannot
// contribute to a representation of f).
bool in_span(const Polynomial& f, const std::vector<Polynomial>& generators);

}  // namespace prolong
