#pragma once

#include <cstddef>

#include "prolong/polynomial.hpp"

namespace prolong {

// A polynomial over k copies of a base variable set. Variable j of block b
// (0-based) sits at index b * n + j and is named "<name_j>_<b+1>".
class MultiPolynomial {
 public:
  MultiPolynomial(VarSet base, std::size_t blocks);
  MultiPolynomial(VarSet base, std::size_t blocks, Polynomial poly);

  static VarSet block_varset(const VarSet& base, std::size_t blocks);

  const VarSet& base() const noexcept { return base_; }
  std::size_t blocks() const noexcept { return blocks_; }
  const Polynomial& poly() const noexcept { return poly_; }
  Polynomial& poly() noexcept { return poly_; }

  std::size_t block_of(std::size_t var) const { return var / base_.size(); }
  // Places a base monomial into the given block.
  Monomial lift(const Monomial& base_monomial, std::size_t block) const;
  // Degree of the monomial restricted to one block.
  unsigned block_degree(const Monomial& m, std::size_t block) const;

  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
    return a.blocks_ == b.blocks_ && a.poly_ == b.poly_;
  }

 private:
  VarSet base_;
  std::size_t blocks_;
  Polynomial poly_;
};

// Full polarization: the symmetric multilinear form in d blocks whose
// diagonal is d! * f. Computed per monomial: x^alpha contributes alpha! to
// every distinct block arrangement of its variable multiset.
MultiPolynomial polarize(const Polynomial& f);

// F(x, ..., x, y, ..., y) with d copies of x (block 1) and r copies of y
// (block 2), where F is the polarization of f (degree d + r). The
// coefficient of x^(alpha-beta) y^beta in the image of x^alpha is
// alpha! * d!/(alpha-beta)! * r!/beta!.
MultiPolynomial partial_polarize(const Polynomial& f, unsigned d, unsigned r);

// Substitutes the base variables for every block.
Polynomial diagonal(const MultiPolynomial& F);

// Exchanges two blocks.
MultiPolynomial swap_blocks(const MultiPolynomial& F, std::size_t a, std::size_t b);

// Restricts a multipolynomial that only involves block `block` to the base variables.
Polynomial restrict_to_block(const MultiPolynomial& F, std::size_t block);

}  // namespace prolong
