#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "prolong/formspace.hpp"

namespace prolong {

// A space spanned by monomials of a fixed degree; monomials are distinct and
// kept grlex descending.
struct MonomialSpace {
  VarSet vars;
  unsigned degree = 0;
  std::vector<Monomial> monomials;

  MonomialSpace(VarSet v, unsigned d, std::vector<Monomial> mons);

  bool contains(const Monomial& m) const;
  std::size_t size() const noexcept { return monomials.size(); }
  FormSpace to_formspace() const;

  friend bool operator==(const MonomialSpace& a, const MonomialSpace& b) {
    return a.vars == b.vars && a.degree == b.degree && a.monomials == b.monomials;
  }
};

// M(A): every monomial with a nonzero coefficient in some basis element.
MonomialSpace monomial_support(const FormSpace& A);

// Degree-(d+r) monomials x^alpha whose every degree-r divisor x^beta leaves
// x^(alpha-beta) in M.
MonomialSpace monomial_prolong(const MonomialSpace& M, unsigned r);

// G(A, r) for a quadratic monomial space: r+2 copies of every variable whose
// square is in A, one copy of the others; (i1,j1)~(i2,j2) iff x_i1 x_i2 in A.
struct BlowupGraph {
  VarSet vars;
  unsigned r = 0;
  std::vector<std::pair<std::size_t, unsigned>> vertices;  // (variable, copy), copies 1-based
  std::vector<std::vector<std::size_t>> adjacency;         // sorted neighbour lists
  std::vector<bool> squared;                               // sigma

  std::size_t edge_count() const;
  bool adjacent(std::size_t u, std::size_t v) const;
  // DOT export, vertices labelled "i.j" (1-based variable index).
  std::string to_dot() const;
};

BlowupGraph build_blowup_graph(const MonomialSpace& A, unsigned r);

// Degree-(r+2) monomials whose vertices span a complete subgraph of G.
MonomialSpace clique_prolong(const BlowupGraph& G);

struct SupportDecomposition {
  std::vector<std::vector<Monomial>> blocks;  // partition of M(A), each grlex descending
  std::vector<FormSpace> spaces;              // A intersected with each block's coordinate span
  bool minimally_generated_by_circuits = false;
};

// Finest partition of M(A) into blocks with A = sum of (A ∩ span(block)).
// The flag holds iff every block is one-dimensional; those block generators
// are then the circuits of A.
SupportDecomposition circuits_and_decomposition(const FormSpace& A);

// Degree-4 binomials of the no-three-way-interaction model on an l x m x n
// table: x_{i1 j1 k1} x_{i1 j2 k2} x_{i2 j1 k2} x_{i2 j2 k1} -
// x_{i1 j1 k2} x_{i1 j2 k1} x_{i2 j1 k1} x_{i2 j2 k2} for i1<i2, j1<j2, k1<k2.
FormSpace no_three_way_quartics(std::size_t l, std::size_t m, std::size_t n);
VarSet no_three_way_vars(std::size_t l, std::size_t m, std::size_t n);

}  // namespace prolong
