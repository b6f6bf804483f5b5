#include "prolong/formspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace prolong {

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials) {
  for (auto& m : monomials) intern(m);
}

std::size_t MonomialIndex::intern(const Monomial& m) {
  auto [it, inserted] = index_.try_emplace(m, monomials_.size());
  if (inserted) monomials_.push_back(m);
  return it->second;
}

std::optional<std::size_t> MonomialIndex::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RationalVector MonomialIndex::to_vector(const Polynomial& f) const {
  std::map<std::size_t, Rational> entries;
  for (const auto& [m, c] : f.terms()) {
    auto i = find(m);
    if (!i) throw std::invalid_argument("monomial outside coordinate index");
    entries.emplace(*i, c);
  }
  return RationalVector::from_map(entries);
}

RationalVector MonomialIndex::to_vector_interning(const Polynomial& f) {
  std::map<std::size_t, Rational> entries;
  for (const auto& [m, c] : f.terms()) entries.emplace(intern(m), c);
  return RationalVector::from_map(entries);
}

Polynomial MonomialIndex::to_polynomial(const RationalVector& v, const VarSet& vars) const {
  Polynomial out(vars);
  for (const auto& e : v) out.add_term(monomials_.at(e.index), e.value);
  return out;
}

Polynomial FormSpace::reduce(const Polynomial& f) const {
  Polynomial out = f;
  // Basis is RREF: each element's leading monomial is its pivot and no other
  // element mentions it, so one pass over the basis suffices.
  for (const auto& b : basis_) {
    Rational c = f.coefficient(b.leading_monomial());
    if (c != 0) out -= b * c;
  }
  return out;
}

bool FormSpace::contains(const Polynomial& f) const {
  if (!f.is_homogeneous(degree_)) return false;
  return reduce(f).is_zero();
}

bool FormSpace::contains(const FormSpace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Polynomial& p) { return contains(p); });
}

FormSpace make_formspace(const VarSet& vars, unsigned degree, const std::vector<Polynomial>& polys) {
  std::set<Monomial, GrlexGreater> mons;
  for (const auto& p : polys) {
    if (!(p.vars() == vars)) throw std::invalid_argument("make_formspace: varset mismatch");
    if (!p.is_homogeneous()) throw std::invalid_argument("make_formspace: inhomogeneous polynomial " + p.to_string());
    if (!p.is_zero() && p.total_degree() != degree)
      throw std::invalid_argument("make_formspace: expected degree " + std::to_string(degree) + ", got " +
                                  std::to_string(p.total_degree()));
    for (const auto& [m, c] : p.terms()) mons.insert(m);
  }
  MonomialIndex index(std::vector<Monomial>(mons.begin(), mons.end()));
  linalg::EchelonBasis<Rational> eb;
  for (const auto& p : polys)
    if (!p.is_zero()) eb.insert(index.to_vector(p));
  FormSpace out(vars, degree);
  for (const auto& row : eb.rows()) out.basis_.push_back(index.to_polynomial(row, vars));
  return out;
}

FormSpace intersect(const FormSpace& a, const FormSpace& b) {
  if (!(a.vars() == b.vars()) || a.degree() != b.degree())
    throw std::invalid_argument("intersect: spaces differ in varset or degree");
  MonomialIndex index;
  std::vector<RationalVector> stacked;
  for (const auto& p : a.basis()) stacked.push_back(index.to_vector_interning(p));
  for (const auto& p : b.basis()) stacked.push_back(index.to_vector_interning(p));
  const std::size_t na = a.dimension();
  std::vector<Polynomial> out;
  for (const auto& rel : linalg::left_nullspace(stacked)) {
    Polynomial f(a.vars());
    for (const auto& e : rel)
      if (e.index < na) f += a.basis()[e.index] * e.value;
    out.push_back(std::move(f));
  }
  return make_formspace(a.vars(), a.degree(), out);
}

FormSpace ideal_graded_piece(const FormSpace& A, unsigned k) {
  if (k == 0) return A;
  std::vector<Polynomial> gens;
  auto shifts = monomials_of_degree(A.vars().size(), k);
  for (const auto& f : A.basis())
    for (const auto& m : shifts) gens.push_back(f * m);
  return make_formspace(A.vars(), A.degree() + k, gens);
}

bool in_span(const Polynomial& f, const std::vector<Polynomial>& generators) {
  if (f.is_zero()) return true;
  std::unordered_map<Monomial, std::vector<std::size_t>, MonomialHash> by_monomial;
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (const auto& [m, c] : generators[g].terms()) by_monomial[m].push_back(g);
  std::vector<char> used(generators.size(), 0);
  std::unordered_map<Monomial, char, MonomialHash> seen;
  std::vector<Monomial> frontier;
  for (const auto& [m, c] : f.terms()) {
    if (!by_monomial.count(m)) return false;
    if (seen.emplace(m, 1).second) frontier.push_back(m);
  }
  std::vector<std::size_t> component;
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t g : by_monomial[m]) {
      if (used[g]) continue;
      used[g] = 1;
      component.push_back(g);
      for (const auto& [m2, c2] : generators[g].terms())
        if (seen.emplace(m2, 1).second) frontier.push_back(m2);
    }
  }
  MonomialIndex index;
  linalg::EchelonBasis<Rational> eb;
  for (std::size_t g : component) eb.insert(index.to_vector_interning(generators[g]));
  return eb.contains(index.to_vector_interning(f));
}

}  // namespace prolong
