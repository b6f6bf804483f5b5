#include "prolong/polarize.hpp"

#include <algorithm>
#include <stdexcept>

namespace prolong {

VarSet MultiPolynomial::block_varset(const VarSet& base, std::size_t blocks) {
  std::vector<std::string> names;
  names.reserve(base.size() * blocks);
  for (std::size_t b = 0; b < blocks; ++b)
    for (const auto& n : base.names()) names.push_back(n + "_" + std::to_string(b + 1));
  return VarSet(std::move(names));
}

MultiPolynomial::MultiPolynomial(VarSet base, std::size_t blocks)
    : base_(std::move(base)), blocks_(blocks), poly_(block_varset(base_, blocks_)) {}

MultiPolynomial::MultiPolynomial(VarSet base, std::size_t blocks, Polynomial poly)
    : base_(std::move(base)), blocks_(blocks), poly_(std::move(poly)) {
  if (poly_.vars().size() != base_.size() * blocks_)
    throw std::invalid_argument("multipolynomial varset does not match block structure");
}

Monomial MultiPolynomial::lift(const Monomial& m, std::size_t block) const {
  std::vector<Monomial::Exponent> e(base_.size() * blocks_, 0);
  for (std::size_t j = 0; j < m.size(); ++j) e[block * base_.size() + j] = m[j];
  return Monomial(std::move(e));
}

unsigned MultiPolynomial::block_degree(const Monomial& m, std::size_t block) const {
  unsigned deg = 0;
  for (std::size_t j = 0; j < base_.size(); ++j) deg += m[block * base_.size() + j];
  return deg;
}

MultiPolynomial polarize(const Polynomial& f) {
  if (!f.is_homogeneous()) throw std::invalid_argument("polarize: polynomial is not homogeneous");
  const std::size_t n = f.vars().size();
  const unsigned d = f.total_degree();
  if (!f.is_zero() && d == 0) throw std::invalid_argument("polarize: degree must be at least 1");
  MultiPolynomial out(f.vars(), d);
  for (const auto& [alpha, c] : f.terms()) {
    std::vector<std::size_t> seq;
    for (std::size_t j = 0; j < n; ++j) seq.insert(seq.end(), alpha[j], j);
    Rational coeff = c * Rational(exponent_factorial(alpha));
    // seq is sorted, so next_permutation visits each distinct arrangement once.
    do {
      std::vector<Monomial::Exponent> e(n * d, 0);
      for (std::size_t b = 0; b < d; ++b) e[b * n + seq[b]] = 1;
      out.poly().add_term(Monomial(std::move(e)), coeff);
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
  return out;
}

MultiPolynomial partial_polarize(const Polynomial& f, unsigned d, unsigned r) {
  if (!f.is_homogeneous(d + r)) throw std::invalid_argument("partial_polarize: degree mismatch");
  const std::size_t n = f.vars().size();
  MultiPolynomial out(f.vars(), 2);
  const Integer dr = factorial(d) * factorial(r);
  for (const auto& [alpha, c] : f.terms()) {
    Integer alpha_fact = exponent_factorial(alpha);
    for (const auto& beta : divisors_of_degree(alpha, r)) {
      Monomial rest = alpha / beta;
      Rational coeff = c * Rational(alpha_fact * dr) /
                       Rational(exponent_factorial(rest) * exponent_factorial(beta));
      std::vector<Monomial::Exponent> e(2 * n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        e[j] = rest[j];
        e[n + j] = beta[j];
      }
      out.poly().add_term(Monomial(std::move(e)), coeff);
    }
  }
  return out;
}

Polynomial diagonal(const MultiPolynomial& F) {
  const std::size_t n = F.base().size();
  Polynomial out(F.base());
  for (const auto& [m, c] : F.poly().terms()) {
    std::vector<Monomial::Exponent> e(n, 0);
    for (std::size_t i = 0; i < m.size(); ++i) e[i % n] += m[i];
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

MultiPolynomial swap_blocks(const MultiPolynomial& F, std::size_t a, std::size_t b) {
  const std::size_t n = F.base().size();
  MultiPolynomial out(F.base(), F.blocks());
  for (const auto& [m, c] : F.poly().terms()) {
    std::vector<Monomial::Exponent> e(m.exponents().begin(), m.exponents().end());
    for (std::size_t j = 0; j < n; ++j) std::swap(e[a * n + j], e[b * n + j]);
    out.poly().add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Polynomial restrict_to_block(const MultiPolynomial& F, std::size_t block) {
  const std::size_t n = F.base().size();
  Polynomial out(F.base());
  for (const auto& [m, c] : F.poly().terms()) {
    std::vector<Monomial::Exponent> e(n, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i / n != block) throw std::invalid_argument("restrict_to_block: term outside block");
      e[i % n] = m[i];
    }
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace prolong
