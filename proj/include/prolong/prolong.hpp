#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prolong/formspace.hpp"

namespace prolong {

enum class Strategy { derivative, catalecticant, tensor };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

// Thrown when the ambient degree-(d+r) monomial count exceeds the cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct ProlongOptions {
  Strategy strategy = Strategy::derivative;
  std::size_t cap = 200000;
  // Restrict the ambient monomials to M(A)^(r) before solving.
  bool prune = true;
};

FormSpace prolong(const FormSpace& A, unsigned r, const ProlongOptions& opts = {});

// Augmented system [A | C] of the catalecticant strategy. Rows are indexed by
// degree-d monomials; the A part holds the coefficients of A's basis elements,
// the C part holds, for every beta, the linear form in the unknown
// coefficients c_alpha of F giving the coefficient of that row's monomial in
// d^beta F. C entries live at index beta_index * unknowns.size() + alpha_index.
struct CatalecticantSystem {
  std::vector<Monomial> rows;
  std::vector<Monomial> betas;
  std::vector<Monomial> unknowns;
  std::vector<RationalVector> a_part;
  std::vector<RationalVector> c_part;

  // Linear equations on the unknowns, one per (zero row of RREF(A), beta).
  std::vector<RationalVector> consistency_equations() const;
};

CatalecticantSystem build_catalecticant_system(const FormSpace& A, unsigned r, const std::vector<Monomial>& unknowns);

// Ambient monomials a strategy solves over: M(A)^(r) when pruning, all of
// S_{d+r} otherwise. Checks the cap.
std::vector<Monomial> prolongation_ambient(const FormSpace& A, unsigned r, const ProlongOptions& opts = {});

// Every order-r derivative of f lies in A.
bool derivatives_in(const Polynomial& f, const FormSpace& A, unsigned r);

// For every k <= r and |beta| = k, d^beta f lies in the degree-(d+r-k) piece
// of the ideal generated by A.
bool differential_power_member(const Polynomial& f, const FormSpace& A, unsigned r);

}  // namespace prolong
