#include "prolong/prolong.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "prolong/monomial_comb.hpp"

namespace prolong {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::derivative: return "derivative";
    case Strategy::catalecticant: return "catalecticant";
    case Strategy::tensor: return "tensor";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "derivative") return Strategy::derivative;
  if (name == "catalecticant") return Strategy::catalecticant;
  if (name == "tensor") return Strategy::tensor;
  return std::nullopt;
}

namespace {

void check_args(const FormSpace& A, unsigned r) {
  if (r < 1) throw std::invalid_argument("prolong: r must be at least 1");
  if (A.vars().empty()) throw std::invalid_argument("prolong: empty variable set");
}

FormSpace from_vectors(const FormSpace& A, unsigned r, const std::vector<Monomial>& ambient,
                       const std::vector<RationalVector>& vecs) {
  MonomialIndex index(ambient);
  std::vector<Polynomial> polys;
  polys.reserve(vecs.size());
  for (const auto& v : vecs) polys.push_back(index.to_polynomial(v, A.vars()));
  return make_formspace(A.vars(), A.degree() + r, polys);
}

// Residual of x^m modulo A, cached per monomial, as a vector over a shared index.
class ResidualCache {
 public:
  explicit ResidualCache(const FormSpace& A) : A_(A) {}

  const RationalVector& get(const Monomial& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    Polynomial res = A_.reduce(Polynomial::from_monomial(A_.vars(), m));
    return cache_.emplace(m, index_.to_vector_interning(res)).first->second;
  }

 private:
  const FormSpace& A_;
  MonomialIndex index_;
  std::unordered_map<Monomial, RationalVector, MonomialHash> cache_;
};

std::vector<RationalVector> solve_derivative(const FormSpace& A, unsigned r, const std::vector<Monomial>& ambient) {
  const std::size_t N = ambient.size();
  std::vector<RationalVector> K;
  K.reserve(N);
  for (std::size_t i = 0; i < N; ++i) K.push_back(RationalVector::unit(i));
  ResidualCache residual(A);
  for (const auto& beta : monomials_of_degree(A.vars().size(), r)) {
    if (K.empty()) break;
    // Image of each ambient monomial under f -> d^beta f mod A.
    std::vector<std::optional<RationalVector>> unit_image(N);
    auto image_of = [&](std::size_t i) -> const RationalVector& {
      if (!unit_image[i]) {
        const Monomial& alpha = ambient[i];
        if (!beta.divides(alpha)) {
          unit_image[i] = RationalVector{};
        } else {
          RationalVector v = residual.get(alpha / beta);
          v.scale(Rational(falling_factorial(alpha, beta)));
          unit_image[i] = std::move(v);
        }
      }
      return *unit_image[i];
    };
    std::vector<RationalVector> kept, moving, images;
    for (auto& k : K) {
      RationalVector img;
      for (const auto& e : k) img = linalg::axpy(img, e.value, image_of(e.index));
      if (img.empty()) {
        kept.push_back(std::move(k));
      } else {
        moving.push_back(std::move(k));
        images.push_back(std::move(img));
      }
    }
    for (const auto& rel : linalg::left_nullspace(images)) kept.push_back(linalg::combine(rel, moving));
    K = std::move(kept);
  }
  return K;
}

std::vector<RationalVector> solve_catalecticant(const FormSpace& A, unsigned r, const std::vector<Monomial>& ambient) {
  auto sys = build_catalecticant_system(A, r, ambient);
  linalg::EchelonBasis<Rational> eqs;
  for (const auto& eq : sys.consistency_equations()) eqs.insert(eq);
  return linalg::kernel(eqs, ambient.size());
}

std::vector<RationalVector> solve_tensor(const FormSpace& A, unsigned r, const std::vector<Monomial>& ambient) {
  const std::size_t N = ambient.size();
  // Coordinates of S_d (x) S_r are pairs (m, b), interned as concatenated exponents.
  MonomialIndex coords;
  auto pair_index = [&](const Monomial& m, const Monomial& b) {
    std::vector<Monomial::Exponent> e(m.exponents().begin(), m.exponents().end());
    e.insert(e.end(), b.exponents().begin(), b.exponents().end());
    return coords.intern(Monomial(std::move(e)));
  };
  std::vector<RationalVector> columns;
  std::set<Monomial, GrlexGreater> used_b;
  for (const auto& alpha : ambient) {
    std::map<std::size_t, Rational> entries;
    for (const auto& b : divisors_of_degree(alpha, r)) {
      entries[pair_index(alpha / b, b)] += Rational(binomial_product(alpha, b));
      used_b.insert(b);
    }
    columns.push_back(RationalVector::from_map(entries));
  }
  // u_{j,b} columns: -A_j (x) x^b. Other b carry no c contribution and force u = 0.
  for (const auto& b : used_b) {
    for (const auto& g : A.basis()) {
      std::map<std::size_t, Rational> entries;
      for (const auto& [m, c] : g.terms()) entries[pair_index(m, b)] = -c;
      columns.push_back(RationalVector::from_map(entries));
    }
  }
  std::vector<RationalVector> out;
  for (const auto& rel : linalg::left_nullspace(columns)) {
    RationalVector proj;
    for (const auto& e : rel)
      if (e.index < N) proj.push_back(e.index, e.value);
    if (!proj.empty()) out.push_back(std::move(proj));
  }
  return out;
}

}  // namespace

std::vector<Monomial> prolongation_ambient(const FormSpace& A, unsigned r, const ProlongOptions& opts) {
  check_args(A, r);
  const std::size_t n = A.vars().size();
  Integer total = count_monomials(n, A.degree() + r);
  if (total > Integer(static_cast<unsigned long>(opts.cap)))
    throw CapExceeded("ambient dimension " + total.get_str() + " of S_" + std::to_string(A.degree() + r) +
                      " exceeds cap " + std::to_string(opts.cap));
  if (!opts.prune) return monomials_of_degree(n, A.degree() + r);
  return monomial_prolong(monomial_support(A), r).monomials;
}

FormSpace prolong(const FormSpace& A, unsigned r, const ProlongOptions& opts) {
  auto ambient = prolongation_ambient(A, r, opts);
  if (ambient.empty()) return FormSpace(A.vars(), A.degree() + r);
  std::vector<RationalVector> vecs;
  switch (opts.strategy) {
    case Strategy::derivative: vecs = solve_derivative(A, r, ambient); break;
    case Strategy::catalecticant: vecs = solve_catalecticant(A, r, ambient); break;
    case Strategy::tensor: vecs = solve_tensor(A, r, ambient); break;
  }
  return from_vectors(A, r, ambient, vecs);
}

CatalecticantSystem build_catalecticant_system(const FormSpace& A, unsigned r, const std::vector<Monomial>& unknowns) {
  check_args(A, r);
  CatalecticantSystem sys;
  sys.unknowns = unknowns;
  sys.betas = monomials_of_degree(A.vars().size(), r);
  const std::size_t N = unknowns.size();
  std::set<Monomial, GrlexGreater> rowset;
  for (const auto& g : A.basis())
    for (const auto& [m, c] : g.terms()) rowset.insert(m);
  for (const auto& alpha : unknowns)
    for (const auto& b : divisors_of_degree(alpha, r)) rowset.insert(alpha / b);
  sys.rows.assign(rowset.begin(), rowset.end());
  MonomialIndex unknown_index(unknowns);
  for (const auto& m : sys.rows) {
    std::map<std::size_t, Rational> a, c;
    for (std::size_t j = 0; j < A.dimension(); ++j) {
      Rational v = A.basis()[j].coefficient(m);
      if (v != 0) a.emplace(j, v);
    }
    for (std::size_t bi = 0; bi < sys.betas.size(); ++bi) {
      Monomial alpha = m * sys.betas[bi];
      if (auto ai = unknown_index.find(alpha))
        c.emplace(bi * N + *ai, Rational(falling_factorial(alpha, sys.betas[bi])));
    }
    sys.a_part.push_back(RationalVector::from_map(a));
    sys.c_part.push_back(RationalVector::from_map(c));
  }
  return sys;
}

std::vector<RationalVector> CatalecticantSystem::consistency_equations() const {
  const std::size_t N = unknowns.size();
  std::vector<RationalVector> a = a_part, c = c_part;
  std::vector<bool> used(a.size(), false);
  std::size_t ncols = 0;
  for (const auto& v : a)
    if (!v.empty()) ncols = std::max(ncols, v.begin()[v.size() - 1].index + 1);
  for (std::size_t col = 0; col < ncols; ++col) {
    // Largest |entry| in this column among unused rows, first one on ties.
    std::size_t piv = a.size();
    Rational best = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (used[i]) continue;
      Rational v = abs(a[i].at(col));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv == a.size()) continue;
    used[piv] = true;
    const Rational p = a[piv].at(col);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (used[i]) continue;
      Rational v = a[i].at(col);
      if (v == 0) continue;
      Rational f = -v / p;
      a[i] = linalg::axpy(a[i], f, a[piv]);
      c[i] = linalg::axpy(c[i], f, c[piv]);
    }
  }
  std::vector<RationalVector> eqs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (used[i] || c[i].empty()) continue;
    std::map<std::size_t, std::map<std::size_t, Rational>> slices;
    for (const auto& e : c[i]) slices[e.index / N].emplace(e.index % N, e.value);
    for (const auto& [bi, entries] : slices) eqs.push_back(RationalVector::from_map(entries));
  }
  return eqs;
}

bool derivatives_in(const Polynomial& f, const FormSpace& A, unsigned r) {
  for (const auto& beta : monomials_of_degree(f.vars().size(), r))
    if (!A.contains(differentiate(f, beta))) return false;
  return true;
}

bool differential_power_member(const Polynomial& f, const FormSpace& A, unsigned r) {
  if (!(f.vars() == A.vars())) throw std::invalid_argument("differential_power_member: varset mismatch");
  if (!f.is_zero() && f.total_degree() != A.degree() + r)
    throw std::invalid_argument("differential_power_member: expected degree " + std::to_string(A.degree() + r));
  if (!f.is_homogeneous()) throw std::invalid_argument("differential_power_member: inhomogeneous polynomial");
  const std::size_t n = A.vars().size();
  for (unsigned k = 0; k <= r; ++k) {
    // Generators m * g of the degree-(d + r - k) ideal piece.
    std::vector<Polynomial> gens;
    for (const auto& m : monomials_of_degree(n, r - k))
      for (const auto& g : A.basis()) gens.push_back(g * m);
    for (const auto& beta : monomials_of_degree(n, k)) {
      Polynomial g = differentiate(f, beta);
      if (g.is_zero()) continue;
      if (k == r ? !A.contains(g) : !in_span(g, gens)) return false;
    }
  }
  return true;
}

}  // namespace prolong
