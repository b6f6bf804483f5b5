#include "prolong/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace prolong {

Monomial::Monomial(std::vector<Exponent> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), Exponent{0})) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exponent power) {
  std::vector<Exponent> e(nvars, 0);
  e.at(i) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial size mismatch");
  std::vector<Monomial::Exponent> e(a.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
  return Monomial(std::move(e));
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::invalid_argument("monomial does not divide");
  std::vector<Monomial::Exponent> e(a.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.exps_[i];
  return Monomial(std::move(e));
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ea = a.exponents(), eb = b.exponents();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Integer exponent_factorial(const Monomial& alpha) {
  Integer out = 1;
  for (auto e : alpha.exponents())
    if (e > 1) out *= factorial(e);
  return out;
}

Integer falling_factorial(const Monomial& alpha, const Monomial& beta) {
  Integer out = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (Monomial::Exponent k = 0; k < beta[i]; ++k) out *= alpha[i] - k;
  return out;
}

Integer binomial_product(const Monomial& alpha, const Monomial& beta) {
  Integer out = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (beta[i] > 0) out *= binomial(alpha[i], beta[i]);
  return out;
}

namespace {

// Compositions of `remaining` into slots [pos, n), first slot largest first:
// this emits exponent vectors in descending lexicographic order.
void compositions(std::vector<Monomial::Exponent>& cur, std::size_t pos, unsigned remaining,
                  std::vector<Monomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    compositions(cur, pos + 1, remaining - e, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(std::vector<Monomial::Exponent>{});
    return out;
  }
  std::vector<Monomial::Exponent> cur(nvars, 0);
  compositions(cur, 0, degree, out);
  return out;
}

Integer count_monomials(std::size_t nvars, unsigned degree) {
  if (nvars == 0) return degree == 0 ? 1 : 0;
  return binomial(nvars + degree - 1, degree);
}

std::vector<Monomial> divisors_of_degree(const Monomial& m, unsigned r) {
  std::vector<Monomial> out;
  if (r > m.degree()) return out;
  std::vector<Monomial::Exponent> cur(m.size(), 0);
  // Depth-first over variables, largest exponent first, keeps grlex descending.
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (pos == m.size()) return;
    unsigned top = std::min<unsigned>(m[pos], remaining);
    for (unsigned e = top + 1; e-- > 0;) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, r);
  return out;
}

std::string format_monomial(const Monomial& m, const VarSet& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace prolong
