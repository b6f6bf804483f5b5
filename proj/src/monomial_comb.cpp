#include "prolong/monomial_comb.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace prolong {

MonomialSpace::MonomialSpace(VarSet v, unsigned d, std::vector<Monomial> mons)
    : vars(std::move(v)), degree(d), monomials(std::move(mons)) {
  for (const auto& m : monomials) {
    if (m.size() != vars.size()) throw std::invalid_argument("monomial length does not match varset");
    if (m.degree() != degree) throw std::invalid_argument("monomial of wrong degree in MonomialSpace");
  }
  std::sort(monomials.begin(), monomials.end(), GrlexGreater{});
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
}

bool MonomialSpace::contains(const Monomial& m) const {
  return std::binary_search(monomials.begin(), monomials.end(), m, GrlexGreater{});
}

FormSpace MonomialSpace::to_formspace() const {
  std::vector<Polynomial> polys;
  for (const auto& m : monomials) polys.push_back(Polynomial::from_monomial(vars, m));
  return make_formspace(vars, degree, polys);
}

MonomialSpace monomial_support(const FormSpace& A) {
  std::vector<Monomial> mons;
  for (const auto& f : A.basis())
    for (const auto& [m, c] : f.terms()) mons.push_back(m);
  return MonomialSpace(A.vars(), A.degree(), std::move(mons));
}

MonomialSpace monomial_prolong(const MonomialSpace& M, unsigned r) {
  if (r < 1) throw std::invalid_argument("monomial_prolong: r must be positive");
  const std::size_t n = M.vars.size();
  std::unordered_set<Monomial, MonomialHash> members(M.monomials.begin(), M.monomials.end());
  std::unordered_set<Monomial, MonomialHash> tried;
  std::vector<Monomial> out;
  auto shifts = monomials_of_degree(n, r);
  // Any qualifying x^alpha has some x^(alpha-beta) in M, so candidates are m * x^beta.
  for (const auto& m : M.monomials) {
    for (const auto& s : shifts) {
      Monomial alpha = m * s;
      if (!tried.insert(alpha).second) continue;
      bool ok = true;
      for (const auto& beta : divisors_of_degree(alpha, r)) {
        if (!members.count(alpha / beta)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(alpha));
    }
  }
  return MonomialSpace(M.vars, M.degree + r, std::move(out));
}

std::size_t BlowupGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adjacency) total += a.size();
  return total / 2;
}

bool BlowupGraph::adjacent(std::size_t u, std::size_t v) const {
  return std::binary_search(adjacency[u].begin(), adjacency[u].end(), v);
}

std::string BlowupGraph::to_dot() const {
  std::string out = "graph G {\n";
  auto label = [&](std::size_t v) {
    return "\"" + std::to_string(vertices[v].first + 1) + "." + std::to_string(vertices[v].second) + "\"";
  };
  for (std::size_t v = 0; v < vertices.size(); ++v) out += "  " + label(v) + ";\n";
  for (std::size_t u = 0; u < vertices.size(); ++u)
    for (std::size_t v : adjacency[u])
      if (u < v) out += "  " + label(u) + " -- " + label(v) + ";\n";
  out += "}\n";
  return out;
}

BlowupGraph build_blowup_graph(const MonomialSpace& A, unsigned r) {
  if (A.degree != 2) throw std::invalid_argument("build_blowup_graph: space must be quadratic");
  if (r < 1) throw std::invalid_argument("build_blowup_graph: r must be positive");
  const std::size_t n = A.vars.size();
  BlowupGraph G;
  G.vars = A.vars;
  G.r = r;
  G.squared.assign(n, false);
  std::vector<std::vector<bool>> pair(n, std::vector<bool>(n, false));
  for (const auto& m : A.monomials) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < m[i]; ++k) idx.push_back(i);
    pair[idx[0]][idx[1]] = pair[idx[1]][idx[0]] = true;
    if (idx[0] == idx[1]) G.squared[idx[0]] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    unsigned copies = G.squared[i] ? r + 2 : 1;
    for (unsigned j = 1; j <= copies; ++j) G.vertices.emplace_back(i, j);
  }
  G.adjacency.assign(G.vertices.size(), {});
  for (std::size_t u = 0; u < G.vertices.size(); ++u)
    for (std::size_t v = 0; v < G.vertices.size(); ++v)
      if (u != v && pair[G.vertices[u].first][G.vertices[v].first]) G.adjacency[u].push_back(v);
  return G;
}

namespace {

// Degeneracy (smallest-last) ordering; returns position of each vertex.
std::vector<std::size_t> degeneracy_rank(const BlowupGraph& G) {
  const std::size_t nv = G.vertices.size();
  std::vector<std::size_t> degree(nv), rank(nv);
  std::vector<bool> removed(nv, false);
  for (std::size_t v = 0; v < nv; ++v) degree[v] = G.adjacency[v].size();
  for (std::size_t pos = 0; pos < nv; ++pos) {
    std::size_t best = nv;
    for (std::size_t v = 0; v < nv; ++v)
      if (!removed[v] && (best == nv || degree[v] < degree[best])) best = v;
    removed[best] = true;
    rank[best] = pos;
    for (std::size_t w : G.adjacency[best])
      if (!removed[w]) --degree[w];
  }
  return rank;
}

}  // namespace

MonomialSpace clique_prolong(const BlowupGraph& G) {
  const std::size_t target = G.r + 2;
  const std::size_t nv = G.vertices.size();
  const std::size_t n = G.vars.size();
  auto rank = degeneracy_rank(G);
  // Orient every edge towards the later vertex in degeneracy order so each
  // clique is listed exactly once, from its earliest vertex.
  std::vector<std::vector<std::size_t>> forward(nv);
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t v : G.adjacency[u])
      if (rank[v] > rank[u]) forward[u].push_back(v);

  std::set<Monomial, GrlexGreater> found;
  std::vector<std::size_t> clique;
  auto emit = [&]() {
    // Interchangeable copies: keep only cliques using copies 1..k of each variable.
    std::vector<unsigned> count(n, 0), maxcopy(n, 0);
    for (std::size_t v : clique) {
      ++count[G.vertices[v].first];
      maxcopy[G.vertices[v].first] = std::max(maxcopy[G.vertices[v].first], G.vertices[v].second);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (count[i] != maxcopy[i]) return;
    std::vector<Monomial::Exponent> e(count.begin(), count.end());
    found.insert(Monomial(std::move(e)));
  };
  auto extend = [&](auto&& self, const std::vector<std::size_t>& candidates) -> void {
    if (clique.size() == target) {
      emit();
      return;
    }
    if (clique.size() + candidates.size() < target) return;
    for (std::size_t v : candidates) {
      std::vector<std::size_t> next;
      for (std::size_t w : forward[v])
        if (std::find(candidates.begin(), candidates.end(), w) != candidates.end()) next.push_back(w);
      clique.push_back(v);
      self(self, next);
      clique.pop_back();
    }
  };
  for (std::size_t v = 0; v < nv; ++v) {
    clique.assign(1, v);
    extend(extend, forward[v]);
  }
  return MonomialSpace(G.vars, static_cast<unsigned>(target),
                       std::vector<Monomial>(found.begin(), found.end()));
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// A ∩ span(block): combinations of A's basis vanishing outside the block.
FormSpace block_intersection(const FormSpace& A, const std::set<Monomial, GrlexGreater>& block) {
  MonomialIndex outside;
  std::vector<RationalVector> rows;
  for (const auto& f : A.basis()) {
    Polynomial out(A.vars());
    for (const auto& [m, c] : f.terms())
      if (!block.count(m)) out.add_term(m, c);
    rows.push_back(outside.to_vector_interning(out));
  }
  std::vector<Polynomial> gens;
  for (const auto& rel : linalg::left_nullspace(rows)) {
    Polynomial g(A.vars());
    for (const auto& e : rel) g += A.basis()[e.index] * e.value;
    gens.push_back(std::move(g));
  }
  return make_formspace(A.vars(), A.degree(), gens);
}

}  // namespace

SupportDecomposition circuits_and_decomposition(const FormSpace& A) {
  auto M = monomial_support(A);
  MonomialIndex index(M.monomials);
  UnionFind uf(index.size());
  for (const auto& f : A.basis()) {
    std::size_t first = *index.find(f.leading_monomial());
    for (const auto& [m, c] : f.terms()) uf.unite(first, *index.find(m));
  }
  for (;;) {
    std::map<std::size_t, std::set<Monomial, GrlexGreater>> groups;
    for (std::size_t i = 0; i < index.size(); ++i) groups[uf.find(i)].insert(index.monomial(i));
    SupportDecomposition out;
    std::size_t total = 0;
    std::vector<std::size_t> roots;
    for (const auto& [root, mons] : groups) {
      out.blocks.emplace_back(mons.begin(), mons.end());
      out.spaces.push_back(block_intersection(A, mons));
      total += out.spaces.back().dimension();
      roots.push_back(root);
    }
    if (total == A.dimension()) {
      out.minimally_generated_by_circuits = std::all_of(
          out.spaces.begin(), out.spaces.end(), [](const FormSpace& s) { return s.dimension() == 1; });
      // Blocks ordered by their largest monomial.
      std::vector<std::size_t> order(out.blocks.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return grlex_less(out.blocks[b].front(), out.blocks[a].front());
      });
      SupportDecomposition sorted;
      sorted.minimally_generated_by_circuits = out.minimally_generated_by_circuits;
      for (std::size_t k : order) {
        sorted.blocks.push_back(std::move(out.blocks[k]));
        sorted.spaces.push_back(std::move(out.spaces[k]));
      }
      return sorted;
    }
    // A block pair failed to split A; merge the first block whose space is
    // short of its share into its neighbour and retry.
    // Cannot happen for supports taken from an RREF basis, kept as a guard.
    bool merged = false;
    for (std::size_t k = 0; k + 1 < roots.size() && !merged; ++k) {
      uf.unite(roots[k], roots[k + 1]);
      merged = true;
    }
    if (!merged) throw std::logic_error("support decomposition failed to converge");
  }
}

VarSet no_three_way_vars(std::size_t l, std::size_t m, std::size_t n) {
  bool compact = l <= 9 && m <= 9 && n <= 9;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        names.push_back(compact ? "x" + std::to_string(i) + std::to_string(j) + std::to_string(k)
                                : "x" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k));
  return VarSet(std::move(names));
}

FormSpace no_three_way_quartics(std::size_t l, std::size_t m, std::size_t n) {
  if (l < 1 || m < 1 || n < 1) throw std::invalid_argument("no_three_way_quartics: dimensions must be positive");
  VarSet vars = no_three_way_vars(l, m, n);
  auto var = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * m + j) * n + k; };
  auto mono = [&](std::initializer_list<std::size_t> idx) {
    std::vector<Monomial::Exponent> e(vars.size(), 0);
    for (auto v : idx) ++e[v];
    return Monomial(std::move(e));
  };
  std::vector<Polynomial> gens;
  for (std::size_t i1 = 0; i1 < l; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < l; ++i2)
      for (std::size_t j1 = 0; j1 < m; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < m; ++j2)
          for (std::size_t k1 = 0; k1 < n; ++k1)
            for (std::size_t k2 = k1 + 1; k2 < n; ++k2) {
              Polynomial p(vars);
              p.add_term(mono({var(i1, j1, k1), var(i1, j2, k2), var(i2, j1, k2), var(i2, j2, k1)}), 1);
              p.add_term(mono({var(i1, j1, k2), var(i1, j2, k1), var(i2, j1, k1), var(i2, j2, k2)}), -1);
              gens.push_back(std::move(p));
            }
  return make_formspace(vars, 4, gens);
}

}  // namespace prolong
