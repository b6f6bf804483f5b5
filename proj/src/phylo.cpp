#include "prolong/phylo.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace prolong {

std::optional<std::size_t> Tree::edge_id(Node u, Node v) const {
  Edge e = std::minmax(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Tree::is_internal_edge(std::size_t e) const {
  const auto& [u, v] = edges_.at(e);
  return !is_leaf(u) && !is_leaf(v);
}

std::vector<std::size_t> Tree::internal_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (is_internal_edge(e)) out.push_back(e);
  return out;
}

std::vector<std::size_t> Tree::incident_edges(Node v) const {
  std::vector<std::size_t> out;
  for (Node w : adj_.at(v)) out.push_back(*edge_id(v, w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> Tree::side(std::size_t e, Node from) const {
  const auto& [a, b] = edges_.at(e);
  std::vector<bool> seen(adj_.size(), false);
  std::vector<Node> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    for (Node w : adj_[v]) {
      if (seen[w]) continue;
      if ((v == a && w == b) || (v == b && w == a)) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return seen;
}

Tree load_tree(const std::vector<std::pair<long long, long long>>& edges) {
  if (edges.empty()) throw TreeError("tree has no edges");
  long long top = 0;
  for (const auto& [u, v] : edges) {
    if (u < 1 || v < 1) throw TreeError("node labels must be positive");
    if (u == v) throw TreeError("self-loop at node " + std::to_string(u));
    top = std::max({top, u, v});
  }
  const std::size_t N = static_cast<std::size_t>(top);
  if (edges.size() != N - 1) throw TreeError("not a tree: " + std::to_string(edges.size()) + " edges on " +
                                             std::to_string(N) + " nodes");
  Tree t;
  t.adj_.assign(N + 1, {});
  for (const auto& [u, v] : edges) {
    Edge e = std::minmax(static_cast<Node>(u), static_cast<Node>(v));
    t.edges_.push_back(e);
  }
  std::sort(t.edges_.begin(), t.edges_.end());
  if (std::adjacent_find(t.edges_.begin(), t.edges_.end()) != t.edges_.end())
    throw TreeError("duplicate edge");
  for (const auto& [u, v] : t.edges_) {
    t.adj_[u].push_back(v);
    t.adj_[v].push_back(u);
  }
  std::size_t leaves = 0;
  for (Node v = 1; v <= N; ++v) {
    std::sort(t.adj_[v].begin(), t.adj_[v].end());
    std::size_t deg = t.adj_[v].size();
    if (deg == 0) throw TreeError("node " + std::to_string(v) + " is isolated");
    if (deg == 1) ++leaves;
    else if (deg != 3) throw TreeError("internal node " + std::to_string(v) + " has degree " + std::to_string(deg));
  }
  t.n_ = leaves;
  for (Node v = 1; v <= N; ++v)
    if ((t.adj_[v].size() == 1) != (v <= leaves))
      throw TreeError("leaves must be labelled 1.." + std::to_string(leaves) + " and internal nodes above");
  if (leaves < 3) throw TreeError("tree needs at least 3 leaves");
  // N - 1 edges and no isolated nodes; connectivity makes it a tree.
  {
    std::vector<bool> seen(N + 1, false);
    std::vector<Node> stack{1};
    seen[1] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      Node v = stack.back();
      stack.pop_back();
      for (Node w : t.adj_[v])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    if (count != N) throw TreeError("not a tree: graph is disconnected");
  }
  for (std::size_t e = 0; e < t.edges_.size(); ++e) {
    auto s = t.side(e, t.edges_[e].first);
    std::vector<Node> first, second;
    for (Node leaf = 1; leaf <= leaves; ++leaf) (s[leaf] ? first : second).push_back(leaf);
    bool take_first = first.size() < second.size() || (first.size() == second.size() && s[1]);
    t.split_.push_back(take_first ? first : second);
  }
  return t;
}

std::vector<std::string> fourier_indices(std::size_t n) {
  if (n < 1 || n > 24) throw std::invalid_argument("fourier_indices: unsupported length");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < (std::size_t{1} << (n - 1)); ++k) {
    std::string bits(n, '0');
    unsigned parity = 0;
    for (std::size_t j = 0; j + 1 < n; ++j)
      if ((k >> (n - 2 - j)) & 1) {
        bits[j] = '1';
        parity ^= 1;
      }
    bits[n - 1] = parity ? '1' : '0';
    out.push_back(std::move(bits));
  }
  return out;
}

VarSet fourier_vars(std::size_t n) {
  std::vector<std::string> names;
  for (const auto& b : fourier_indices(n)) names.push_back("q" + b);
  return VarSet(std::move(names));
}

std::size_t fourier_position(const std::string& bits) {
  // The last bit is forced by parity, so lexicographic order is the order of
  // the leading n-1 bits read in binary.
  std::size_t k = 0;
  for (std::size_t j = 0; j + 1 < bits.size(); ++j) k = 2 * k + (bits[j] == '1');
  return k;
}

EdgeLabeling edge_labeling(const Tree& tree, const std::string& bits) {
  if (bits.size() != tree.leaves()) throw std::invalid_argument("edge_labeling: index length differs from leaf count");
  if (std::count(bits.begin(), bits.end(), '1') % 2 != 0) throw std::invalid_argument("edge_labeling: odd index");
  EdgeLabeling out(tree.edges().size(), 0);
  for (std::size_t e = 0; e < out.size(); ++e) {
    unsigned p = 0;
    for (Node leaf : tree.split(e)) p ^= bits[leaf - 1] == '1';
    out[e] = static_cast<Label>(p);
  }
  return out;
}

bool is_socket(const Tree& tree, const EdgeLabeling& labels) {
  if (labels.size() != tree.edges().size()) return false;
  for (Node v = static_cast<Node>(tree.leaves()) + 1; v <= tree.nodes(); ++v) {
    unsigned p = 0;
    for (std::size_t e : tree.incident_edges(v)) p ^= labels[e];
    if (p) return false;
  }
  return true;
}

std::string socket_index(const Tree& tree, const EdgeLabeling& labels) {
  std::string bits(tree.leaves(), '0');
  for (Node leaf = 1; leaf <= tree.leaves(); ++leaf)
    if (labels[tree.incident_edges(leaf).front()]) bits[leaf - 1] = '1';
  return bits;
}

SplitMatrices split_matrices(const Tree& tree, std::size_t e) {
  if (!tree.is_internal_edge(e)) throw std::invalid_argument("split_matrices: edge is not internal");
  SplitMatrices out;
  out.side_a = tree.split(e);
  for (Node leaf = 1; leaf <= tree.leaves(); ++leaf)
    if (!std::binary_search(out.side_a.begin(), out.side_a.end(), leaf)) out.side_b.push_back(leaf);
  auto strings = [](std::size_t len) {
    std::vector<std::string> all;
    for (std::size_t k = 0; k < (std::size_t{1} << len); ++k) {
      std::string s(len, '0');
      for (std::size_t j = 0; j < len; ++j)
        if ((k >> (len - 1 - j)) & 1) s[j] = '1';
      all.push_back(s);
    }
    return all;
  };
  auto parity = [](const std::string& s) { return std::count(s.begin(), s.end(), '1') % 2; };
  auto rows = strings(out.side_a.size()), cols = strings(out.side_b.size());
  for (const auto& ra : rows) {
    auto p = parity(ra);
    std::vector<std::size_t> row;
    for (const auto& cb : cols) {
      if (parity(cb) != p) continue;
      std::string bits(tree.leaves(), '0');
      for (std::size_t k = 0; k < ra.size(); ++k) bits[out.side_a[k] - 1] = ra[k];
      for (std::size_t k = 0; k < cb.size(); ++k) bits[out.side_b[k] - 1] = cb[k];
      row.push_back(fourier_position(bits));
    }
    out.M[p].push_back(std::move(row));
  }
  return out;
}

FormSpace phylo_quadrics(const Tree& tree) {
  VarSet vars = fourier_vars(tree.leaves());
  const std::size_t nv = vars.size();
  auto q = [&](std::size_t i) { return Monomial::variable(nv, i); };
  std::vector<Polynomial> minors;
  for (std::size_t e : tree.internal_edges()) {
    auto sm = split_matrices(tree, e);
    for (const auto& M : sm.M)
      for (std::size_t r1 = 0; r1 < M.size(); ++r1)
        for (std::size_t r2 = r1 + 1; r2 < M.size(); ++r2)
          for (std::size_t c1 = 0; c1 < M[r1].size(); ++c1)
            for (std::size_t c2 = c1 + 1; c2 < M[r1].size(); ++c2) {
              Polynomial p(vars);
              p.add_term(q(M[r1][c1]) * q(M[r2][c2]), 1);
              p.add_term(q(M[r1][c2]) * q(M[r2][c1]), -1);
              minors.push_back(std::move(p));
            }
  }
  return make_formspace(vars, 2, minors);
}

MonomialMap phylo_parametrization(const Tree& tree) {
  std::vector<std::string> names;
  for (const auto& [u, v] : tree.edges()) names.push_back("t" + std::to_string(u) + "_" + std::to_string(v));
  VarSet params(std::move(names));
  VarSet targets = fourier_vars(tree.leaves());
  std::vector<Monomial> images;
  for (const auto& bits : fourier_indices(tree.leaves())) {
    auto labels = edge_labeling(tree, bits);
    std::vector<Monomial::Exponent> e(labels.begin(), labels.end());
    images.emplace_back(std::move(e));
  }
  return MonomialMap(params, targets, std::move(images));
}

std::optional<std::size_t> Frame::active_position(std::size_t e) const {
  auto it = std::lower_bound(active.begin(), active.end(), e);
  if (it == active.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - active.begin());
}

Frame make_frame(const Tree& tree, const std::map<std::size_t, Label>& labels) {
  if (labels.empty()) throw FrameSystemError("frame has no labelled edges");
  std::map<Node, std::size_t> degree;
  for (const auto& [e, l] : labels) {
    if (e >= tree.edges().size()) throw FrameSystemError("frame edge id out of range");
    if (l > 1) throw FrameSystemError("frame labels must be 0 or 1");
    ++degree[tree.edges()[e].first];
    ++degree[tree.edges()[e].second];
  }
  Frame f;
  f.labels = labels;
  for (const auto& [v, deg] : degree) {
    if (deg == 3) f.core.push_back(v);
    else if (deg != 1) throw FrameSystemError("frame subtree is not trivalent at node " + std::to_string(v));
  }
  if (f.core.empty()) throw FrameSystemError("frame subtree has no trivalent node");
  // Edge count = nodes - 1 together with connectivity of the core makes T(F) a tree.
  if (labels.size() + 1 != degree.size()) throw FrameSystemError("frame subtree is not connected");
  for (Node v : f.core) {
    unsigned p = 0;
    for (std::size_t e : tree.incident_edges(v)) p ^= labels.at(e);
    if (p) throw FrameSystemError("frame labels are odd at node " + std::to_string(v));
  }
  for (const auto& [e, l] : labels) {
    const auto& [u, v] = tree.edges()[e];
    if (degree[u] == 3 && degree[v] == 3) continue;
    if (degree[u] == 1 && degree[v] == 1) throw FrameSystemError("frame contains an isolated edge");
    Node outer = degree[u] == 1 ? u : v;
    if (!tree.is_leaf(outer)) {
      f.active.push_back(e);
      f.outer.push_back(outer);
    }
  }
  return f;
}

Hanging hanging_labelings(const Tree& tree, const Frame& frame, std::size_t e) {
  auto pos = frame.active_position(e);
  if (!pos) throw FrameSystemError("edge is not active in the frame");
  Node outer = frame.outer[*pos];
  auto beyond = tree.side(e, outer);
  Hanging h;
  std::vector<Node> internal;
  for (std::size_t k = 0; k < tree.edges().size(); ++k)
    if (k != e && beyond[tree.edges()[k].first] && beyond[tree.edges()[k].second]) h.edges.push_back(k);
  for (Node v = 1; v <= tree.nodes(); ++v)
    if (beyond[v] && !tree.is_leaf(v)) internal.push_back(v);
  const std::size_t m = h.edges.size();
  std::map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < m; ++k) local[h.edges[k]] = k;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<Label> lab(m);
    for (std::size_t k = 0; k < m; ++k) lab[k] = (mask >> (m - 1 - k)) & 1;
    bool ok = true;
    for (Node v : internal) {
      unsigned p = 0;
      for (std::size_t k : tree.incident_edges(v)) p ^= k == e ? frame.label(e) : lab[local.at(k)];
      if (p) {
        ok = false;
        break;
      }
    }
    if (ok) h.labelings.push_back(std::move(lab));
  }
  return h;
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

std::string pair_name(const FramePair& p) {
  return "e(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

std::size_t efun_at(const std::map<FramePair, std::size_t>& efun, std::size_t i, std::size_t j) {
  return efun.at(std::minmax(i, j));
}

}  // namespace

std::optional<std::string> compatibility_error(const std::vector<Frame>& frames,
                                               const std::map<FramePair, std::size_t>& efun) {
  const std::size_t d = frames.size();
  if (d < 2) return "a frame system needs at least two frames";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!efun.count({i, j})) return "condition (1): " + pair_name({i, j}) + " is undefined";
  for (const auto& [p, e] : efun) {
    if (p.first >= p.second || p.second >= d) return "condition (1): bad frame pair " + pair_name(p);
    const Frame &a = frames[p.first], &b = frames[p.second];
    if (!a.active_position(e) || !b.active_position(e))
      return "condition (1): " + pair_name(p) + " is not active in both frames";
    if (a.label(e) != b.label(e)) return "condition (1): frames disagree on the label of " + pair_name(p);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (i == j || j == k || i == k) continue;
        if (efun_at(efun, i, j) == efun_at(efun, j, k) && efun_at(efun, i, j) != efun_at(efun, i, k))
          return "condition (2): e(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = e(" +
                 std::to_string(j + 1) + "," + std::to_string(k + 1) + ") but differs from e(" +
                 std::to_string(i + 1) + "," + std::to_string(k + 1) + ")";
      }
  for (std::size_t j = 0; j < d; ++j) {
    std::set<std::size_t> covered;
    for (std::size_t i = 0; i < d; ++i)
      if (i != j) covered.insert(efun_at(efun, i, j));
    if (covered != std::set<std::size_t>(frames[j].active.begin(), frames[j].active.end()))
      return "condition (3): the edges e(i," + std::to_string(j + 1) + ") do not cover a(F_" + std::to_string(j + 1) +
             ")";
  }
  for (const auto& [p, e] : efun) {
    const Frame &a = frames[p.first], &b = frames[p.second];
    if (a.outer[*a.active_position(e)] != b.outer[*b.active_position(e)])
      return "frames " + std::to_string(p.first + 1) + " and " + std::to_string(p.second + 1) +
             " lie on opposite sides of their shared edge";
  }
  return std::nullopt;
}

std::vector<CompletionClass> completion_classes(const std::vector<Frame>& frames,
                                                const std::map<FramePair, std::size_t>& efun) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (frame, edge)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot_id;
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t e : frames[i].active) {
      slot_id[{i, e}] = slots.size();
      slots.emplace_back(i, e);
    }
  UnionFind uf(slots.size());
  for (const auto& [p, e] : efun) {
    auto a = slot_id.find({p.first, e}), b = slot_id.find({p.second, e});
    if (a != slot_id.end() && b != slot_id.end()) uf.unite(a->second, b->second);
  }
  std::map<std::size_t, CompletionClass> by_root;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    auto& c = by_root[uf.find(s)];
    c.edge = slots[s].second;
    c.members.push_back(slots[s].first);
  }
  std::vector<CompletionClass> out;
  for (auto& [root, c] : by_root) out.push_back(std::move(c));
  return out;
}

void validate_frame_system(const Tree& tree, const FrameSystem& sys) {
  if (auto err = compatibility_error(sys.frames, sys.efun)) throw FrameSystemError(*err);
  auto expected = completion_classes(sys.frames, sys.efun);
  if (expected.size() != sys.classes.size())
    throw FrameSystemError("expected " + std::to_string(expected.size()) + " completion classes, got " +
                           std::to_string(sys.classes.size()));
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto& c = sys.classes[k];
    if (c.edge != expected[k].edge || c.members != expected[k].members)
      throw FrameSystemError("completion class " + std::to_string(k + 1) + " does not match the e-function");
    if (c.completions.size() != c.members.size())
      throw FrameSystemError("completion class " + std::to_string(k + 1) + " needs " +
                             std::to_string(c.members.size()) + " labelings");
    std::set<std::vector<Label>> distinct(c.completions.begin(), c.completions.end());
    if (distinct.size() != c.completions.size())
      throw FrameSystemError("completion class " + std::to_string(k + 1) + " repeats a labeling");
    for (std::size_t i : c.members) {
      auto h = hanging_labelings(tree, sys.frames[i], c.edge);
      for (const auto& lab : c.completions)
        if (std::find(h.labelings.begin(), h.labelings.end(), lab) == h.labelings.end())
          throw FrameSystemError("a labeling in completion class " + std::to_string(k + 1) +
                                 " does not complete frame " + std::to_string(i + 1));
    }
  }
}

namespace {

int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

Polynomial frame_polynomial(const Tree& tree, const FrameSystem& sys) {
  validate_frame_system(tree, sys);
  VarSet vars = fourier_vars(tree.leaves());
  const std::size_t nv = vars.size();
  const std::size_t d = sys.frames.size();
  std::vector<Hanging> hang;  // hanging edge lists per class
  for (const auto& c : sys.classes) hang.push_back(hanging_labelings(tree, sys.frames[c.members.front()], c.edge));
  std::vector<std::vector<std::size_t>> perm;
  for (const auto& c : sys.classes) {
    std::vector<std::size_t> p(c.members.size());
    std::iota(p.begin(), p.end(), 0);
    perm.push_back(std::move(p));
  }
  Polynomial out(vars);
  for (;;) {
    int sign = 1;
    std::vector<EdgeLabeling> full(d, EdgeLabeling(tree.edges().size(), 0));
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& [e, l] : sys.frames[i].labels) full[i][e] = l;
    for (std::size_t k = 0; k < sys.classes.size(); ++k) {
      const auto& c = sys.classes[k];
      sign *= permutation_sign(perm[k]);
      for (std::size_t slot = 0; slot < c.members.size(); ++slot) {
        const auto& lab = c.completions[perm[k][slot]];
        for (std::size_t h = 0; h < hang[k].edges.size(); ++h) full[c.members[slot]][hang[k].edges[h]] = lab[h];
      }
    }
    Monomial mono(nv);
    for (const auto& lab : full) mono = mono * Monomial::variable(nv, fourier_position(socket_index(tree, lab)));
    out.add_term(mono, Rational(sign));
    // Odometer over the per-class permutations.
    std::size_t k = 0;
    while (k < perm.size() && !std::next_permutation(perm[k].begin(), perm[k].end())) ++k;
    if (k == perm.size()) break;
  }
  return out;
}

std::vector<Frame> enumerate_frames(const Tree& tree, std::size_t min_active, std::size_t max_active) {
  std::vector<Node> internal;
  for (Node v = static_cast<Node>(tree.leaves()) + 1; v <= tree.nodes(); ++v) internal.push_back(v);
  const std::size_t k = internal.size();
  if (k > 20) throw std::invalid_argument("enumerate_frames: tree too large");
  std::vector<Frame> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Node> core;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) core.push_back(internal[i]);
    // Connectivity of the core inside T.
    std::set<Node> inside(core.begin(), core.end()), seen{core.front()};
    std::vector<Node> stack{core.front()};
    while (!stack.empty()) {
      Node v = stack.back();
      stack.pop_back();
      for (Node w : tree.neighbours(v))
        if (inside.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != core.size()) continue;
    std::set<std::size_t> edge_set;
    for (Node v : core)
      for (std::size_t e : tree.incident_edges(v)) edge_set.insert(e);
    std::vector<std::size_t> edges(edge_set.begin(), edge_set.end());
    for (std::size_t lm = 0; lm < (std::size_t{1} << edges.size()); ++lm) {
      std::map<std::size_t, Label> labels;
      for (std::size_t i = 0; i < edges.size(); ++i) labels[edges[i]] = (lm >> (edges.size() - 1 - i)) & 1;
      bool even = true;
      for (Node v : core) {
        unsigned p = 0;
        for (std::size_t e : tree.incident_edges(v)) p ^= labels[e];
        if (p) even = false;
      }
      if (!even) continue;
      Frame f = make_frame(tree, labels);
      if (f.active.size() >= min_active && f.active.size() <= max_active) out.push_back(std::move(f));
    }
  }
  return out;
}

namespace {

// Edges e(i, j) may take: shared active edges with equal label and outer node.
std::vector<std::size_t> candidate_edges(const Frame& a, const Frame& b) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < a.active.size(); ++p) {
    std::size_t e = a.active[p];
    auto q = b.active_position(e);
    if (q && a.label(e) == b.label(e) && a.outer[p] == b.outer[*q]) out.push_back(e);
  }
  return out;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  for (;;) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<FrameSystem> enumerate_frame_systems(const Tree& tree, std::size_t d, std::size_t limit) {
  if (d < 2) throw std::invalid_argument("enumerate_frame_systems: d must be at least 2");
  auto frames = enumerate_frames(tree, 1, d - 1);
  const std::size_t F = frames.size();
  std::vector<std::vector<std::vector<std::size_t>>> cand(F, std::vector<std::vector<std::size_t>>(F));
  for (std::size_t a = 0; a < F; ++a)
    for (std::size_t b = 0; b < F; ++b) cand[a][b] = candidate_edges(frames[a], frames[b]);

  std::vector<FrameSystem> out;
  auto full = [&] { return limit > 0 && out.size() >= limit; };
  std::vector<std::size_t> chosen;

  auto emit_for = [&](const std::vector<std::size_t>& idx) {
    std::vector<Frame> fs;
    for (std::size_t i : idx) fs.push_back(frames[i]);
    std::vector<FramePair> pairs;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
    std::map<FramePair, std::size_t> efun;
    std::function<void(std::size_t)> assign = [&](std::size_t p) {
      if (full()) return;
      if (p == pairs.size()) {
        if (compatibility_error(fs, efun)) return;
        auto classes = completion_classes(fs, efun);
        std::vector<std::vector<std::vector<Label>>> options;
        std::vector<std::vector<std::vector<std::size_t>>> subsets;
        for (const auto& c : classes) {
          auto h = hanging_labelings(tree, fs[c.members.front()], c.edge);
          auto subs = combinations(h.labelings.size(), c.members.size());
          if (subs.empty()) return;
          options.push_back(std::move(h.labelings));
          subsets.push_back(std::move(subs));
        }
        std::vector<std::size_t> pick(classes.size(), 0);
        for (;;) {
          FrameSystem sys{fs, efun, classes};
          for (std::size_t k = 0; k < classes.size(); ++k)
            for (std::size_t s : subsets[k][pick[k]]) sys.classes[k].completions.push_back(options[k][s]);
          out.push_back(std::move(sys));
          if (full()) return;
          std::size_t k = 0;
          while (k < pick.size() && ++pick[k] == subsets[k].size()) pick[k++] = 0;
          if (k == pick.size()) break;
        }
        return;
      }
      auto [i, j] = pairs[p];
      for (std::size_t e : cand[idx[i]][idx[j]]) {
        efun[pairs[p]] = e;
        assign(p + 1);
      }
      efun.erase(pairs[p]);
    };
    assign(0);
  };

  std::function<void(std::size_t)> search = [&](std::size_t start) {
    if (full()) return;
    if (chosen.size() == d) {
      emit_for(chosen);
      return;
    }
    for (std::size_t f = start; f < F; ++f) {
      bool ok = true;
      for (std::size_t g : chosen)
        if (cand[g][f].empty()) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(f);
      search(f);
      chosen.pop_back();
      if (full()) return;
    }
  };
  search(0);
  return out;
}

std::vector<Polynomial> frame_polynomials(const Tree& tree, std::size_t d, std::size_t limit) {
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  for (const auto& sys : enumerate_frame_systems(tree, d, limit)) {
    Polynomial p = frame_polynomial(tree, sys);
    if (p.is_zero()) continue;
    if (seen.insert(normalized(p).to_string()).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace prolong
