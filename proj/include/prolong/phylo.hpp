#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prolong/formspace.hpp"
#include "prolong/secant.hpp"

namespace prolong {

using Node = unsigned;
using Edge = std::pair<Node, Node>;  // first < second
using Label = std::uint8_t;

class TreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unrooted trivalent tree: leaves 1..n, internal nodes n+1..N. Edge ids are
// positions in the sorted edge list.
class Tree {
 public:
  std::size_t leaves() const noexcept { return n_; }
  std::size_t nodes() const noexcept { return adj_.size() - 1; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::optional<std::size_t> edge_id(Node u, Node v) const;
  const std::vector<Node>& neighbours(Node v) const { return adj_.at(v); }
  bool is_leaf(Node v) const { return v >= 1 && v <= n_; }
  bool is_internal_edge(std::size_t e) const;
  std::vector<std::size_t> internal_edges() const;
  std::vector<std::size_t> incident_edges(Node v) const;

  // Leaves on side A of the split induced by e: the smaller side, or the one
  // holding leaf 1 on a tie. Sorted.
  const std::vector<Node>& split(std::size_t e) const { return split_.at(e); }
  // Nodes reachable from `from` without crossing edge e.
  std::vector<bool> side(std::size_t e, Node from) const;

  friend Tree load_tree(const std::vector<std::pair<long long, long long>>& edges);

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Node>> adj_;  // index 0 unused
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> split_;
};

Tree load_tree(const std::vector<std::pair<long long, long long>>& edges);

// Even binary strings of length n in lexicographic order.
std::vector<std::string> fourier_indices(std::size_t n);
// Variables q<bits> in fourier_indices order.
VarSet fourier_vars(std::size_t n);
// Position of an even string among fourier_indices(n).
std::size_t fourier_position(const std::string& bits);

// One label per edge id.
using EdgeLabeling = std::vector<Label>;

EdgeLabeling edge_labeling(const Tree& tree, const std::string& bits);
// Even parity at every internal node.
bool is_socket(const Tree& tree, const EdgeLabeling& labels);
// Inverse of edge_labeling on sockets: leaf j reads off the label of its edge.
std::string socket_index(const Tree& tree, const EdgeLabeling& labels);

struct SplitMatrices {
  std::vector<Node> side_a, side_b;
  // Variable indices into fourier_vars(n); M[p] has rows i_A of parity p.
  std::vector<std::vector<std::size_t>> M[2];
};

SplitMatrices split_matrices(const Tree& tree, std::size_t e);

FormSpace phylo_quadrics(const Tree& tree);

// Parameters t<u>_<v> per edge; q_i maps to the product over 1-labelled edges.
MonomialMap phylo_parametrization(const Tree& tree);

// Labels on a trivalent subtree T(F): the edges at a connected set of
// internal nodes. Active edges a(F) are the pendant edges of T(F) whose
// outer node is internal in T.
struct Frame {
  std::vector<Node> core;                // degree-3 nodes of T(F), sorted
  std::map<std::size_t, Label> labels;   // edge id -> label, on T(F)
  std::vector<std::size_t> active;       // sorted edge ids
  std::vector<Node> outer;               // outer node per active edge

  Label label(std::size_t e) const { return labels.at(e); }
  std::optional<std::size_t> active_position(std::size_t e) const;

  friend bool operator==(const Frame& a, const Frame& b) { return a.labels == b.labels; }
};

Frame make_frame(const Tree& tree, const std::map<std::size_t, Label>& labels);

// L^e: labelings of the hanging subtree T_e(F) beyond active edge e that
// complete F, in base order (lexicographic over `edges`, sorted by id).
struct Hanging {
  std::vector<std::size_t> edges;
  std::vector<std::vector<Label>> labelings;
};
Hanging hanging_labelings(const Tree& tree, const Frame& frame, std::size_t e);

using FramePair = std::pair<std::size_t, std::size_t>;  // (i, j), i < j, 0-based

struct CompletionClass {
  std::size_t edge = 0;
  std::vector<std::size_t> members;                  // frame indices, ascending
  std::vector<std::vector<Label>> completions;       // ordered C(E)
};

struct FrameSystem {
  std::vector<Frame> frames;
  std::map<FramePair, std::size_t> efun;
  std::vector<CompletionClass> classes;
};

class FrameSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// First violated compatibility condition, checked in the order (1), (2), (3),
// then that frames sharing e hang the same subtree off it.
std::optional<std::string> compatibility_error(const std::vector<Frame>& frames,
                                               const std::map<FramePair, std::size_t>& efun);

// Equivalence classes of (frame, active edge) pairs induced by efun, with
// empty completion lists; ordered by their smallest (frame, edge) member.
std::vector<CompletionClass> completion_classes(const std::vector<Frame>& frames,
                                                const std::map<FramePair, std::size_t>& efun);

// Throws FrameSystemError describing the first problem found.
void validate_frame_system(const Tree& tree, const FrameSystem& sys);

Polynomial frame_polynomial(const Tree& tree, const FrameSystem& sys);

// Frames with min_active <= |a(F)| <= max_active, ordered by core then labels.
std::vector<Frame> enumerate_frames(const Tree& tree, std::size_t min_active, std::size_t max_active);

// Compatible systems of d frames (frames in nondecreasing enumeration order),
// with completion sets taken as |E|-subsets of L^e in base order. Stops after
// `limit` systems when limit > 0.
std::vector<FrameSystem> enumerate_frame_systems(const Tree& tree, std::size_t d, std::size_t limit = 0);

// Nonzero frame polynomials, one per class up to scalar (the first one met),
// in enumeration order.
std::vector<Polynomial> frame_polynomials(const Tree& tree, std::size_t d, std::size_t limit = 0);

}  // namespace prolong
