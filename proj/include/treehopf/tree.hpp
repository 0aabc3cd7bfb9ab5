#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace treehopf {

/// Mutable, unnormalized rooted tree used as input to canonicalization.
/// label == 0 means "unlabelled"; the root label is always ignored.
struct RawTree {
  int label = 0;
  std::vector<RawTree> children;
};

namespace detail {

// Canonical internal node. Children are kept sorted ascending by their
// canonical encoding, so structural equality is encoding equality.
struct Node {
  int label = 0;
  std::vector<Node> children;

  bool operator==(const Node& o) const = default;
};

std::string encode(const Node& n, bool as_root);
void canonicalize(Node& n);
int degree(const Node& n);
Node from_raw(const RawTree& r);

// Pre-order vertex paths: index 0 is the root, non-root vertices are
// numbered 1..degree in canonical pre-order. A path lists child positions.
std::vector<std::vector<int>> vertex_paths(const Node& n);
Node* follow_path(Node& n, const std::vector<int>& path);

std::int64_t symmetry_order(const Node& n);

// All grafting maps of the root branches of `a` onto vertices of `b`.
// Each entry: (target vertex index per root branch of a, resulting tree).
std::vector<std::pair<std::vector<int>, Node>> graft_all(const Node& a, const Node& b);

Node root_graft(const Node& a, const Node& b);

struct NodeCut {
  Node pruned;
  Node remaining;
  std::set<int> cut_vertices;  // pre-order indices in the original tree
};
std::vector<NodeCut> admissible_cuts(const Node& n);

std::vector<Node> root_branches(const Node& n);

}  // namespace detail

/// Canonical unlabelled non-planar rooted tree. Immutable after construction.
class TreeShape {
 public:
  TreeShape() : TreeShape(detail::Node{}) {}
  explicit TreeShape(detail::Node n);

  static TreeShape from_raw(const RawTree& raw);

  const std::string& encoding() const { return enc_; }
  int degree() const { return degree_; }
  int root_arity() const { return static_cast<int>(node_.children.size()); }
  const detail::Node& node() const { return node_; }

  std::vector<TreeShape> children() const;

  bool operator==(const TreeShape& o) const { return enc_ == o.enc_; }
  bool operator<(const TreeShape& o) const {
    if (degree_ != o.degree_) return degree_ < o.degree_;
    return enc_ < o.enc_;
  }

 private:
  detail::Node node_;
  int degree_;
  std::string enc_;
};

struct Grafting {
  std::vector<int> assignment;  // per root branch of t: vertex index in s
  TreeShape result;
};

struct CutResult {
  TreeShape pruned;     // P^C
  TreeShape remaining;  // R^C
  std::set<int> cut_vertices;
};

TreeShape canonicalize(const RawTree& raw);

/// All canonical shapes of degree <= max_degree, sorted, no duplicates.
std::vector<TreeShape> enumerate_shapes(int max_degree, int degree_cap = 8);

std::int64_t symmetry_order(const TreeShape& t);
std::vector<Grafting> graftings(const TreeShape& t, const TreeShape& s);
TreeShape root_graft(const TreeShape& t, const TreeShape& s);
std::vector<CutResult> admissible_cuts(const TreeShape& t);
std::vector<TreeShape> decompose_root_branches(const TreeShape& t);

/// Flat view: (parent index, label) per vertex in canonical pre-order.
/// Index 0 is the root with parent -1 and label 0.
std::vector<std::pair<int, int>> flatten(const detail::Node& n);

}  // namespace treehopf
