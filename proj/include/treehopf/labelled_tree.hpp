#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "treehopf/tree.hpp"

namespace treehopf {

/// Canonical labelled tree over R^d: every non-root vertex carries a label
/// index in {1..d}. Basis element of the labelled tree algebra.
class LabelledTree {
 public:
  LabelledTree() : LabelledTree(detail::Node{}, 1) {}
  LabelledTree(detail::Node n, int dim);

  /// Canonical label form; throws on labels outside {1..d}.
  static LabelledTree from_raw(const RawTree& raw, int dim);

  const std::string& encoding() const { return enc_; }
  int degree() const { return degree_; }
  int dim() const { return dim_; }
  int root_arity() const { return static_cast<int>(node_.children.size()); }
  const detail::Node& node() const { return node_; }

  TreeShape shape() const;

  bool operator==(const LabelledTree& o) const { return enc_ == o.enc_; }
  bool operator<(const LabelledTree& o) const {
    if (degree_ != o.degree_) return degree_ < o.degree_;
    return enc_ < o.enc_;
  }

 private:
  detail::Node node_;
  int dim_;
  int degree_;
  std::string enc_;
};

/// |{sigma in SG(shape) : sigma fixes the labelling}|.
std::int64_t internal_symmetry_count(const LabelledTree& lt);

/// Number of shape symmetries carrying the labelling of `a` onto the
/// labelling of `b`; zero when the shapes differ.
std::int64_t pairing_count(const LabelledTree& a, const LabelledTree& b);

std::vector<LabelledTree> labelled_graftings(const LabelledTree& t, const LabelledTree& s);
LabelledTree labelled_root_graft(const LabelledTree& t, const LabelledTree& s);
std::vector<std::pair<LabelledTree, LabelledTree>> labelled_cuts(const LabelledTree& t);
std::vector<LabelledTree> labelled_root_branches(const LabelledTree& t);

LabelledTree bullet(int label, int dim);
LabelledTree empty_tree(int dim);

/// All canonical labelled trees of degree <= max_degree over {1..d}.
std::vector<LabelledTree> enumerate_labelled_trees(int max_degree, int dim,
                                                   int degree_cap = 8);

}  // namespace treehopf
