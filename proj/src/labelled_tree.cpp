#include "treehopf/labelled_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace treehopf {

namespace {

void check_labels(const detail::Node& n, int dim, bool root) {
  if (!root && (n.label < 1 || n.label > dim))
    throw std::invalid_argument("label " + std::to_string(n.label) +
                                " out of range 1.." + std::to_string(dim));
  for (const auto& c : n.children) check_labels(c, dim, false);
}

// Sum over bijections between the child lists of x and y of the product of
// per-pair symmetry counts. Children are canonical, so grouping by encoding
// keeps the brute force tiny.
std::int64_t match_children(const std::vector<detail::Node>& xs,
                            const std::vector<detail::Node>& ys);

std::int64_t pair_count_nodes(const detail::Node& x, const detail::Node& y, bool root) {
  if (!root && x.label != y.label) return 0;
  return match_children(x.children, y.children);
}

std::int64_t match_children(const std::vector<detail::Node>& xs,
                            const std::vector<detail::Node>& ys) {
  if (xs.size() != ys.size()) return 0;
  const std::size_t k = xs.size();
  std::vector<int> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
  std::int64_t total = 0;
  do {
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < k && prod != 0; ++i)
      prod *= pair_count_nodes(xs[i], ys[static_cast<std::size_t>(perm[i])], false);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

LabelledTree::LabelledTree(detail::Node n, int dim) : node_(std::move(n)), dim_(dim) {
  degree_ = detail::degree(node_);
  enc_ = detail::encode(node_, true);
}

LabelledTree LabelledTree::from_raw(const RawTree& raw, int dim) {
  detail::Node n = detail::from_raw(raw);
  check_labels(n, dim, true);
  detail::canonicalize(n);
  return LabelledTree(std::move(n), dim);
}

TreeShape LabelledTree::shape() const {
  RawTree raw;
  auto rec = [](auto&& self, const detail::Node& v) -> RawTree {
    RawTree r;
    for (const auto& c : v.children) r.children.push_back(self(self, c));
    return r;
  };
  raw = rec(rec, node_);
  return TreeShape::from_raw(raw);
}

std::int64_t internal_symmetry_count(const LabelledTree& lt) {
  // product over groups of identical labelled children of m!, recursively
  auto rec = [](auto&& self, const detail::Node& v) -> std::int64_t {
    std::int64_t result = 1;
    std::size_t i = 0;
    while (i < v.children.size()) {
      const std::string key = detail::encode(v.children[i], false);
      std::int64_t mult = 0;
      std::size_t j = i;
      while (j < v.children.size() && detail::encode(v.children[j], false) == key) {
        ++mult;
        result *= mult;
        ++j;
      }
      for (std::int64_t m = 0; m < mult; ++m) result *= self(self, v.children[i]);
      i = j;
    }
    return result;
  };
  return rec(rec, lt.node());
}

std::int64_t pairing_count(const LabelledTree& a, const LabelledTree& b) {
  if (a.degree() != b.degree()) return 0;
  return pair_count_nodes(a.node(), b.node(), true);
}

std::vector<LabelledTree> labelled_graftings(const LabelledTree& t, const LabelledTree& s) {
  if (t.dim() != s.dim()) throw std::invalid_argument("dimension mismatch in grafting");
  std::vector<LabelledTree> out;
  for (auto& [assign, node] : detail::graft_all(t.node(), s.node()))
    out.emplace_back(std::move(node), t.dim());
  return out;
}

LabelledTree labelled_root_graft(const LabelledTree& t, const LabelledTree& s) {
  if (t.dim() != s.dim()) throw std::invalid_argument("dimension mismatch in root graft");
  return LabelledTree(detail::root_graft(t.node(), s.node()), t.dim());
}

std::vector<std::pair<LabelledTree, LabelledTree>> labelled_cuts(const LabelledTree& t) {
  std::vector<std::pair<LabelledTree, LabelledTree>> out;
  for (auto& nc : detail::admissible_cuts(t.node()))
    out.emplace_back(LabelledTree(std::move(nc.pruned), t.dim()),
                     LabelledTree(std::move(nc.remaining), t.dim()));
  return out;
}

std::vector<LabelledTree> labelled_root_branches(const LabelledTree& t) {
  std::vector<LabelledTree> out;
  for (auto& b : detail::root_branches(t.node())) out.emplace_back(std::move(b), t.dim());
  std::sort(out.begin(), out.end());
  return out;
}

LabelledTree bullet(int label, int dim) {
  RawTree r;
  r.children.push_back(RawTree{label, {}});
  return LabelledTree::from_raw(r, dim);
}

LabelledTree empty_tree(int dim) { return LabelledTree(detail::Node{}, dim); }

std::vector<LabelledTree> enumerate_labelled_trees(int max_degree, int dim, int degree_cap) {
  const auto shapes = enumerate_shapes(max_degree, degree_cap);
  std::vector<LabelledTree> out;
  for (const auto& sh : shapes) {
    const int n = sh.degree();
    std::vector<int> labels(static_cast<std::size_t>(n), 1);
    std::vector<LabelledTree> seen;
    while (true) {
      // write labels onto non-root vertices in pre-order
      detail::Node node = sh.node();
      int idx = 0;
      auto put = [&](auto&& self, detail::Node& v, bool root) -> void {
        if (!root) v.label = labels[static_cast<std::size_t>(idx++)];
        for (auto& c : v.children) self(self, c, false);
      };
      put(put, node, true);
      detail::canonicalize(node);
      seen.emplace_back(std::move(node), dim);

      int k = n - 1;
      while (k >= 0 && labels[static_cast<std::size_t>(k)] == dim) {
        labels[static_cast<std::size_t>(k)] = 1;
        --k;
      }
      if (k < 0) break;
      ++labels[static_cast<std::size_t>(k)];
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    out.insert(out.end(), seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace treehopf
