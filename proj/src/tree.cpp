#include "treehopf/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace treehopf {
namespace detail {

std::string encode(const Node& n, bool as_root) {
  std::string s = as_root ? "o" : (n.label == 0 ? "•" : std::to_string(n.label));
  if (!n.children.empty()) {
    s += '(';
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i) s += ' ';
      s += encode(n.children[i], false);
    }
    s += ')';
  }
  return s;
}

void canonicalize(Node& n) {
  for (auto& c : n.children) canonicalize(c);
  std::sort(n.children.begin(), n.children.end(), [](const Node& a, const Node& b) {
    return encode(a, false) < encode(b, false);
  });
}

int degree(const Node& n) {
  int d = 0;
  for (const auto& c : n.children) d += 1 + degree(c);
  return d;
}

Node from_raw(const RawTree& r) {
  Node n;
  n.label = r.label;
  n.children.reserve(r.children.size());
  for (const auto& c : r.children) n.children.push_back(from_raw(c));
  return n;
}

namespace {

void collect_paths(const Node& n, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    cur.push_back(static_cast<int>(i));
    collect_paths(n.children[i], cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> vertex_paths(const Node& n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  collect_paths(n, cur, out);
  return out;
}

Node* follow_path(Node& n, const std::vector<int>& path) {
  Node* p = &n;
  for (int i : path) p = &p->children[static_cast<std::size_t>(i)];
  return p;
}

std::int64_t symmetry_order(const Node& n) {
  std::int64_t result = 1;
  std::size_t i = 0;
  while (i < n.children.size()) {
    std::size_t j = i;
    const std::string key = encode(n.children[i], false);
    std::int64_t mult = 0;
    while (j < n.children.size() && encode(n.children[j], false) == key) {
      ++mult;
      result *= mult;  // accumulates mult!
      ++j;
    }
    result *= [&] {
      std::int64_t s = symmetry_order(n.children[i]);
      std::int64_t p = 1;
      for (std::int64_t k = 0; k < mult; ++k) p *= s;
      return p;
    }();
    i = j;
  }
  return result;
}

std::vector<std::pair<std::vector<int>, Node>> graft_all(const Node& a, const Node& b) {
  const auto paths = vertex_paths(b);
  const int nverts = static_cast<int>(paths.size());
  const int arity = static_cast<int>(a.children.size());

  std::vector<std::pair<std::vector<int>, Node>> out;
  std::vector<int> assign(static_cast<std::size_t>(arity), 0);
  while (true) {
    Node r = b;
    // Appending at the end of a child list never invalidates the
    // pre-computed paths, which refer to original child positions.
    for (int j = 0; j < arity; ++j)
      follow_path(r, paths[static_cast<std::size_t>(assign[static_cast<std::size_t>(j)])])
          ->children.push_back(a.children[static_cast<std::size_t>(j)]);
    canonicalize(r);
    out.emplace_back(assign, std::move(r));

    int k = arity - 1;
    while (k >= 0 && assign[static_cast<std::size_t>(k)] == nverts - 1) {
      assign[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++assign[static_cast<std::size_t>(k)];
  }
  return out;
}

Node root_graft(const Node& a, const Node& b) {
  Node r;
  r.children = a.children;
  r.children.insert(r.children.end(), b.children.begin(), b.children.end());
  canonicalize(r);
  return r;
}

namespace {

struct SubCut {
  std::vector<Node> pruned;
  std::optional<Node> remaining;
  std::set<int> cut;
};

// Alternatives for the subtree rooted at non-root vertex `v` whose
// pre-order index is `base`.
std::vector<SubCut> subtree_cuts(const Node& v, int base) {
  std::vector<SubCut> out;
  out.push_back(SubCut{{v}, std::nullopt, {base}});

  // keep v: combine the alternatives of each child subtree
  std::vector<SubCut> acc;
  Node kept;
  kept.label = v.label;
  acc.push_back(SubCut{{}, kept, {}});
  int child_base = base + 1;
  for (const auto& c : v.children) {
    const auto child_alts = subtree_cuts(c, child_base);
    child_base += 1 + degree(c);
    std::vector<SubCut> next;
    for (const auto& got : acc) {
      for (const auto& alt : child_alts) {
        SubCut merged = got;
        merged.pruned.insert(merged.pruned.end(), alt.pruned.begin(), alt.pruned.end());
        if (alt.remaining) merged.remaining->children.push_back(*alt.remaining);
        merged.cut.insert(alt.cut.begin(), alt.cut.end());
        next.push_back(std::move(merged));
      }
    }
    acc = std::move(next);
  }
  out.insert(out.end(), acc.begin(), acc.end());
  return out;
}

}  // namespace

std::vector<NodeCut> admissible_cuts(const Node& n) {
  std::vector<SubCut> acc;
  acc.push_back(SubCut{{}, Node{}, {}});
  int child_base = 1;
  for (const auto& c : n.children) {
    const auto child_alts = subtree_cuts(c, child_base);
    child_base += 1 + degree(c);
    std::vector<SubCut> next;
    for (const auto& got : acc) {
      for (const auto& alt : child_alts) {
        SubCut merged = got;
        merged.pruned.insert(merged.pruned.end(), alt.pruned.begin(), alt.pruned.end());
        if (alt.remaining) merged.remaining->children.push_back(*alt.remaining);
        merged.cut.insert(alt.cut.begin(), alt.cut.end());
        next.push_back(std::move(merged));
      }
    }
    acc = std::move(next);
  }

  std::vector<NodeCut> out;
  out.reserve(acc.size());
  for (auto& sc : acc) {
    NodeCut nc;
    nc.pruned.children = std::move(sc.pruned);
    canonicalize(nc.pruned);
    nc.remaining = std::move(*sc.remaining);
    canonicalize(nc.remaining);
    nc.cut_vertices = std::move(sc.cut);
    out.push_back(std::move(nc));
  }
  return out;
}

std::vector<Node> root_branches(const Node& n) {
  std::vector<Node> out;
  out.reserve(n.children.size());
  for (const auto& c : n.children) {
    Node b;
    b.children.push_back(c);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace detail

TreeShape::TreeShape(detail::Node n) : node_(std::move(n)) {
  degree_ = detail::degree(node_);
  enc_ = detail::encode(node_, true);
}

TreeShape TreeShape::from_raw(const RawTree& raw) {
  detail::Node n = detail::from_raw(raw);
  // shapes are unlabelled
  struct {
    void operator()(detail::Node& x) const {
      x.label = 0;
      for (auto& c : x.children) (*this)(c);
    }
  } strip;
  strip(n);
  detail::canonicalize(n);
  return TreeShape(std::move(n));
}

std::vector<TreeShape> TreeShape::children() const {
  std::vector<TreeShape> out;
  out.reserve(node_.children.size());
  for (const auto& c : node_.children) out.emplace_back(c);
  return out;
}

TreeShape canonicalize(const RawTree& raw) { return TreeShape::from_raw(raw); }

std::vector<TreeShape> enumerate_shapes(int max_degree, int degree_cap) {
  if (max_degree < 0) throw std::invalid_argument("enumerate_shapes: negative degree");
  if (max_degree > degree_cap)
    throw std::invalid_argument("enumerate_shapes: max_degree exceeds cap " +
                                std::to_string(degree_cap));

  // by_degree[k] holds all canonical shapes of degree k
  std::vector<std::vector<detail::Node>> by_degree(static_cast<std::size_t>(max_degree) + 1);
  by_degree[0].push_back(detail::Node{});

  // branches usable inside a degree-n tree: any shape of degree <= n-1,
  // contributing size 1 + degree as a root branch
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<detail::Node> branch_pool;  // subtree hung below a new vertex
    std::vector<int> branch_size;
    for (int m = 0; m < n; ++m)
      for (const auto& s : by_degree[static_cast<std::size_t>(m)]) {
        detail::Node b;
        b.children = s.children;  // the new vertex adopts s's root children
        branch_pool.push_back(b);
        branch_size.push_back(1 + m);
      }

    std::vector<detail::Node>& target = by_degree[static_cast<std::size_t>(n)];
    // choose a multiset of branches with sizes summing to n;
    // non-decreasing pool index avoids duplicate multisets
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int remaining, int min_idx) -> void {
      if (remaining == 0) {
        detail::Node t;
        for (int idx : chosen)
          t.children.push_back(branch_pool[static_cast<std::size_t>(idx)]);
        detail::canonicalize(t);
        target.push_back(std::move(t));
        return;
      }
      for (int i = min_idx; i < static_cast<int>(branch_pool.size()); ++i) {
        if (branch_size[static_cast<std::size_t>(i)] > remaining) continue;
        chosen.push_back(i);
        self(self, remaining - branch_size[static_cast<std::size_t>(i)], i);
        chosen.pop_back();
      }
    };
    rec(rec, n, 0);
  }

  std::vector<TreeShape> out;
  for (auto& group : by_degree)
    for (auto& n : group) out.emplace_back(std::move(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t symmetry_order(const TreeShape& t) { return detail::symmetry_order(t.node()); }

std::vector<Grafting> graftings(const TreeShape& t, const TreeShape& s) {
  std::vector<Grafting> out;
  for (auto& [assign, node] : detail::graft_all(t.node(), s.node()))
    out.push_back(Grafting{assign, TreeShape(std::move(node))});
  return out;
}

TreeShape root_graft(const TreeShape& t, const TreeShape& s) {
  return TreeShape(detail::root_graft(t.node(), s.node()));
}

std::vector<CutResult> admissible_cuts(const TreeShape& t) {
  std::vector<CutResult> out;
  for (auto& nc : detail::admissible_cuts(t.node()))
    out.push_back(CutResult{TreeShape(std::move(nc.pruned)), TreeShape(std::move(nc.remaining)),
                            std::move(nc.cut_vertices)});
  return out;
}

std::vector<TreeShape> decompose_root_branches(const TreeShape& t) {
  std::vector<TreeShape> out;
  for (auto& b : detail::root_branches(t.node())) out.emplace_back(std::move(b));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> flatten(const detail::Node& n) {
  std::vector<std::pair<int, int>> out;
  auto rec = [&](auto&& self, const detail::Node& v, int parent) -> void {
    const int idx = static_cast<int>(out.size());
    out.emplace_back(parent, v.label);
    for (const auto& c : v.children) self(self, c, idx);
  };
  rec(rec, n, -1);
  return out;
}

}  // namespace treehopf
