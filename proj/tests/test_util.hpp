#pragma once

// Shared helpers for the test binaries: random tree/series generators and
// brute-force oracles kept deliberately independent of the library's own
// algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "treehopf/hopf.hpp"

namespace test_util {

using treehopf::LabelledTree;
using treehopf::Rational;
using treehopf::RawTree;
using treehopf::TreeShape;

inline RawTree random_raw_tree(std::mt19937_64& rng, int degree, int dim = 0) {
  // attach each new vertex to a uniformly random existing vertex
  std::vector<RawTree*> verts;
  RawTree root;
  verts.push_back(&root);
  std::uniform_int_distribution<int> lab(1, std::max(dim, 1));
  for (int k = 0; k < degree; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
    RawTree* parent = verts[pick(rng)];
    parent->children.push_back(RawTree{dim > 0 ? lab(rng) : 0, {}});
    // children vectors may reallocate; rebuild the vertex list
    verts.clear();
    auto walk = [&](auto&& self, RawTree& n) -> void {
      verts.push_back(&n);
      for (auto& c : n.children) self(self, c);
    };
    walk(walk, root);
  }
  return root;
}

inline void shuffle_children(std::mt19937_64& rng, RawTree& t) {
  std::shuffle(t.children.begin(), t.children.end(), rng);
  for (auto& c : t.children) shuffle_children(rng, c);
}

// Flat poset view used by the brute-force oracles: parent[i] and label[i]
// per vertex, vertex 0 = root.
struct FlatTree {
  std::vector<int> parent;
  std::vector<int> label;
};

inline void flatten_raw(const RawTree& t, int parent, FlatTree& out) {
  const int me = static_cast<int>(out.parent.size());
  out.parent.push_back(parent);
  out.label.push_back(t.label);
  for (const auto& c : t.children) flatten_raw(c, me, out);
}

inline FlatTree flatten_raw(const RawTree& t) {
  FlatTree f;
  flatten_raw(t, -1, f);
  return f;
}

// All order-preserving self-bijections of the vertex set (root fixed,
// parents mapped to parents), by brute-force permutation search.
inline std::vector<std::vector<int>> all_automorphisms(const FlatTree& f) {
  const int n = static_cast<int>(f.parent.size());
  std::vector<std::vector<int>> result;
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      result.push_back(perm);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      const int pv = f.parent[static_cast<std::size_t>(v)];
      if (pv == -1 && w != 0) continue;
      if (pv != -1 && perm[static_cast<std::size_t>(pv)] != f.parent[static_cast<std::size_t>(w)])
        continue;
      perm[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      self(self, v + 1);
      used[static_cast<std::size_t>(w)] = false;
      perm[static_cast<std::size_t>(v)] = -1;
    }
  };
  rec(rec, 0);
  return result;
}

inline std::int64_t brute_symmetry_order(const RawTree& t) {
  return static_cast<std::int64_t>(all_automorphisms(flatten_raw(t)).size());
}

// Automorphisms that preserve the labelling.
inline std::int64_t brute_label_symmetry(const RawTree& t) {
  const FlatTree f = flatten_raw(t);
  std::int64_t n = 0;
  for (const auto& perm : all_automorphisms(f)) {
    bool ok = true;
    for (std::size_t v = 0; v < perm.size(); ++v)
      if (f.label[v] != f.label[static_cast<std::size_t>(perm[v])]) ok = false;
    if (ok) ++n;
  }
  return n;
}

// Number of antichains (including the empty one) among non-root vertices.
inline std::int64_t brute_antichain_count(const RawTree& t) {
  const FlatTree f = flatten_raw(t);
  const int n = static_cast<int>(f.parent.size());
  auto is_ancestor = [&](int a, int b) {
    for (int v = f.parent[static_cast<std::size_t>(b)]; v != -1;
         v = f.parent[static_cast<std::size_t>(v)])
      if (v == a) return true;
    return false;
  };
  std::int64_t count = 0;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    bool ok = true;
    for (int a = 1; a < n && ok; ++a)
      for (int b = 1; b < n && ok; ++b)
        if (a != b && (mask & (1u << (a - 1))) && (mask & (1u << (b - 1))) &&
            is_ancestor(a, b))
          ok = false;
    if (ok) ++count;
  }
  return count;
}

// All unlabelled shapes of exactly `degree` non-root vertices, built by the
// attach-anywhere method and deduplicated through canonical encodings.
inline std::set<std::string> brute_shapes(int degree) {
  std::set<std::string> out;
  RawTree root;
  auto rec = [&](auto&& self, RawTree& tree, int left) -> void {
    if (left == 0) {
      out.insert(treehopf::canonicalize(tree).encoding());
      return;
    }
    std::vector<RawTree*> verts;
    auto walk = [&](auto&& w, RawTree& n) -> void {
      verts.push_back(&n);
      for (auto& c : n.children) w(w, c);
    };
    walk(walk, tree);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      // re-walk each time: pointers shift as children vectors grow
      std::vector<RawTree*> cur;
      auto walk2 = [&](auto&& w, RawTree& n) -> void {
        cur.push_back(&n);
        for (auto& c : n.children) w(w, c);
      };
      walk2(walk2, tree);
      cur[i]->children.push_back(RawTree{});
      self(self, tree, left - 1);
      // rebuild again before popping: recursion may have reallocated
      std::vector<RawTree*> fin;
      auto walk3 = [&](auto&& w, RawTree& n) -> void {
        fin.push_back(&n);
        for (auto& c : n.children) w(w, c);
      };
      walk3(walk3, tree);
      fin[i]->children.pop_back();
    }
  };
  rec(rec, root, degree);
  return out;
}

inline LabelledTree random_labelled_tree(std::mt19937_64& rng, int max_degree, int dim) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  return LabelledTree::from_raw(random_raw_tree(rng, deg(rng), dim), dim);
}

inline treehopf::TreeSeries<Rational> random_series(std::mt19937_64& rng, int max_degree,
                                                    int dim, int max_terms,
                                                    std::optional<int> trunc = std::nullopt) {
  treehopf::TreeSeries<Rational> s(dim, trunc);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), nterms(1, max_terms);
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k)
    s.add_term(random_labelled_tree(rng, max_degree, dim), Rational(num(rng), den(rng)));
  return s;
}

}  // namespace test_util
