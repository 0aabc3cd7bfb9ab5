#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "treehopf/labelled_tree.hpp"

namespace treehopf {

using Rational = boost::multiprecision::cpp_rational;

inline std::string coeff_to_string(const Rational& c) { return c.str(); }
inline std::string coeff_to_string(double c) {
  std::ostringstream os;
  os.precision(15);
  os << c;
  return os.str();
}

/// Finite linear combination of labelled trees, graded by degree.
/// Terms are kept sorted by (degree, encoding); zero coefficients are dropped.
template <class C>
class TreeSeries {
 public:
  explicit TreeSeries(int dim, std::optional<int> truncation = std::nullopt)
      : dim_(dim), truncation_(truncation) {}

  int dim() const { return dim_; }
  const std::optional<int>& truncation() const { return truncation_; }
  void set_truncation(std::optional<int> t) {
    truncation_ = t;
    if (t)
      for (auto it = terms_.begin(); it != terms_.end();)
        it = it->first.degree() > *t ? terms_.erase(it) : std::next(it);
  }

  const std::map<LabelledTree, C>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coefficient(const LabelledTree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const LabelledTree& t, const C& c) {
    if (t.dim() != dim_) throw std::invalid_argument("dimension mismatch in add_term");
    if (truncation_ && t.degree() > *truncation_) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      if (!(c == C(0))) terms_.emplace(t, c);
    } else {
      it->second += c;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  TreeSeries& operator+=(const TreeSeries& o) {
    require_same_dim(o);
    truncation_ = min_trunc(truncation_, o.truncation_);
    if (truncation_) set_truncation(truncation_);
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
  }
  TreeSeries& operator-=(const TreeSeries& o) {
    require_same_dim(o);
    truncation_ = min_trunc(truncation_, o.truncation_);
    if (truncation_) set_truncation(truncation_);
    for (const auto& [t, c] : o.terms_) add_term(t, C(0) - c);
    return *this;
  }
  TreeSeries& operator*=(const C& c) {
    if (c == C(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, v] : terms_) v *= c;
    return *this;
  }

  friend TreeSeries operator+(TreeSeries a, const TreeSeries& b) { return a += b; }
  friend TreeSeries operator-(TreeSeries a, const TreeSeries& b) { return a -= b; }
  friend TreeSeries operator*(const C& c, TreeSeries a) { return a *= c; }

  bool operator==(const TreeSeries& o) const { return terms_ == o.terms_; }

  static std::optional<int> min_trunc(const std::optional<int>& a, const std::optional<int>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  }

 private:
  void require_same_dim(const TreeSeries& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch in series op");
  }

  int dim_;
  std::optional<int> truncation_;
  std::map<LabelledTree, C> terms_;
};

template <class C>
TreeSeries<C> unit_series(int dim, std::optional<int> trunc = std::nullopt) {
  TreeSeries<C> s(dim, trunc);
  s.add_term(empty_tree(dim), C(1));
  return s;
}

template <class C>
TreeSeries<C> basis_series(const LabelledTree& t, std::optional<int> trunc = std::nullopt) {
  TreeSeries<C> s(t.dim(), trunc);
  s.add_term(t, C(1));
  return s;
}

// pi^k: keep degree == k
template <class C>
TreeSeries<C> project_degree(const TreeSeries<C>& a, int k) {
  TreeSeries<C> r(a.dim(), a.truncation());
  for (const auto& [t, c] : a.terms())
    if (t.degree() == k) r.add_term(t, c);
  return r;
}

// pi_k: keep root arity == k
template <class C>
TreeSeries<C> project_root_arity(const TreeSeries<C>& a, int k) {
  TreeSeries<C> r(a.dim(), a.truncation());
  for (const auto& [t, c] : a.terms())
    if (t.root_arity() == k) r.add_term(t, c);
  return r;
}

// pi^(k): keep degree <= k
template <class C>
TreeSeries<C> truncate(const TreeSeries<C>& a, int k) {
  TreeSeries<C> r(a.dim(), k);
  for (const auto& [t, c] : a.terms())
    if (t.degree() <= k) r.add_term(t, c);
  return r;
}

// pi^(k)_n
template <class C>
TreeSeries<C> project_both(const TreeSeries<C>& a, int k, int n) {
  return project_root_arity(truncate(a, k), n);
}

template <class C>
std::string to_string(const TreeSeries<C>& a) {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    s += coeff_to_string(c) + "*" + t.encoding();
  }
  return s;
}

/// Finite sum of tree tensor pairs, used for coproduct values.
template <class C>
class TensorSeries {
 public:
  using Key = std::pair<LabelledTree, LabelledTree>;

  struct KeyOrder {
    bool operator()(const Key& a, const Key& b) const {
      const int da = a.first.degree() + a.second.degree();
      const int db = b.first.degree() + b.second.degree();
      if (da != db) return da < db;
      if (!(a.first == b.first)) return a.first < b.first;
      return a.second < b.second;
    }
  };

  explicit TensorSeries(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::map<Key, C, KeyOrder>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const LabelledTree& l, const LabelledTree& r, const C& c) {
    if (l.dim() != dim_ || r.dim() != dim_)
      throw std::invalid_argument("dimension mismatch in tensor term");
    Key k{l, r};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!(c == C(0))) terms_.emplace(std::move(k), c);
    } else {
      it->second += c;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  TensorSeries& operator+=(const TensorSeries& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  TensorSeries& operator-=(const TensorSeries& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, C(0) - c);
    return *this;
  }
  bool operator==(const TensorSeries& o) const { return terms_ == o.terms_; }

 private:
  int dim_;
  std::map<Key, C, KeyOrder> terms_;
};

template <class C>
std::string to_string(const TensorSeries<C>& a) {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    s += coeff_to_string(c) + "*" + k.first.encoding() + " ⊗ " + k.second.encoding();
  }
  return s;
}

}  // namespace treehopf
