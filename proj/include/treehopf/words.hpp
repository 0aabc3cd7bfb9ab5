#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "treehopf/hopf.hpp"

namespace treehopf {

using Word = std::vector<int>;  // label indices in {1..d}

/// Truncated element of the tensor algebra T(R^d) in the word basis.
template <class C>
struct WordSeries {
  int dim = 1;
  int truncation = 0;
  std::map<Word, C> terms;

  C coefficient(const Word& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? C(0) : it->second;
  }
  void add(const Word& w, const C& c) {
    if (static_cast<int>(w.size()) > truncation) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      if (!(c == C(0))) terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == C(0)) terms.erase(it);
    }
  }
};

/// Shuffle product of two words with integer multiplicities.
std::map<Word, long long> shuffle(const Word& u, const Word& v);

/// Truncated tensor (concatenation) product.
template <class C>
WordSeries<C> word_product(const WordSeries<C>& a, const WordSeries<C>& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch in word product");
  WordSeries<C> r{a.dim, std::min(a.truncation, b.truncation), {}};
  for (const auto& [u, cu] : a.terms)
    for (const auto& [v, cv] : b.terms) {
      if (static_cast<int>(u.size() + v.size()) > r.truncation) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add(w, cu * cv);
    }
  return r;
}

/// Tensor exponential of a single vector increment, truncated.
WordSeries<double> tensor_exp(const std::vector<double>& increment, int level);

struct PiecewiseLinearPath {
  std::vector<double> times;                // strictly increasing
  std::vector<std::vector<double>> points;  // one R^d sample per time

  int dim() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
  double t0() const { return times.front(); }
  double t1() const { return times.back(); }
  std::vector<double> eval(double t) const;        // linear interpolation
  std::vector<double> increment(double s, double t) const;
  double lipschitz_bound() const;
};

/// Exact truncated signature of a piecewise-linear path over [s,t].
WordSeries<double> tensor_signature_pl(const PiecewiseLinearPath& path, double s, double t,
                                       int level);

struct ShuffleCheckReport {
  bool ok = true;
  double max_error = 0.0;
  Word witness_u, witness_v;
};

/// Checks <sig, u sh v> = <sig,u><sig,v> over all word pairs with
/// |u| + |v| <= truncation.
ShuffleCheckReport shuffle_group_like_check(const WordSeries<double>& sig, double tol);

/// Phi: word i1...ik -> bullet(i1) * ... * bullet(ik) (Grossman-Larson
/// star, left fold), extended linearly. Preserves the empty-word part.
template <class C>
TreeSeries<C> phi_embed(const WordSeries<C>& sig) {
  TreeSeries<C> out(sig.dim, sig.truncation);
  for (const auto& [w, c] : sig.terms) {
    TreeSeries<C> t = unit_series<C>(sig.dim, sig.truncation);
    for (int letter : w) t = star(t, basis_series<C>(bullet(letter, sig.dim), sig.truncation));
    out += c * t;
  }
  return out;
}

}  // namespace treehopf
