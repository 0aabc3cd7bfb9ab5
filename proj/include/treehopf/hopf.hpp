#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "treehopf/series.hpp"

namespace treehopf {

enum class HopfVariant { GL, CK };

/// Grossman-Larson product: sum over all grafting maps.
template <class C>
TreeSeries<C> star(const TreeSeries<C>& a, const TreeSeries<C>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in star");
  auto trunc = TreeSeries<C>::min_trunc(a.truncation(), b.truncation());
  TreeSeries<C> r(a.dim(), trunc);
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      if (trunc && ta.degree() + tb.degree() > *trunc) continue;
      for (const auto& g : labelled_graftings(ta, tb)) r.add_term(g, ca * cb);
    }
  return r;
}

/// Connes-Kreimer product: root identification, commutative.
template <class C>
TreeSeries<C> circ(const TreeSeries<C>& a, const TreeSeries<C>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in circ");
  auto trunc = TreeSeries<C>::min_trunc(a.truncation(), b.truncation());
  TreeSeries<C> r(a.dim(), trunc);
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      if (trunc && ta.degree() + tb.degree() > *trunc) continue;
      r.add_term(labelled_root_graft(ta, tb), ca * cb);
    }
  return r;
}

/// Delta_GL of a basis tree with root-branch decomposition t_1 o ... o t_k:
/// sum over index subsets I of (o_{i in I} t_i) (x) (o_{i notin I} t_i).
template <class C>
TensorSeries<C> delta_gl(const TreeSeries<C>& a) {
  TensorSeries<C> r(a.dim());
  for (const auto& [t, c] : a.terms()) {
    const auto branches = labelled_root_branches(t);
    const int k = static_cast<int>(branches.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      LabelledTree left = empty_tree(a.dim());
      LabelledTree right = empty_tree(a.dim());
      for (int i = 0; i < k; ++i) {
        const auto& br = branches[static_cast<std::size_t>(i)];
        if (mask & (1u << i))
          left = labelled_root_graft(left, br);
        else
          right = labelled_root_graft(right, br);
      }
      r.add_term(left, right, c);
    }
  }
  return r;
}

/// Delta_CK: sum over admissible cuts of P^C (x) R^C.
template <class C>
TensorSeries<C> delta_ck(const TreeSeries<C>& a) {
  TensorSeries<C> r(a.dim());
  for (const auto& [t, c] : a.terms())
    for (const auto& [p, rest] : labelled_cuts(t)) r.add_term(p, rest, c);
  return r;
}

template <class C>
TensorSeries<C> delta(const TreeSeries<C>& a, HopfVariant v) {
  return v == HopfVariant::GL ? delta_gl(a) : delta_ck(a);
}

template <class C>
C counit(const TreeSeries<C>& a) {
  return a.coefficient(empty_tree(a.dim()));
}

template <class C>
TreeSeries<C> eta(const C& c, int dim, std::optional<int> trunc = std::nullopt) {
  TreeSeries<C> s(dim, trunc);
  s.add_term(empty_tree(dim), c);
  return s;
}

template <class C>
TreeSeries<C> variant_product(const TreeSeries<C>& a, const TreeSeries<C>& b, HopfVariant v) {
  return v == HopfVariant::GL ? star(a, b) : circ(a, b);
}

namespace detail_hopf {

// S(t) = -t - sum S(t') * t'' over the reduced coproduct, by degree.
template <class C>
TreeSeries<C> antipode_basis(const LabelledTree& t, HopfVariant v, int trunc,
                             std::map<LabelledTree, TreeSeries<C>>& memo) {
  if (t.degree() == 0) return unit_series<C>(t.dim(), trunc);
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;

  TreeSeries<C> res = C(-1) * basis_series<C>(t, trunc);
  const auto cop = delta(basis_series<C>(t, trunc), v);
  for (const auto& [key, c] : cop.terms()) {
    const auto& [l, r] = key;
    if (l.degree() == 0 || r.degree() == 0) continue;  // skip t(x)1 and 1(x)t
    auto sl = antipode_basis(l, v, trunc, memo);
    res -= c * variant_product(sl, basis_series<C>(r, trunc), v);
  }
  memo.emplace(t, res);
  return res;
}

}  // namespace detail_hopf

template <class C>
TreeSeries<C> antipode(const TreeSeries<C>& a, HopfVariant v) {
  if (!a.truncation())
    throw std::invalid_argument("antipode requires a truncation level");
  const int trunc = *a.truncation();
  std::map<LabelledTree, TreeSeries<C>> memo;
  TreeSeries<C> r(a.dim(), trunc);
  for (const auto& [t, c] : a.terms())
    r += c * detail_hopf::antipode_basis<C>(t, v, trunc, memo);
  return r;
}

/// Duality pairing; orthogonal (not orthonormal) on the canonical basis.
template <class C>
C pairing(const TreeSeries<C>& a, const TreeSeries<C>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in pairing");
  C total(0);
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      const auto n = pairing_count(ta, tb);
      if (n != 0) total += ca * cb * C(n);
    }
  return total;
}

/// Pairing on tensor pairs: product of pairings.
template <class C>
C pairing(const TensorSeries<C>& a, const TensorSeries<C>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in pairing");
  C total(0);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const auto n1 = pairing_count(ka.first, kb.first);
      if (n1 == 0) continue;
      const auto n2 = pairing_count(ka.second, kb.second);
      if (n2 == 0) continue;
      total += ca * cb * C(n1) * C(n2);
    }
  return total;
}

template <class C>
TreeSeries<C> exp_circ(const TreeSeries<C>& x) {
  if (!x.truncation()) throw std::invalid_argument("exp_circ requires a truncation level");
  if (!(counit(x) == C(0)))
    throw std::invalid_argument("exp_circ requires a series with zero counit part");
  const int trunc = *x.truncation();
  TreeSeries<C> result = unit_series<C>(x.dim(), trunc);
  TreeSeries<C> power = unit_series<C>(x.dim(), trunc);
  C factorial(1);
  for (int k = 1; k <= trunc; ++k) {
    power = circ(power, x);
    factorial *= C(k);
    result += (C(1) / factorial) * power;
  }
  return result;
}

template <class C>
TreeSeries<C> log_circ(const TreeSeries<C>& g) {
  if (!g.truncation()) throw std::invalid_argument("log_circ requires a truncation level");
  if (!(counit(g) == C(1)))
    throw std::invalid_argument("log_circ requires a series with counit part 1");
  const int trunc = *g.truncation();
  TreeSeries<C> h = g - unit_series<C>(g.dim(), trunc);
  TreeSeries<C> result(g.dim(), trunc);
  TreeSeries<C> power = unit_series<C>(g.dim(), trunc);
  C sign(1);
  for (int k = 1; k <= trunc; ++k) {
    power = circ(power, h);
    result += (sign / C(k)) * power;
    sign = C(0) - sign;
  }
  return result;
}

template <class C>
struct GroupLikeReport {
  bool ok = true;
  std::optional<std::pair<LabelledTree, LabelledTree>> witness;
  C max_error = C(0);
};

namespace detail_hopf {
inline bool coeff_within(const Rational& c, double) { return c == 0; }
inline bool coeff_within(double c, double tol) { return std::abs(c) <= tol; }
inline Rational coeff_mag(const Rational& c) { return c < 0 ? Rational(-c) : c; }
inline double coeff_mag(double c) { return std::abs(c); }
}  // namespace detail_hopf

/// Checks Delta(g) = g (x) g and counit(g) = 1 on components of total
/// degree <= max_degree. Exact for rational coefficients; tol applies to
/// the float layer.
template <class C>
GroupLikeReport<C> is_group_like(const TreeSeries<C>& g, HopfVariant v, int max_degree,
                                 double tol = 0.0) {
  GroupLikeReport<C> rep;
  TensorSeries<C> diff = delta(truncate(g, max_degree), v);
  for (const auto& [t1, c1] : g.terms())
    for (const auto& [t2, c2] : g.terms()) {
      if (t1.degree() + t2.degree() > max_degree) continue;
      diff.add_term(t1, t2, C(0) - c1 * c2);
    }
  for (const auto& [k, c] : diff.terms()) {
    if (k.first.degree() + k.second.degree() > max_degree) continue;
    if (!detail_hopf::coeff_within(c, tol)) {
      rep.ok = false;
      if (!rep.witness || detail_hopf::coeff_mag(c) > rep.max_error) rep.witness = k;
      if (detail_hopf::coeff_mag(c) > rep.max_error) rep.max_error = detail_hopf::coeff_mag(c);
    }
  }
  const C eps = counit(g);
  if (!detail_hopf::coeff_within(eps - C(1), tol)) rep.ok = false;
  return rep;
}

}  // namespace treehopf
