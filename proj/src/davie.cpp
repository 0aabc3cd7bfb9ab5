#include "treehopf/davie.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace treehopf {

namespace {

Vec psi_branch(const VectorFieldFamily& V, const Vec& y, const detail::Node& v) {
  std::vector<Vec> children;
  children.reserve(v.children.size());
  for (const auto& c : v.children) children.push_back(psi_branch(V, y, c));
  return V.derivative(v.label, y, children);
}

double norm2(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

Vec psi(const VectorFieldFamily& V, const SmoothMap& f, const Vec& y, const LabelledTree& t) {
  if (t.root_arity() > f.max_order())
    throw std::invalid_argument("psi: smooth map oracle order too low");
  std::vector<Vec> branches;
  branches.reserve(t.node().children.size());
  for (const auto& c : t.node().children) branches.push_back(psi_branch(V, y, c));
  return f.derivative(y, branches);
}

Vec psi_series(const VectorFieldFamily& V, const SmoothMap& f, const Vec& y,
               const TreeSeries<double>& a) {
  Vec out(static_cast<std::size_t>(f.target_dim()), 0.0);
  for (const auto& [t, c] : a.terms()) {
    const Vec v = psi(V, f, y, t);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * v[i];
  }
  return out;
}

Vec davie_step(const VectorFieldFamily& V, const Vec& y, const TreeSeries<double>& x_st) {
  const IdentityMap id(V.state_dim());
  return psi_series(V, id, y, x_st);
}

DiscretePath davie_solve(const VectorFieldFamily& V, const BranchedRoughPath& x,
                         const DavieSolveConfig& cfg) {
  if (cfg.partition.size() < 2) throw std::invalid_argument("davie_solve: empty partition");
  if (cfg.partition.front() < x.control.t0 - 1e-12 ||
      cfg.partition.back() > x.control.t1 + 1e-12)
    throw std::invalid_argument("davie_solve: partition outside rough path domain");

  DiscretePath out;
  out.times = cfg.partition;
  out.values.reserve(cfg.partition.size());
  Vec y = cfg.y0;
  out.values.push_back(y);
  for (std::size_t k = 1; k < cfg.partition.size(); ++k) {
    y = davie_step(V, y, x.sampler(cfg.partition[k - 1], cfg.partition[k]));
    out.values.push_back(y);
  }
  return out;
}

PsiPropertyReport psi_property_checks(const PolynomialVectorField& V, const SmoothMap& f,
                                      const Vec& y, const std::vector<LabelledTree>& trees) {
  PsiPropertyReport rep;
  const int n = V.state_dim();

  for (const auto& t : trees) {
    const int k = t.root_arity();
    // property 1: Psi_f(t) = (1/k!) f^(k)(y)[Psi_{id^k}(t)]
    const Vec lhs = psi(V, f, y, t);
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    Vec rhs;
    if (k == 0) {
      rhs = f.derivative(y, {});
    } else {
      const IdPowerMap idk(k, n);
      const Vec tensor = psi(V, idk, y, t);
      rhs = apply_derivative_to_tensor(f, y, k, tensor, n);
      for (auto& v : rhs) v /= fact;
    }
    for (std::size_t i = 0; i < lhs.size(); ++i)
      rep.max_residual_taylor = std::max(rep.max_residual_taylor, std::abs(lhs[i] - rhs[i]));
  }

  // property 2 on pairs
  for (const auto& t1 : trees)
    for (const auto& t2 : trees) {
      const int k = t1.root_arity(), l = t2.root_arity();
      if (k == 0 || l == 0 || k + l > 4) continue;
      const IdPowerMap idk(k, n), idl(l, n), idkl(k + l, n);
      const Vec lhs = psi(V, idkl, y, labelled_root_graft(t1, t2));
      Vec outer = tensor_outer(psi(V, idk, y, t1), k, psi(V, idl, y, t2), l, n);
      Vec rhs = symmetrize_tensor(outer, k + l, n);
      double binom = 1.0;
      for (int i = 1; i <= l; ++i) binom *= static_cast<double>(k + i) / i;
      for (auto& v : rhs) v *= binom;
      for (std::size_t i = 0; i < lhs.size(); ++i)
        rep.max_residual_circ = std::max(rep.max_residual_circ, std::abs(lhs[i] - rhs[i]));
    }
  return rep;
}

RemainderProbeResult remainder_probe(const DiscretePath& y, const BranchedRoughPath& x,
                                     const VectorFieldFamily& V, const SmoothMap& f,
                                     const std::vector<int>& dyadic_levels) {
  if (dyadic_levels.size() < 3)
    throw std::invalid_argument("remainder_probe: need at least 3 scales");
  RemainderProbeResult res;
  const double T0 = y.times.front(), T1 = y.times.back();

  auto index_at = [&](double t) {
    auto it = std::lower_bound(y.times.begin(), y.times.end(), t - 1e-12);
    return static_cast<std::size_t>(it - y.times.begin());
  };

  for (int L : dyadic_levels) {
    const int pieces = 1 << L;
    const double h = (T1 - T0) / pieces;
    double worst = 0.0;
    double scale = 0.0;
    for (int k = 0; k < pieces; ++k) {
      const double s = T0 + k * h, t = T0 + (k + 1) * h;
      const std::size_t is = index_at(s), it = index_at(t);
      const Vec& ys = y.values[is];
      const Vec& yt = y.values[it];
      Vec predicted = psi_series(V, f, ys, x.sampler(y.times[is], y.times[it]));
      Vec ft = f.derivative(yt, {});
      for (std::size_t i = 0; i < ft.size(); ++i) ft[i] -= predicted[i];
      worst = std::max(worst, norm2(ft));
      scale = std::max(scale, x.control.omega(y.times[is], y.times[it]));
    }
    res.scales.push_back(scale);
    res.max_remainder.push_back(worst);
  }

  // least squares fit of log(rem) = slope*log(scale) + c
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < res.scales.size(); ++i) {
    if (res.max_remainder[i] <= 0 || res.scales[i] <= 0) continue;
    const double lx = std::log(res.scales[i]), ly = std::log(res.max_remainder[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m >= 2) {
    res.fitted_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    res.constant = std::exp((sy - res.fitted_slope * sx) / m);
  }
  return res;
}

DiscretePath rk4_solve(const std::function<Vec(double, const Vec&)>& g, const Vec& y0,
                       double t0, double t1, int steps) {
  DiscretePath out;
  const double h = (t1 - t0) / steps;
  Vec y = y0;
  out.times.push_back(t0);
  out.values.push_back(y);
  auto axpy = [](const Vec& a, double c, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * b[i];
    return r;
  };
  for (int k = 0; k < steps; ++k) {
    const double t = t0 + k * h;
    const Vec k1 = g(t, y);
    const Vec k2 = g(t + h / 2, axpy(y, h / 2, k1));
    const Vec k3 = g(t + h / 2, axpy(y, h / 2, k2));
    const Vec k4 = g(t + h, axpy(y, h, k3));
    for (std::size_t i = 0; i < y.size(); ++i)
      y[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    out.times.push_back(t + h);
    out.values.push_back(y);
  }
  return out;
}

void save_path_csv(const DiscretePath& p, const std::string& filename) {
  std::ofstream out(filename);
  if (!out) throw std::runtime_error("cannot write " + filename);
  out.precision(15);
  for (std::size_t k = 0; k < p.times.size(); ++k) {
    out << p.times[k];
    for (double v : p.values[k]) out << ',' << v;
    out << '\n';
  }
}

}  // namespace treehopf
