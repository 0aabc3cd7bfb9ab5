#pragma once

#include <functional>
#include <string>

#include "treehopf/rough_path.hpp"
#include "treehopf/vector_field.hpp"

namespace treehopf {

/// Elementary differential: each non-root vertex with label i and c
/// children contributes V_i^{(c)}(y)[children]; the root with k children
/// contributes f^{(k)}(y)[branches]; the empty tree gives f(y).
Vec psi(const VectorFieldFamily& V, const SmoothMap& f, const Vec& y, const LabelledTree& t);

Vec psi_series(const VectorFieldFamily& V, const SmoothMap& f, const Vec& y,
               const TreeSeries<double>& a);

struct DavieSolveConfig {
  std::vector<double> partition;  // strictly increasing, covers [t0,T]
  Vec y0;
  int truncation = 2;
};

Vec davie_step(const VectorFieldFamily& V, const Vec& y, const TreeSeries<double>& x_st);

struct DiscretePath {
  std::vector<double> times;
  std::vector<Vec> values;
};

DiscretePath davie_solve(const VectorFieldFamily& V, const BranchedRoughPath& x,
                         const DavieSolveConfig& cfg);

struct PsiPropertyReport {
  double max_residual_taylor = 0.0;  // Psi_f vs (1/k!) f^(k)[Psi_{id^k}]
  double max_residual_circ = 0.0;    // Psi_{id^{k+l}}(t1 o t2) vs sym outer
  bool ok(double tol) const { return max_residual_taylor <= tol && max_residual_circ <= tol; }
};

/// Structural checks of the elementary-differential evaluator on a set of
/// labelled trees with polynomial data.
PsiPropertyReport psi_property_checks(const PolynomialVectorField& V, const SmoothMap& f,
                                      const Vec& y, const std::vector<LabelledTree>& trees);

struct RemainderProbeResult {
  std::vector<double> scales;         // omega(s,t) per dyadic level
  std::vector<double> max_remainder;  // worst remainder per level
  double fitted_slope = 0.0;
  double constant = 0.0;
};

/// Max remainder ||f(y_t) - Psi_{V,f,y_s}(x_{s,t})|| over dyadic (s,t) at
/// each scale, with a log-log least-squares slope fit.
RemainderProbeResult remainder_probe(const DiscretePath& y, const BranchedRoughPath& x,
                                     const VectorFieldFamily& V, const SmoothMap& f,
                                     const std::vector<int>& dyadic_levels);

/// Classical fixed-step RK4 for dy/dt = g(t,y); independent reference.
DiscretePath rk4_solve(const std::function<Vec(double, const Vec&)>& g, const Vec& y0,
                       double t0, double t1, int steps);

void save_path_csv(const DiscretePath& p, const std::string& filename);

}  // namespace treehopf
