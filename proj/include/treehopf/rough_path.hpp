#pragma once

#include <functional>
#include <string>
#include <vector>

#include "treehopf/words.hpp"

namespace treehopf {

struct Control {
  std::function<double(double, double)> omega;
  double t0 = 0.0;
  double t1 = 1.0;
};

struct BranchedRoughPath {
  double p = 1.0;
  int level = 1;  // floor(p)
  int dim = 1;
  std::function<TreeSeries<double>(double, double)> sampler;
  Control control;
};

/// Max absolute coefficient among terms of the given degree.
double degree_norm(const TreeSeries<double>& s, int k);

struct ChenReport {
  bool ok = true;
  std::vector<double> residual_by_degree;  // index k-1 holds degree k
  std::string worst_tree;
  double max_residual = 0.0;
};

/// Residual of x_{s,u} = x_{s,t} * x_{t,u}, per degree.
ChenReport chen_check(const BranchedRoughPath& x, double s, double t, double u, double tol);

/// Canonical branched lift of a piecewise-linear path: Phi of the exact
/// truncated signature, with a Lipschitz control.
BranchedRoughPath branched_lift_pl(const PiecewiseLinearPath& path, double p);

/// Level-2 branched rough path from level-1 increments and a 2-ladder
/// matrix. ladder(s,t)(i,j) holds the iterated integral "first i then j"
/// and is attached to the tree o(j(i)); the Chen precondition
/// ladder(s,u) = ladder(s,t) + ladder(t,u) + level1(s,t) (x) level1(t,u)
/// is spot-checked on the supplied grid.
BranchedRoughPath ito_level2_lift(
    const std::function<std::vector<double>(double, double)>& level1,
    const std::function<std::vector<std::vector<double>>(double, double)>& ladder,
    const Control& control, int dim, const std::vector<double>& check_grid,
    double tol = 1e-9);

struct ValidationReport {
  bool ok = true;
  double max_chen_residual = 0.0;
  double max_group_like_error = 0.0;
  double fitted_growth_constant = 0.0;
  bool control_ok = true;
  std::vector<std::string> failures;
};

ValidationReport validate_rough_path(const BranchedRoughPath& x,
                                     const std::vector<double>& grid, double tol);

/// Grid sample file: consecutive-interval tree components as JSON.
void save_rough_path_samples(const BranchedRoughPath& x, const std::vector<double>& grid,
                             const std::string& filename);

/// Reconstructs a sampler from a sample file; (s,t) spanning several grid
/// intervals is rebuilt via the star product.
BranchedRoughPath load_rough_path_samples(const std::string& filename);

PiecewiseLinearPath load_path_csv(const std::string& filename);

}  // namespace treehopf
