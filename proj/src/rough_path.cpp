#include "treehopf/rough_path.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "treehopf/parse.hpp"

namespace treehopf {

namespace {

// o(j(i)): root -> j -> i, holding the iterated integral "first i then j".
LabelledTree ladder_tree(int i, int j, int dim) {
  RawTree r;
  RawTree inner{j, {RawTree{i, {}}}};
  r.children.push_back(inner);
  return LabelledTree::from_raw(r, dim);
}

}  // namespace

double degree_norm(const TreeSeries<double>& s, int k) {
  double m = 0.0;
  for (const auto& [t, c] : s.terms())
    if (t.degree() == k) m = std::max(m, std::abs(c));
  return m;
}

ChenReport chen_check(const BranchedRoughPath& x, double s, double t, double u, double tol) {
  if (s > t || t > u || s < x.control.t0 || u > x.control.t1)
    throw std::invalid_argument("chen_check: times out of domain or unordered");
  ChenReport rep;
  TreeSeries<double> diff = x.sampler(s, u) - star(x.sampler(s, t), x.sampler(t, u));
  rep.residual_by_degree.assign(static_cast<std::size_t>(x.level), 0.0);
  for (const auto& [tree, c] : diff.terms()) {
    const double a = std::abs(c);
    if (tree.degree() >= 1 && tree.degree() <= x.level)
      rep.residual_by_degree[static_cast<std::size_t>(tree.degree() - 1)] =
          std::max(rep.residual_by_degree[static_cast<std::size_t>(tree.degree() - 1)], a);
    if (a > rep.max_residual) {
      rep.max_residual = a;
      rep.worst_tree = tree.encoding();
    }
  }
  rep.ok = rep.max_residual <= tol;
  return rep;
}

BranchedRoughPath branched_lift_pl(const PiecewiseLinearPath& path, double p) {
  const int level = static_cast<int>(std::floor(p));
  if (level > 4) throw std::invalid_argument("branched_lift_pl: level capped at 4");
  if (path.times.size() < 2) throw std::invalid_argument("branched_lift_pl: degenerate grid");
  for (std::size_t j = 1; j < path.times.size(); ++j)
    if (!(path.times[j] > path.times[j - 1]))
      throw std::invalid_argument("branched_lift_pl: times not strictly increasing");

  BranchedRoughPath x;
  x.p = p;
  x.level = level;
  x.dim = path.dim();
  const double lip = path.lipschitz_bound();
  x.control = Control{[lip](double s, double t) { return lip * (t - s); }, path.t0(),
                      path.t1()};
  x.sampler = [path, level](double s, double t) {
    return phi_embed(tensor_signature_pl(path, s, t, level));
  };
  return x;
}

BranchedRoughPath ito_level2_lift(
    const std::function<std::vector<double>(double, double)>& level1,
    const std::function<std::vector<std::vector<double>>(double, double)>& ladder,
    const Control& control, int dim, const std::vector<double>& check_grid, double tol) {
  // Chen precondition spot check on consecutive grid triples
  for (std::size_t k = 2; k < check_grid.size(); ++k) {
    const double s = check_grid[k - 2], t = check_grid[k - 1], u = check_grid[k];
    const auto a = level1(s, t), b = level1(t, u);
    const auto Asu = ladder(s, u), Ast = ladder(s, t), Atu = ladder(t, u);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const double expect = Ast[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                              Atu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                              a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        if (std::abs(Asu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - expect) >
            tol)
          throw std::invalid_argument("ito_level2_lift: ladder violates the Chen relation");
      }
  }

  BranchedRoughPath x;
  x.p = 2.0;
  x.level = 2;
  x.dim = dim;
  x.control = control;
  x.sampler = [level1, ladder, dim](double s, double t) {
    const auto a = level1(s, t);
    const auto A = ladder(s, t);
    TreeSeries<double> arg(dim, 2);
    for (int i = 1; i <= dim; ++i)
      arg.add_term(bullet(i, dim), a[static_cast<std::size_t>(i - 1)]);
    for (int i = 1; i <= dim; ++i)
      for (int j = 1; j <= dim; ++j)
        arg.add_term(ladder_tree(i, j, dim),
                     A[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
    return exp_circ(arg);
  };
  return x;
}

ValidationReport validate_rough_path(const BranchedRoughPath& x,
                                     const std::vector<double>& grid, double tol) {
  ValidationReport rep;

  // control audit
  for (double t : grid)
    if (std::abs(x.control.omega(t, t)) > tol) {
      rep.control_ok = false;
      rep.failures.push_back("control omega(s,s) != 0 at t=" + std::to_string(t));
      break;
    }
  for (std::size_t k = 2; k < grid.size() && rep.control_ok; ++k) {
    const double s = grid[k - 2], t = grid[k - 1], u = grid[k];
    if (x.control.omega(s, t) + x.control.omega(t, u) > x.control.omega(s, u) + tol) {
      rep.control_ok = false;
      rep.failures.push_back("control not superadditive on (" + std::to_string(s) + "," +
                             std::to_string(u) + ")");
    }
  }

  for (std::size_t k = 2; k < grid.size(); ++k) {
    auto cr = chen_check(x, grid[k - 2], grid[k - 1], grid[k], tol);
    rep.max_chen_residual = std::max(rep.max_chen_residual, cr.max_residual);
    if (!cr.ok)
      rep.failures.push_back("Chen residual " + std::to_string(cr.max_residual) + " at tree " +
                             cr.worst_tree + " on triple starting " +
                             std::to_string(grid[k - 2]));
  }

  double growth = 0.0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double s = grid[k - 1], t = grid[k];
    auto sample = x.sampler(s, t);
    auto gl = is_group_like(sample, HopfVariant::GL, x.level, tol);
    rep.max_group_like_error = std::max(rep.max_group_like_error, gl.max_error);
    if (!gl.ok)
      rep.failures.push_back("sample not group-like on [" + std::to_string(s) + "," +
                             std::to_string(t) + "]");
    const double w = x.control.omega(s, t);
    if (w > 0)
      for (int deg = 1; deg <= x.level; ++deg)
        growth = std::max(growth, degree_norm(sample, deg) /
                                      std::pow(w, static_cast<double>(deg) / x.p));
  }
  rep.fitted_growth_constant = growth;
  rep.ok = rep.control_ok && rep.failures.empty();
  return rep;
}

void save_rough_path_samples(const BranchedRoughPath& x, const std::vector<double>& grid,
                             const std::string& filename) {
  nlohmann::json j;
  j["p"] = x.p;
  j["d"] = x.dim;
  j["times"] = grid;
  nlohmann::json comps = nlohmann::json::object();
  for (std::size_t k = 1; k < grid.size(); ++k) {
    auto sample = x.sampler(grid[k - 1], grid[k]);
    for (const auto& [t, c] : sample.terms()) {
      if (t.degree() == 0) continue;
      auto& arr = comps[t.encoding()];
      if (arr.is_null()) arr = std::vector<double>(grid.size() - 1, 0.0);
      arr[k - 1] = c;
    }
  }
  j["components"] = comps;
  std::ofstream out(filename);
  if (!out) throw std::runtime_error("cannot write " + filename);
  out << j.dump(2) << "\n";
}

BranchedRoughPath load_rough_path_samples(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw std::runtime_error("cannot read " + filename);
  nlohmann::json j;
  in >> j;

  BranchedRoughPath x;
  x.p = j.at("p").get<double>();
  x.level = static_cast<int>(std::floor(x.p));
  x.dim = j.at("d").get<int>();
  auto times = j.at("times").get<std::vector<double>>();
  const int dim = x.dim, level = x.level;

  std::vector<TreeSeries<double>> intervals(times.size() - 1, TreeSeries<double>(dim, level));
  for (auto& s : intervals) s.add_term(empty_tree(dim), 1.0);
  for (const auto& [enc, arr] : j.at("components").items()) {
    const LabelledTree t = parse_tree(enc, dim);
    auto vals = arr.get<std::vector<double>>();
    for (std::size_t k = 0; k < vals.size(); ++k)
      if (vals[k] != 0.0) intervals[k].add_term(t, vals[k]);
  }

  x.sampler = [times, intervals, dim, level](double s, double t) {
    TreeSeries<double> acc = unit_series<double>(dim, level);
    for (std::size_t k = 1; k < times.size(); ++k) {
      // intervals fully inside [s,t]
      if (times[k - 1] >= s - 1e-12 && times[k] <= t + 1e-12)
        acc = star(acc, intervals[k - 1]);
    }
    return acc;
  };
  const double T0 = times.front(), T1 = times.back();
  x.control = Control{[T0, T1](double s, double t) { return t - s; }, T0, T1};
  return x;
}

PiecewiseLinearPath load_path_csv(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw std::runtime_error("cannot read " + filename);
  PiecewiseLinearPath p;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    // skip a header row
    if (line.find_first_of("0123456789-+.") != 0 && p.times.empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) comma = line.size();
      row.push_back(std::stod(line.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    p.times.push_back(row.front());
    p.points.emplace_back(row.begin() + 1, row.end());
  }
  if (p.times.size() < 2) throw std::runtime_error("path csv needs at least two rows");
  return p;
}

}  // namespace treehopf
