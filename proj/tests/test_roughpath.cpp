#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "test_util.hpp"
#include "treehopf/parse.hpp"
#include "treehopf/rough_path.hpp"

using namespace treehopf;

namespace {

PiecewiseLinearPath random_path(std::mt19937_64& rng, int dim, int segments) {
  std::uniform_real_distribution<double> step(-1.0, 1.0);
  PiecewiseLinearPath p;
  std::vector<double> x(static_cast<std::size_t>(dim), 0.0);
  for (int k = 0; k <= segments; ++k) {
    p.times.push_back(static_cast<double>(k) / segments);
    p.points.push_back(x);
    for (auto& v : x) v += step(rng) / segments;
  }
  return p;
}

// Fine-grid quadrature of the level-2 iterated integral
// int_s^t (x_i(u)-x_i(s)) dx_j(u) for a piecewise-linear path.
double quad_level2(const PiecewiseLinearPath& p, double s, double t, int i, int j, int n) {
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double u0 = s + (t - s) * k / n, u1 = s + (t - s) * (k + 1) / n;
    const double xi_mid = 0.5 * (p.eval(u0)[static_cast<std::size_t>(i - 1)] +
                                 p.eval(u1)[static_cast<std::size_t>(i - 1)]) -
                          p.eval(s)[static_cast<std::size_t>(i - 1)];
    const double dxj = p.eval(u1)[static_cast<std::size_t>(j - 1)] -
                       p.eval(u0)[static_cast<std::size_t>(j - 1)];
    acc += xi_mid * dxj;
  }
  return acc;
}

}  // namespace

TEST_CASE("tensor_exp of a single increment") {
  std::vector<double> v{0.3, -0.7};
  auto sig = tensor_exp(v, 3);
  CHECK(sig.coefficient({}) == doctest::Approx(1.0));
  CHECK(sig.coefficient({1}) == doctest::Approx(0.3));
  CHECK(sig.coefficient({2}) == doctest::Approx(-0.7));
  CHECK(sig.coefficient({1, 2}) == doctest::Approx(0.3 * -0.7 / 2));
  CHECK(sig.coefficient({2, 1}) == doctest::Approx(0.3 * -0.7 / 2));
  CHECK(sig.coefficient({1, 1, 2}) == doctest::Approx(0.3 * 0.3 * -0.7 / 6));
}

TEST_CASE("piecewise-linear signature vs quadrature oracle") {
  std::mt19937_64 rng(101);
  PiecewiseLinearPath p = random_path(rng, 2, 5);
  for (auto [s, t] : {std::pair{0.0, 1.0}, std::pair{0.13, 0.77}, std::pair{0.4, 0.45}}) {
    auto sig = tensor_signature_pl(p, s, t, 2);
    auto inc = p.increment(s, t);
    CHECK(sig.coefficient({1}) == doctest::Approx(inc[0]).epsilon(1e-12));
    CHECK(sig.coefficient({2}) == doctest::Approx(inc[1]).epsilon(1e-12));
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        CHECK(sig.coefficient({i, j}) ==
              doctest::Approx(quad_level2(p, s, t, i, j, 4000)).epsilon(1e-6));
  }
  // multiplicative over adjacent intervals
  auto a = tensor_signature_pl(p, 0.0, 0.5, 3);
  auto b = tensor_signature_pl(p, 0.5, 1.0, 3);
  auto ab = word_product(a, b);
  auto whole = tensor_signature_pl(p, 0.0, 1.0, 3);
  for (const auto& [w, c] : whole.terms)
    CHECK(ab.coefficient(w) == doctest::Approx(c).epsilon(1e-12));
}

TEST_CASE("shuffle product") {
  auto s = shuffle({1}, {2});
  CHECK(s[{1, 2}] == 1);
  CHECK(s[{2, 1}] == 1);
  auto s2 = shuffle({1}, {1});
  CHECK(s2[{1, 1}] == 2);
  auto s3 = shuffle({1, 2}, {3});
  CHECK(s3[{3, 1, 2}] == 1);
  CHECK(s3[{1, 3, 2}] == 1);
  CHECK(s3[{1, 2, 3}] == 1);
}

TEST_CASE("shuffle character check: geometric passes, Ito fails") {
  std::mt19937_64 rng(103);
  PiecewiseLinearPath p = random_path(rng, 2, 6);
  auto sig = tensor_signature_pl(p, 0.0, 1.0, 4);
  CHECK(shuffle_group_like_check(sig, 1e-12).ok);

  // Ito-type correction on the diagonal level-2 words
  WordSeries<double> ito = tensor_signature_pl(p, 0.0, 1.0, 2);
  ito.add({1, 1}, -0.5);
  ito.add({2, 2}, -0.5);
  auto rep = shuffle_group_like_check(ito, 1e-12);
  CHECK(!rep.ok);
  CHECK(rep.max_error > 0.1);
  CHECK(rep.witness_u.size() + rep.witness_v.size() == 2);
}

TEST_CASE("phi embedding") {
  WordSeries<double> w1{2, 4, {}};
  w1.add({1}, 1.0);
  auto t1 = phi_embed(w1);
  CHECK(t1.size() == 1);
  CHECK(t1.coefficient(bullet(1, 2)) == doctest::Approx(1.0));

  WordSeries<double> w12{2, 4, {}};
  w12.add({1, 2}, 1.0);
  auto t12 = phi_embed(w12);
  CHECK(t12.coefficient(parse_tree("o(1 2)", 2)) == doctest::Approx(1.0));
  CHECK(t12.coefficient(parse_tree("o(2(1))", 2)) == doctest::Approx(1.0));
  CHECK(t12.size() == 2);

  // multiplicativity on random words
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> len(0, 2), letter(1, 2);
  for (int trial = 0; trial < 40; ++trial) {
    Word u, v;
    for (int k = len(rng); k-- > 0;) u.push_back(letter(rng));
    for (int k = len(rng); k-- > 0;) v.push_back(letter(rng));
    WordSeries<double> su{2, 4, {}}, sv{2, 4, {}};
    su.add(u, 1.0);
    sv.add(v, 1.0);
    auto lhs = phi_embed(word_product(su, sv));
    auto rhs = star(phi_embed(su), phi_embed(sv));
    auto diff = lhs - rhs;
    for (const auto& [t, c] : diff.terms()) CHECK(std::abs(c) <= 1e-12);
  }
}

TEST_CASE("piecewise-linear branched lift: Chen and group-like") {
  std::mt19937_64 rng(109);
  for (int dim : {2, 3}) {
    PiecewiseLinearPath p = random_path(rng, dim, 5);
    auto x = branched_lift_pl(p, 3.5);  // level 3
    CHECK(x.level == 3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
      double a = u(rng), b = u(rng), c = u(rng);
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      CHECK(chen_check(x, a, b, c, 1e-12).ok);
      auto rep = is_group_like(x.sampler(a, b), HopfVariant::GL, x.level, 1e-12);
      CHECK(rep.ok);
    }
  }
  // linear path at p in [1,2): level-1 sampler is 1 + sum increments
  PiecewiseLinearPath line{{0.0, 1.0}, {{0.0, 0.0}, {0.5, -0.25}}};
  auto x1 = branched_lift_pl(line, 1.5);
  auto s = x1.sampler(0.0, 1.0);
  CHECK(s.coefficient(empty_tree(2)) == doctest::Approx(1.0));
  CHECK(s.coefficient(bullet(1, 2)) == doctest::Approx(0.5));
  CHECK(s.coefficient(bullet(2, 2)) == doctest::Approx(-0.25));
  CHECK(s.size() == 3);
}

TEST_CASE("degenerate inputs") {
  PiecewiseLinearPath p{{0.0}, {{0.0}}};
  CHECK_THROWS(branched_lift_pl(p, 2.0));
  PiecewiseLinearPath q{{0.0, 0.0}, {{0.0}, {1.0}}};
  CHECK_THROWS(branched_lift_pl(q, 2.0));
}

TEST_CASE("ito_level2_lift agrees with the geometric lift for half outer product") {
  const int dim = 2;
  std::vector<double> slope{0.8, -0.3};
  auto level1 = [slope](double s, double t) {
    return std::vector<double>{slope[0] * (t - s), slope[1] * (t - s)};
  };
  auto half = [slope, level1](double s, double t) {
    auto a = level1(s, t);
    std::vector<std::vector<double>> m(2, std::vector<double>(2));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            0.5 * a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)];
    return m;
  };
  Control ctrl{[](double s, double t) { return t - s; }, 0.0, 1.0};
  std::vector<double> grid;
  for (int k = 0; k <= 10; ++k) grid.push_back(k / 10.0);
  auto x = ito_level2_lift(level1, half, ctrl, dim, grid);

  PiecewiseLinearPath line{{0.0, 1.0}, {{0.0, 0.0}, {slope[0], slope[1]}}};
  auto g = branched_lift_pl(line, 2.0);
  for (auto [s, t] : {std::pair{0.0, 1.0}, std::pair{0.2, 0.9}}) {
    auto diff = x.sampler(s, t) - g.sampler(s, t);
    for (const auto& [tree, c] : diff.terms()) CHECK(std::abs(c) <= 1e-12);
  }
  CHECK(validate_rough_path(x, grid, 1e-9).ok);
}

TEST_CASE("Ito correction passes branched validation but breaks the shuffle character") {
  // Brownian-like fixture with exactly computable integrals: x(t) = (t, t^2)
  // with the diagonal Ito correction -(1/2) delta_ij (t-s).
  auto xval = [](double t) { return std::vector<double>{t, t * t}; };
  auto level1 = [xval](double s, double t) {
    auto a = xval(t), b = xval(s);
    return std::vector<double>{a[0] - b[0], a[1] - b[1]};
  };
  auto ladder = [](double s, double t) {
    std::vector<std::vector<double>> m(2, std::vector<double>(2));
    // exact iterated integrals of (u, u^2), then the Ito-type correction
    m[0][0] = 0.5 * (t - s) * (t - s) - 0.5 * (t - s);
    m[0][1] = 2.0 / 3.0 * (t * t * t - s * s * s) - s * (t * t - s * s);
    m[1][0] = (t * t * t - s * s * s) / 3.0 - s * s * (t - s);
    m[1][1] = 0.5 * (t * t - s * s) * (t * t - s * s) - 0.5 * (t - s);
    return m;
  };
  Control ctrl{[](double s, double t) { return 2.0 * (t - s); }, 0.0, 1.0};
  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(k / 20.0);
  auto x = ito_level2_lift(level1, ladder, ctrl, 2, grid);
  CHECK(validate_rough_path(x, grid, 1e-9).ok);

  // word-series preimage of the same data fails the shuffle check
  WordSeries<double> sig{2, 2, {}};
  auto a = level1(0.0, 1.0);
  auto A = ladder(0.0, 1.0);
  sig.add({}, 1.0);
  for (int i = 1; i <= 2; ++i) sig.add({i}, a[static_cast<std::size_t>(i - 1)]);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      sig.add({i, j}, A[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
  auto rep = shuffle_group_like_check(sig, 1e-9);
  CHECK(!rep.ok);
  CHECK(rep.witness_u == Word{1});
  CHECK(rep.witness_v == Word{1});

  // the geometric ladder (no correction) does pass
  WordSeries<double> geo = sig;
  geo.add({1, 1}, 0.5);
  geo.add({2, 2}, 0.5);
  CHECK(shuffle_group_like_check(geo, 1e-9).ok);
}

TEST_CASE("pure-area rough path is valid") {
  auto level1 = [](double, double) { return std::vector<double>{0.0, 0.0}; };
  auto ladder = [](double s, double t) {
    return std::vector<std::vector<double>>{{0.0, t - s}, {s - t, 0.0}};
  };
  Control ctrl{[](double s, double t) { return t - s; }, 0.0, 1.0};
  std::vector<double> grid;
  for (int k = 0; k <= 8; ++k) grid.push_back(k / 8.0);
  auto x = ito_level2_lift(level1, ladder, ctrl, 2, grid);
  CHECK(validate_rough_path(x, grid, 1e-9).ok);
}

TEST_CASE("chen precondition violations are rejected") {
  auto level1 = [](double s, double t) { return std::vector<double>{t - s}; };
  auto bad_ladder = [](double s, double t) {
    return std::vector<std::vector<double>>{{t - s}};  // not the Chen completion
  };
  Control ctrl{[](double s, double t) { return t - s; }, 0.0, 1.0};
  std::vector<double> grid{0.0, 0.5, 1.0};
  CHECK_THROWS(ito_level2_lift(level1, bad_ladder, ctrl, 1, grid));
}

TEST_CASE("validation localizes injected failures") {
  std::mt19937_64 rng(113);
  PiecewiseLinearPath p = random_path(rng, 2, 4);
  auto x = branched_lift_pl(p, 2.0);

  // corrupt one cherry component past a threshold time
  auto good = x.sampler;
  const auto cherry = parse_tree("o(1 2)", 2);
  x.sampler = [good, cherry](double s, double t) {
    auto out = good(s, t);
    if (t > 0.6) out.add_term(cherry, 0.125);
    return out;
  };
  std::vector<double> grid;
  for (int k = 0; k <= 8; ++k) grid.push_back(k / 8.0);
  auto rep = validate_rough_path(x, grid, 1e-9);
  CHECK(!rep.ok);
  bool mentions_chen = false;
  for (const auto& f : rep.failures)
    if (f.find("Chen") != std::string::npos) mentions_chen = true;
  CHECK(mentions_chen);

  // constant nonzero control fails the audit
  auto y = branched_lift_pl(p, 2.0);
  y.control.omega = [](double, double) { return 1.0; };
  CHECK(!validate_rough_path(y, grid, 1e-9).control_ok);
}

TEST_CASE("sample file round-trip") {
  std::mt19937_64 rng(127);
  PiecewiseLinearPath p = random_path(rng, 2, 6);
  auto x = branched_lift_pl(p, 2.0);
  const std::string file = "roundtrip_samples.json";
  save_rough_path_samples(x, p.times, file);
  auto y = load_rough_path_samples(file);
  CHECK(y.dim == 2);
  CHECK(y.level == 2);
  for (std::size_t i = 0; i + 1 < p.times.size(); ++i)
    for (std::size_t j = i + 1; j < p.times.size(); ++j) {
      auto diff = y.sampler(p.times[i], p.times[j]) - x.sampler(p.times[i], p.times[j]);
      for (const auto& [t, c] : diff.terms()) CHECK(std::abs(c) <= 1e-12);
    }
  CHECK(validate_rough_path(y, p.times, 1e-9).ok);
  std::remove(file.c_str());
}

TEST_CASE("constant path is trivially multiplicative") {
  BranchedRoughPath x;
  x.p = 2.0;
  x.level = 2;
  x.dim = 2;
  x.sampler = [](double, double) { return unit_series<double>(2, 2); };
  x.control = Control{[](double s, double t) { return t - s; }, 0.0, 1.0};
  CHECK(chen_check(x, 0.0, 0.4, 1.0, 0.0).ok);
  CHECK(chen_check(x, 0.0, 0.4, 1.0, 0.0).max_residual == 0.0);
}
