#include "treehopf/words.hpp"

#include <algorithm>
#include <cmath>

namespace treehopf {

std::map<Word, long long> shuffle(const Word& u, const Word& v) {
  std::map<Word, long long> out;
  if (u.empty()) {
    out[v] = 1;
    return out;
  }
  if (v.empty()) {
    out[u] = 1;
    return out;
  }
  Word u1(u.begin(), u.end() - 1);
  Word v1(v.begin(), v.end() - 1);
  for (const auto& [w, m] : shuffle(u1, v)) {
    Word x = w;
    x.push_back(u.back());
    out[x] += m;
  }
  for (const auto& [w, m] : shuffle(u, v1)) {
    Word x = w;
    x.push_back(v.back());
    out[x] += m;
  }
  return out;
}

WordSeries<double> tensor_exp(const std::vector<double>& increment, int level) {
  const int d = static_cast<int>(increment.size());
  WordSeries<double> r{d, level, {}};
  r.add({}, 1.0);
  // words of length k get prod(increment)/k!
  std::vector<std::pair<Word, double>> layer{{Word{}, 1.0}};
  for (int k = 1; k <= level; ++k) {
    std::vector<std::pair<Word, double>> next;
    for (const auto& [w, c] : layer)
      for (int i = 1; i <= d; ++i) {
        Word x = w;
        x.push_back(i);
        next.emplace_back(std::move(x), c * increment[static_cast<std::size_t>(i - 1)] / k);
      }
    for (const auto& [w, c] : next) r.add(w, c);
    layer = std::move(next);
  }
  return r;
}

std::vector<double> PiecewiseLinearPath::eval(double t) const {
  if (times.size() < 2 || t <= times.front()) return points.front();
  if (t >= times.back()) return points.back();
  auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t j = static_cast<std::size_t>(it - times.begin());
  const double a = times[j - 1], b = times[j];
  const double w = (t - a) / (b - a);
  std::vector<double> out(points[j - 1].size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (1 - w) * points[j - 1][i] + w * points[j][i];
  return out;
}

std::vector<double> PiecewiseLinearPath::increment(double s, double t) const {
  auto a = eval(s), b = eval(t);
  for (std::size_t i = 0; i < a.size(); ++i) b[i] -= a[i];
  return b;
}

double PiecewiseLinearPath::lipschitz_bound() const {
  double best = 0.0;
  for (std::size_t j = 1; j < times.size(); ++j) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < points[j].size(); ++i) {
      const double d = points[j][i] - points[j - 1][i];
      norm2 += d * d;
    }
    best = std::max(best, std::sqrt(norm2) / (times[j] - times[j - 1]));
  }
  return best;
}

WordSeries<double> tensor_signature_pl(const PiecewiseLinearPath& path, double s, double t,
                                       int level) {
  if (level > 4) throw std::invalid_argument("signature level capped at 4");
  if (s > t) throw std::invalid_argument("signature requires s <= t");
  const int d = path.dim();
  WordSeries<double> sig{d, level, {}};
  sig.add({}, 1.0);
  // breakpoints of the path strictly inside (s,t)
  std::vector<double> knots{s};
  for (double u : path.times)
    if (u > s && u < t) knots.push_back(u);
  knots.push_back(t);
  for (std::size_t j = 1; j < knots.size(); ++j) {
    auto seg = tensor_exp(path.increment(knots[j - 1], knots[j]), level);
    sig = word_product(sig, seg);
  }
  return sig;
}

ShuffleCheckReport shuffle_group_like_check(const WordSeries<double>& sig, double tol) {
  ShuffleCheckReport rep;
  // all words of length 1..truncation-1 over the alphabet
  std::vector<Word> pool;
  std::vector<Word> layer{Word{}};
  for (int k = 1; k < sig.truncation; ++k) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int i = 1; i <= sig.dim; ++i) {
        Word x = w;
        x.push_back(i);
        next.push_back(std::move(x));
      }
    pool.insert(pool.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  for (const auto& u : pool)
    for (const auto& v : pool) {
      if (static_cast<int>(u.size() + v.size()) > sig.truncation) continue;
      double lhs = 0.0;
      for (const auto& [w, m] : shuffle(u, v))
        lhs += static_cast<double>(m) * sig.coefficient(w);
      const double rhs = sig.coefficient(u) * sig.coefficient(v);
      const double err = std::abs(lhs - rhs);
      if (err > rep.max_error) {
        rep.max_error = err;
        rep.witness_u = u;
        rep.witness_v = v;
      }
    }
  rep.ok = rep.max_error <= tol;
  return rep;
}

}  // namespace treehopf
