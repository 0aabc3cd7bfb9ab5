#include "treehopf/vector_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treehopf {

namespace {

Vec eval_poly_derivative(const std::vector<Polynomial>& comps, const Vec& y,
                         std::span<const Vec> directions) {
  Vec out(comps.size(), 0.0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Polynomial p = comps[c];
    for (const auto& dir : directions) p = p.directional_derivative(dir);
    out[c] = p.eval(y);
  }
  return out;
}

int ipow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

PolynomialVectorField::PolynomialVectorField(std::vector<std::vector<Polynomial>> fields)
    : fields_(std::move(fields)) {
  if (fields_.empty() || fields_.front().empty())
    throw std::invalid_argument("empty polynomial vector field family");
  state_dim_ = static_cast<int>(fields_.front().size());
}

PolynomialVectorField PolynomialVectorField::linear(
    const std::vector<std::vector<std::vector<double>>>& mats) {
  std::vector<std::vector<Polynomial>> fields;
  for (const auto& A : mats) {
    const int n = static_cast<int>(A.size());
    std::vector<Polynomial> comps;
    for (int r = 0; r < n; ++r) {
      Polynomial p(n);
      for (int c = 0; c < n; ++c)
        if (A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0.0)
          p += Polynomial::variable(n, c,
                                    A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      comps.push_back(std::move(p));
    }
    fields.push_back(std::move(comps));
  }
  return PolynomialVectorField(std::move(fields));
}

Vec PolynomialVectorField::derivative(int i, const Vec& y,
                                      std::span<const Vec> directions) const {
  if (i < 1 || i > driver_dim()) throw std::invalid_argument("vector field index out of range");
  return eval_poly_derivative(fields_[static_cast<std::size_t>(i - 1)], y, directions);
}

PolynomialMap::PolynomialMap(std::vector<Polynomial> components, int state_dim)
    : components_(std::move(components)), state_dim_(state_dim) {}

Vec PolynomialMap::derivative(const Vec& y, std::span<const Vec> directions) const {
  return eval_poly_derivative(components_, y, directions);
}

Vec IdentityMap::derivative(const Vec& y, std::span<const Vec> directions) const {
  if (directions.empty()) return y;
  if (directions.size() == 1) return directions[0];
  return Vec(static_cast<std::size_t>(n_), 0.0);
}

int IdPowerMap::target_dim() const { return ipow(n_, k_); }

Vec IdPowerMap::derivative(const Vec& y, std::span<const Vec> directions) const {
  const int j = static_cast<int>(directions.size());
  Vec out(static_cast<std::size_t>(ipow(n_, k_)), 0.0);
  if (j > k_) return out;

  // sum over injections of the j directions into the k slots; the rest hold y
  std::vector<int> slots(static_cast<std::size_t>(k_));
  for (int s = 0; s < k_; ++s) slots[static_cast<std::size_t>(s)] = s;
  std::vector<int> pick(static_cast<std::size_t>(j));
  auto rec = [&](auto&& self, int depth, unsigned used) -> void {
    if (depth == j) {
      // slot s holds directions[q] if pick[q] == s, else y
      std::vector<const Vec*> slot_vec(static_cast<std::size_t>(k_), &y);
      for (int q = 0; q < j; ++q)
        slot_vec[static_cast<std::size_t>(pick[static_cast<std::size_t>(q)])] =
            &directions[static_cast<std::size_t>(q)];
      // accumulate the outer product
      std::vector<int> idx(static_cast<std::size_t>(k_), 0);
      while (true) {
        double v = 1.0;
        int flat = 0;
        for (int s = 0; s < k_; ++s) {
          flat = flat * n_ + idx[static_cast<std::size_t>(s)];
          v *= (*slot_vec[static_cast<std::size_t>(s)])[static_cast<std::size_t>(
              idx[static_cast<std::size_t>(s)])];
        }
        out[static_cast<std::size_t>(flat)] += v;
        int s = k_ - 1;
        while (s >= 0 && idx[static_cast<std::size_t>(s)] == n_ - 1) {
          idx[static_cast<std::size_t>(s)] = 0;
          --s;
        }
        if (s < 0) break;
        ++idx[static_cast<std::size_t>(s)];
      }
      return;
    }
    for (int s = 0; s < k_; ++s) {
      if (used & (1u << s)) continue;
      pick[static_cast<std::size_t>(depth)] = s;
      self(self, depth + 1, used | (1u << s));
    }
  };
  rec(rec, 0, 0u);
  return out;
}

Vec apply_derivative_to_tensor(const SmoothMap& f, const Vec& y, int k, const Vec& tensor,
                               int n) {
  Vec out(static_cast<std::size_t>(f.target_dim()), 0.0);
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  std::vector<Vec> dirs(static_cast<std::size_t>(k));
  while (true) {
    int flat = 0;
    for (int s = 0; s < k; ++s) flat = flat * n + idx[static_cast<std::size_t>(s)];
    const double w = tensor[static_cast<std::size_t>(flat)];
    if (w != 0.0) {
      for (int s = 0; s < k; ++s) {
        dirs[static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(n), 0.0);
        dirs[static_cast<std::size_t>(s)][static_cast<std::size_t>(
            idx[static_cast<std::size_t>(s)])] = 1.0;
      }
      Vec v = f.derivative(y, dirs);
      for (std::size_t c = 0; c < out.size(); ++c) out[c] += w * v[c];
    }
    int s = k - 1;
    while (s >= 0 && idx[static_cast<std::size_t>(s)] == n - 1) {
      idx[static_cast<std::size_t>(s)] = 0;
      --s;
    }
    if (s < 0) break;
    ++idx[static_cast<std::size_t>(s)];
  }
  return out;
}

Vec symmetrize_tensor(const Vec& tensor, int k, int n) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) perm[static_cast<std::size_t>(s)] = s;
  Vec out(tensor.size(), 0.0);
  double count = 0.0;
  do {
    ++count;
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    while (true) {
      int flat = 0, pflat = 0;
      for (int s = 0; s < k; ++s) {
        flat = flat * n + idx[static_cast<std::size_t>(s)];
        pflat = pflat * n + idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])];
      }
      out[static_cast<std::size_t>(flat)] += tensor[static_cast<std::size_t>(pflat)];
      int s = k - 1;
      while (s >= 0 && idx[static_cast<std::size_t>(s)] == n - 1) {
        idx[static_cast<std::size_t>(s)] = 0;
        --s;
      }
      if (s < 0) break;
      ++idx[static_cast<std::size_t>(s)];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& v : out) v /= count;
  return out;
}

Vec tensor_outer(const Vec& a, int /*k*/, const Vec& b, int /*l*/, int /*n*/) {
  Vec out(a.size() * b.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

PolynomialMap apply_field(const PolynomialVectorField& V, int i, const PolynomialMap& f) {
  const auto& field = V.field(i);
  const int n = V.state_dim();
  std::vector<Polynomial> out;
  out.reserve(f.components().size());
  for (const auto& comp : f.components()) {
    Polynomial acc(n);
    for (int j = 0; j < n; ++j) acc += comp.partial(j) * field[static_cast<std::size_t>(j)];
    out.push_back(std::move(acc));
  }
  return PolynomialMap(std::move(out), n);
}

}  // namespace treehopf
