#pragma once

#include <memory>
#include <span>
#include <vector>

#include "treehopf/polynomial.hpp"

namespace treehopf {

using Vec = std::vector<double>;

/// Family of d smooth vector fields on R^n with a derivative oracle:
/// derivative(i, y, {a_1..a_k}) = V_i^{(k)}(y)[a_1,...,a_k].
class VectorFieldFamily {
 public:
  virtual ~VectorFieldFamily() = default;
  virtual int driver_dim() const = 0;
  virtual int state_dim() const = 0;
  virtual int max_order() const = 0;
  virtual Vec derivative(int i, const Vec& y, std::span<const Vec> directions) const = 0;
};

/// Smooth map F -> G with derivative oracle; order-0 call returns f(y).
class SmoothMap {
 public:
  virtual ~SmoothMap() = default;
  virtual int target_dim() const = 0;
  virtual int max_order() const = 0;
  virtual Vec derivative(const Vec& y, std::span<const Vec> directions) const = 0;
};

/// Polynomial vector fields: exact derivatives of every order.
class PolynomialVectorField final : public VectorFieldFamily {
 public:
  /// fields[i][c] = c-th state component of V_{i+1}.
  explicit PolynomialVectorField(std::vector<std::vector<Polynomial>> fields);

  /// Linear fields V_i(y) = A_i y.
  static PolynomialVectorField linear(const std::vector<std::vector<std::vector<double>>>& mats);

  int driver_dim() const override { return static_cast<int>(fields_.size()); }
  int state_dim() const override { return state_dim_; }
  int max_order() const override { return 64; }
  Vec derivative(int i, const Vec& y, std::span<const Vec> directions) const override;

  const std::vector<Polynomial>& field(int i) const {
    return fields_[static_cast<std::size_t>(i - 1)];
  }

 private:
  std::vector<std::vector<Polynomial>> fields_;
  int state_dim_;
};

class PolynomialMap final : public SmoothMap {
 public:
  explicit PolynomialMap(std::vector<Polynomial> components, int state_dim);

  int target_dim() const override { return static_cast<int>(components_.size()); }
  int max_order() const override { return 64; }
  Vec derivative(const Vec& y, std::span<const Vec> directions) const override;

  const std::vector<Polynomial>& components() const { return components_; }

 private:
  std::vector<Polynomial> components_;
  int state_dim_;
};

class IdentityMap final : public SmoothMap {
 public:
  explicit IdentityMap(int n) : n_(n) {}
  int target_dim() const override { return n_; }
  int max_order() const override { return 64; }
  Vec derivative(const Vec& y, std::span<const Vec> directions) const override;

 private:
  int n_;
};

/// id^k: x -> x^{(x)k}, output flattened row-major with n^k entries.
class IdPowerMap final : public SmoothMap {
 public:
  IdPowerMap(int k, int n) : k_(k), n_(n) {}
  int target_dim() const override;
  int max_order() const override { return 64; }
  Vec derivative(const Vec& y, std::span<const Vec> directions) const override;

 private:
  int k_;
  int n_;
};

/// Apply f^{(k)}(y) to a flat k-tensor (row-major, n^k entries) by expanding
/// over the coordinate basis.
Vec apply_derivative_to_tensor(const SmoothMap& f, const Vec& y, int k, const Vec& tensor,
                               int n);

/// Symmetrize a flat k-tensor over all slot permutations (1/k! prefactor).
Vec symmetrize_tensor(const Vec& tensor, int k, int n);

/// Flat outer product of a k-tensor and an l-tensor.
Vec tensor_outer(const Vec& a, int k, const Vec& b, int l, int n);

/// The differential operator f -> V_i f = f'(.)[V_i(.)] on polynomial maps.
PolynomialMap apply_field(const PolynomialVectorField& V, int i, const PolynomialMap& f);

}  // namespace treehopf
