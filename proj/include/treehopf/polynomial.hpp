#pragma once

#include <map>
#include <vector>

namespace treehopf {

/// Multivariate polynomial with double coefficients; exponent vectors are
/// fixed-length per variable count.
class Polynomial {
 public:
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  Polynomial(int nvars, double constant) : nvars_(nvars) {
    if (constant != 0.0) terms_[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = constant;
  }

  static Polynomial variable(int nvars, int j, double coeff = 1.0);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, double>& terms() const { return terms_; }

  void add_term(const std::vector<int>& expo, double c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double c);
  Polynomial operator*(const Polynomial& o) const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(double c, Polynomial a) { return a *= c; }

  Polynomial partial(int j) const;
  Polynomial directional_derivative(const std::vector<double>& dir) const;
  double eval(const std::vector<double>& y) const;

 private:
  int nvars_;
  std::map<std::vector<int>, double> terms_;
};

}  // namespace treehopf
