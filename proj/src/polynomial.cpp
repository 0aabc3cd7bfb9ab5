#include "treehopf/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace treehopf {

Polynomial Polynomial::variable(int nvars, int j, double coeff) {
  Polynomial p(nvars);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(j)] = 1;
  p.add_term(e, coeff);
  return p;
}

void Polynomial::add_term(const std::vector<int>& expo, double c) {
  if (static_cast<int>(expo.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    if (c != 0.0) terms_.emplace(expo, c);
  } else {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(double c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e = e1;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Polynomial Polynomial::partial(int j) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(j)];
    if (k == 0) continue;
    std::vector<int> e2 = e;
    --e2[static_cast<std::size_t>(j)];
    r.add_term(e2, c * k);
  }
  return r;
}

Polynomial Polynomial::directional_derivative(const std::vector<double>& dir) const {
  Polynomial r(nvars_);
  for (int j = 0; j < nvars_; ++j) {
    const double a = dir[static_cast<std::size_t>(j)];
    if (a != 0.0) r += a * partial(j);
  }
  return r;
}

double Polynomial::eval(const std::vector<double>& y) const {
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double v = c;
    for (std::size_t j = 0; j < e.size(); ++j)
      for (int k = 0; k < e[j]; ++k) v *= y[j];
    total += v;
  }
  return total;
}

}  // namespace treehopf
