#include "carleman/jet.hpp"

#include <algorithm>
#include <stdexcept>

namespace carleman {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double Jet::derivative(std::size_t i) const { return i < c_.size() ? c_[i] * factorial(static_cast<int>(i)) : 0.0; }

Jet& Jet::operator+=(const Jet& o) {
  const std::size_t n = std::min(c_.size(), o.c_.size());
  c_.resize(n);
  for (std::size_t i = 0; i < n; ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  const std::size_t n = std::min(c_.size(), o.c_.size());
  c_.resize(n);
  for (std::size_t i = 0; i < n; ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  const std::size_t n = std::min(a.order(), b.order());
  Jet r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j <= i; ++j) s += a.c_[j] * b.c_[i - j];
    r.c_[i] = s;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  const std::size_t n = std::min(a.order(), b.order());
  if (b.c_[0] == 0.0) throw std::domain_error("jet division by zero");
  Jet r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    double s = a.c_[i];
    for (std::size_t j = 1; j <= i; ++j) s -= b.c_[j] * r.c_[i - j];
    r.c_[i] = s / b.c_[0];
  }
  return r;
}

Jet reciprocal(const Jet& a) { return Jet::constant(a.order(), 1.0) / a; }

Jet Jet::scaled(double a) const {
  Jet r = *this;
  double f = 1.0;
  for (double& v : r.c_) {
    v *= f;
    f *= a;
  }
  return r;
}

Jet Jet::differentiated(std::size_t i) const {
  if (i > order()) return Jet(0, 0.0);
  Jet r(order() - i);
  for (std::size_t j = 0; j <= r.order(); ++j) {
    double f = 1.0;
    for (std::size_t m = j + 1; m <= j + i; ++m) f *= static_cast<double>(m);
    r.c_[j] = c_[j + i] * f;
  }
  return r;
}

// exp: b' = a' b gives j b_j = sum_{m=1}^{j} m a_m b_{j-m}.
Jet exp(const Jet& a) {
  const std::size_t n = a.order();
  Jet b(n, std::exp(a[0]));
  for (std::size_t j = 1; j <= n; ++j) {
    double s = 0.0;
    for (std::size_t m = 1; m <= j; ++m) s += static_cast<double>(m) * a[m] * b[j - m];
    b[j] = s / static_cast<double>(j);
  }
  return b;
}

// log: a b' = a' gives b_j = (a_j - sum_{m=1}^{j-1} m b_m a_{j-m} / j) / a_0.
Jet log(const Jet& a) {
  if (a[0] <= 0.0) throw std::domain_error("jet log of nonpositive value");
  const std::size_t n = a.order();
  Jet b(n, std::log(a[0]));
  for (std::size_t j = 1; j <= n; ++j) {
    double s = a[j];
    for (std::size_t m = 1; m < j; ++m) s -= static_cast<double>(m) * b[m] * a[j - m] / static_cast<double>(j);
    b[j] = s / a[0];
  }
  return b;
}

// pow: a b' = p a' b gives a_0 j b_j = sum_{m=1}^{j} (p m - (j - m)) a_m b_{j-m}.
Jet pow(const Jet& a, double p) {
  if (a[0] <= 0.0) throw std::domain_error("jet pow of nonpositive value");
  const std::size_t n = a.order();
  Jet b(n, std::pow(a[0], p));
  for (std::size_t j = 1; j <= n; ++j) {
    double s = 0.0;
    for (std::size_t m = 1; m <= j; ++m)
      s += (p * static_cast<double>(m) - static_cast<double>(j - m)) * a[m] * b[j - m];
    b[j] = s / (static_cast<double>(j) * a[0]);
  }
  return b;
}

Jet sqrt(const Jet& a) { return pow(a, 0.5); }

Jet compose(const Jet& outer, const Jet& inner) {
  const std::size_t n = std::min(outer.order(), inner.order());
  Jet h = inner;  // h = inner - inner(t0), a series with no constant term
  h[0] = 0.0;
  Jet result(n, outer[0]);
  Jet power = Jet::constant(n, 1.0);
  for (std::size_t i = 1; i <= n; ++i) {
    power = power * h;
    for (std::size_t j = 0; j <= n; ++j) result[j] += outer[i] * power[j];
  }
  return result;
}

}  // namespace carleman
