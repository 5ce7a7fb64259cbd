#pragma once
#include <cmath>
#include <cstddef>
#include <vector>

namespace carleman {

// Truncated Taylor series: c[j] = f^{(j)}(t0) / j!.
class Jet {
 public:
  Jet() = default;
  explicit Jet(std::size_t order, double value = 0.0) : c_(order + 1, 0.0) { c_[0] = value; }

  static Jet constant(std::size_t order, double v) { return Jet(order, v); }
  static Jet variable(std::size_t order, double t0) {
    Jet j(order, t0);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  std::size_t order() const { return c_.size() - 1; }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  double value() const { return c_[0]; }
  double derivative(std::size_t i) const;  // i-th derivative, i.e. c[i] * i!
  const std::vector<double>& coeffs() const { return c_; }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);
  Jet& operator+=(double s) { c_[0] += s; return *this; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(double s, const Jet& a) { return (a * -1.0) += s; }
  friend Jet operator-(Jet a, double s) { return a += -s; }
  Jet operator-() const { return *this * -1.0; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

  // Jet of g(t) = f(a t + b) at the matching point, given the jet of f at a t0 + b.
  Jet scaled(double a) const;
  // Jet of the i-th derivative, truncated to order() - i.
  Jet differentiated(std::size_t i) const;

 private:
  std::vector<double> c_{0.0};
};

Jet exp(const Jet& a);
Jet log(const Jet& a);                // requires a.value() > 0
Jet pow(const Jet& a, double p);      // requires a.value() > 0
Jet sqrt(const Jet& a);
Jet reciprocal(const Jet& a);

// Jet of F(g(t)) given the jet of F at g(t0) and the jet of g at t0.
Jet compose(const Jet& outer, const Jet& inner);

double factorial(int n);
double binomial(int n, int k);

}  // namespace carleman
