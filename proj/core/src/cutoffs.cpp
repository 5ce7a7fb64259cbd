#include "carleman/cutoffs.hpp"

#include <cmath>

#include "carleman/errors.hpp"

namespace carleman {

namespace {

constexpr double kExpCap = 700.0;

// Jet of an even profile g(|t|) given the jet of g at |t|.
Jet even_jet(double t, std::size_t order, const std::function<Jet(double, std::size_t)>& g) {
  return t >= 0 ? g(t, order) : g(-t, order).scaled(-1.0);
}

Jet psi_positive(double s, std::size_t order) {
  if (s <= 0.5 || s >= 2.0) return Jet(order, 0.0);
  return smooth_step_jet(2 * s - 1, order).scaled(2.0) - smooth_step_jet(s - 1, order);
}

Jet psi0_positive(double s, std::size_t order) {
  if (s <= 1.0) return Jet(order, 1.0);
  if (s >= 2.0) return Jet(order, 0.0);
  return 1.0 - smooth_step_jet(s - 1, order);
}

}  // namespace

double smooth_step(double u) {
  if (u <= 0) return 0.0;
  if (u >= 1) return 1.0;
  const double z = 1.0 / u - 1.0 / (1.0 - u);
  if (z >= 0) {
    const double w = std::exp(-std::min(z, kExpCap));
    return w / (1 + w);
  }
  return 1.0 / (1.0 + std::exp(std::max(z, -kExpCap)));
}

Jet smooth_step_jet(double u, std::size_t order) {
  if (u <= 0) return Jet(order, 0.0);
  if (u >= 1) return Jet(order, 1.0);
  const Jet t = Jet::variable(order, u);
  const Jet z = reciprocal(t) - reciprocal(1.0 - t);
  if (z[0] > kExpCap) return Jet(order, 0.0);
  if (z[0] < -kExpCap) return Jet(order, 1.0);
  if (z[0] >= 0) {
    const Jet w = exp(-z);
    return w / (1.0 + w);
  }
  return reciprocal(1.0 + exp(z));
}

Cutoff Cutoff::psi() {
  auto fn = std::make_shared<const JetFn>([](double t, std::size_t n) { return even_jet(t, n, psi_positive); });
  return Cutoff(CutoffKind::Psi, "psi", fn, 0);
}

Cutoff Cutoff::psi0() {
  auto fn = std::make_shared<const JetFn>([](double t, std::size_t n) { return even_jet(t, n, psi0_positive); });
  return Cutoff(CutoffKind::Psi0, "psi0", fn, 0);
}

Cutoff Cutoff::knapp_bump() {
  auto fn = std::make_shared<const JetFn>([](double t, std::size_t n) {
    if (t <= 0.5 || t >= 2.0) return Jet(n, 0.0);
    return smooth_step_jet(2 * t - 1, n).scaled(2.0) * (1.0 - smooth_step_jet(2 * t - 3, n).scaled(2.0));
  });
  return Cutoff(CutoffKind::KnappBump, "knapp_bump", fn, 0);
}

Cutoff Cutoff::custom(std::string name, JetFn fn) {
  return Cutoff(CutoffKind::Custom, std::move(name), std::make_shared<const JetFn>(std::move(fn)), 0);
}

Jet Cutoff::jet(double t, std::size_t order) const {
  if (shift_ == 0) return (*fn_)(t, order);
  return (*fn_)(t, order + shift_).differentiated(shift_);
}

Cutoff Cutoff::derivative(std::size_t order) const {
  if (shift_ + order > kMaxCutoffDerivative)
    throw DomainError("cutoff derivative order " + std::to_string(shift_ + order) + " exceeds the maximum " +
                      std::to_string(kMaxCutoffDerivative));
  return Cutoff(kind_, name_, fn_, shift_ + order);
}

Cutoff make_cutoff(const CutoffSpec& spec) {
  Cutoff base = [&] {
    switch (spec.kind) {
      case CutoffKind::Psi: return Cutoff::psi();
      case CutoffKind::Psi0: return Cutoff::psi0();
      case CutoffKind::KnappBump: return Cutoff::knapp_bump();
      case CutoffKind::Custom: break;
    }
    throw ConfigError("custom cutoffs need a closure, not a spec");
  }();
  return spec.derivative ? base.derivative(spec.derivative) : base;
}

double eval_cutoff(const CutoffSpec& spec, double t) { return make_cutoff(spec)(t); }

// The dyadic sum telescopes: sum over 2^j <= eps0 of psi(tau/2^j) equals psi0(tau/eps0) away from 0.
double dyadic_tail(double tau, double eps0) {
  if (tau == 0.0) return 0.0;
  return Cutoff::psi0()(tau / eps0);
}

std::string bump_fingerprint() { return "S(u)=1/(1+exp(1/u-1/(1-u)));psi=S(2|t|-1)-S(|t|-1);psi0=1-S(|t|-1);v1"; }

}  // namespace carleman
