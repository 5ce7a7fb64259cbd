#pragma once
#include <functional>
#include <memory>
#include <string>

#include "carleman/jet.hpp"

namespace carleman {

inline constexpr std::size_t kMaxCutoffDerivative = 16;

// Smooth step: 0 for u <= 0, 1 for u >= 1, built from exp(-1/u).
double smooth_step(double u);
Jet smooth_step_jet(double u, std::size_t order);

enum class CutoffKind { Psi, Psi0, KnappBump, Custom };

// Immutable smooth cutoff with analytic derivatives.
class Cutoff {
 public:
  using JetFn = std::function<Jet(double t, std::size_t order)>;

  static Cutoff psi();         // annulus bump on [-2,-1/2] u [1/2,2]
  static Cutoff psi0();        // 1 on [-1,1], 0 outside [-2,2]
  static Cutoff knapp_bump();  // supported in [1/2,2], 1 on [1,3/2]
  static Cutoff custom(std::string name, JetFn fn);

  double operator()(double t) const { return jet(t, 0)[0]; }
  Jet jet(double t, std::size_t order) const;
  Cutoff derivative(std::size_t order) const;  // throws DomainError past kMaxCutoffDerivative

  CutoffKind kind() const { return kind_; }
  std::size_t derivative_order() const { return shift_; }
  const std::string& name() const { return name_; }

 private:
  Cutoff(CutoffKind kind, std::string name, std::shared_ptr<const JetFn> fn, std::size_t shift)
      : kind_(kind), name_(std::move(name)), fn_(std::move(fn)), shift_(shift) {}
  CutoffKind kind_;
  std::string name_;
  std::shared_ptr<const JetFn> fn_;
  std::size_t shift_ = 0;
};

struct CutoffSpec {
  CutoffKind kind = CutoffKind::Psi0;
  std::size_t derivative = 0;
};

Cutoff make_cutoff(const CutoffSpec& spec);
double eval_cutoff(const CutoffSpec& spec, double t);

// Theta(tau) = sum over dyadic 2^j <= eps0 of psi(tau / 2^j), evaluated in closed form.
double dyadic_tail(double tau, double eps0);

// Identifies the concrete bump family in every output artifact.
std::string bump_fingerprint();

}  // namespace carleman
