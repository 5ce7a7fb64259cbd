#include "carleman/symbols.hpp"

#include <cmath>
#include <sstream>

#include "carleman/errors.hpp"

namespace carleman {

namespace {

cplx apply_part(cplx v, SymbolPart part) {
  switch (part) {
    case SymbolPart::Complex: return v;
    case SymbolPart::Conjugate: return std::conj(v);
    case SymbolPart::Real: return {v.real(), 0.0};
    case SymbolPart::Imag: return {v.imag(), 0.0};
  }
  return v;
}

cplx ipow(cplx z, int k) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < std::abs(k); ++i) r *= z;
  return k < 0 ? 1.0 / r : r;
}

cplx full_value(int k, double eta_sq, double tau) {
  const cplx den{eta_sq + tau * tau - 1.0, 2.0 * tau};
  if (den == cplx{0.0, 0.0}) throw SingularFrequency("Full symbol is singular at |eta| = 1, tau = 0; offset the lattice");
  return ipow(den, -k);
}

cplx rescaled(int k, double eps, double zeta_val, double eta_sq, double tau) {
  const double ps = Cutoff::psi()(tau);
  if (zeta_val == 0.0 || ps == 0.0) return {0.0, 0.0};
  const cplx den{eta_sq - 1.0 + eps * eps * tau * tau, 2.0 * eps * tau};
  return zeta_val * ps * ipow(den, -k);
}

}  // namespace

bool is_dyadic(double v) {
  if (!(v > 0) || !std::isfinite(v)) return false;
  int e = 0;
  return std::frexp(v, &e) == 0.5;
}

void SymbolSpec::validate() const {
  if (d < 2) throw DomainError("symbols need d >= 2");
  if (k < 1) throw DomainError("symbols need k >= 1");
  const bool uses_eps = family == SymbolFamily::MEps || family == SymbolFamily::MTilde ||
                        family == SymbolFamily::MTildeGen || family == SymbolFamily::RingLocalized;
  if (uses_eps && !(eps > 0)) throw DomainError("eps must be positive");
  if (!(eps0 > 0)) throw DomainError("eps0 must be positive");
  if (require_dyadic) {
    if (!is_dyadic(eps0) || eps0 > 1.0 / 32) throw DomainError("eps0 must be dyadic and at most 2^-5");
    if (uses_eps && (!is_dyadic(eps) || eps > eps0)) throw DomainError("eps must be dyadic and at most eps0");
  }
  if (family == SymbolFamily::MTildeGen && !(delta > 0 && delta < 0.5)) throw DomainError("delta must lie in (0, 1/2)");
  if (family == SymbolFamily::RingLocalized && (j < 0 || std::ldexp(eps, j) > 0.25))
    throw DomainError("ring index needs 0 <= j and 2^j <= 1/(4 eps)");
}

SymbolSpec SymbolSpec::conjugated() const {
  SymbolSpec s = *this;
  switch (part) {
    case SymbolPart::Complex: s.part = SymbolPart::Conjugate; break;
    case SymbolPart::Conjugate: s.part = SymbolPart::Complex; break;
    default: break;  // real-valued
  }
  return s;
}

SymbolSpec SymbolSpec::with_part(SymbolPart p) const {
  SymbolSpec s = *this;
  s.part = p;
  return s;
}

std::string SymbolSpec::describe() const {
  static const char* names[] = {"Full", "MLocal", "MGlobal", "MEps", "MTilde", "MTildeGen", "RingLocalized", "Constant",
                                "FullInverse"};
  static const char* parts[] = {"", ".conj", ".re", ".im"};
  std::ostringstream os;
  os.precision(17);
  os << names[static_cast<int>(family)] << parts[static_cast<int>(part)] << "(d=" << d << ",k=" << k
     << ",eps=" << eps << ",eps0=" << eps0;
  if (family == SymbolFamily::MTildeGen) os << ",zeta=" << zeta.name() << "^" << zeta.derivative_order() << ",delta=" << delta;
  if (family == SymbolFamily::RingLocalized) os << ",zeta=" << zeta.name() << ",j=" << j;
  os << ")";
  return os.str();
}

SymbolSpec make_full(int d, int k) {
  SymbolSpec s;
  s.family = SymbolFamily::Full;
  s.d = d;
  s.k = k;
  return s;
}

SymbolSpec make_mtilde(int d, int k, double eps, double eps0) {
  SymbolSpec s = make_full(d, k);
  s.family = SymbolFamily::MTilde;
  s.eps = eps;
  s.eps0 = eps0;
  return s;
}

SymbolSpec make_meps(int d, int k, double eps, double eps0) {
  SymbolSpec s = make_mtilde(d, k, eps, eps0);
  s.family = SymbolFamily::MEps;
  return s;
}

SymbolSpec make_mtilde_gen(int d, int k, double eps, Cutoff zeta, double delta) {
  SymbolSpec s = make_full(d, k);
  s.family = SymbolFamily::MTildeGen;
  s.eps = eps;
  s.zeta = std::move(zeta);
  s.delta = delta;
  return s;
}

SymbolSpec make_ring(int d, int k, double eps, int j, Cutoff zeta) {
  SymbolSpec s = make_full(d, k);
  s.family = SymbolFamily::RingLocalized;
  s.eps = eps;
  s.j = j;
  s.zeta = std::move(zeta);
  return s;
}

cplx eval_symbol_radial(const SymbolSpec& spec, double eta_sq, double tau) {
  static const Cutoff psi = Cutoff::psi();
  static const Cutoff psi0 = Cutoff::psi0();
  cplx v{0.0, 0.0};
  switch (spec.family) {
    case SymbolFamily::Full:
      v = full_value(spec.k, eta_sq, tau);
      break;
    case SymbolFamily::FullInverse:
      v = ipow(cplx{eta_sq + tau * tau - 1.0, 2.0 * tau}, spec.k);
      break;
    case SymbolFamily::Constant:
      v = spec.constant;
      break;
    case SymbolFamily::MEps: {
      const double c = psi0((1.0 - eta_sq) / spec.eps0) * psi(tau / spec.eps);
      if (c != 0.0) v = c * full_value(spec.k, eta_sq, tau);
      break;
    }
    case SymbolFamily::MLocal: {
      // At most three dyadic scales eps <= eps0 have psi(tau/eps) != 0.
      const double radial = psi0((1.0 - eta_sq) / spec.eps0);
      if (radial == 0.0 || tau == 0.0) break;
      const int top = std::ilogb(spec.eps0);
      const int centre = std::ilogb(std::abs(tau));
      double weight = 0.0;
      for (int e = centre - 2; e <= centre + 2; ++e)
        if (e <= top) weight += psi(std::ldexp(tau, -e));
      if (weight != 0.0) v = radial * weight * full_value(spec.k, eta_sq, tau);
      break;
    }
    case SymbolFamily::MGlobal: {
      const double chi = psi0((1.0 - eta_sq) / spec.eps0) * dyadic_tail(tau, spec.eps0);
      if (chi != 1.0) v = (1.0 - chi) * full_value(spec.k, eta_sq, tau);
      break;
    }
    case SymbolFamily::MTilde:
      v = rescaled(spec.k, spec.eps, psi0((1.0 - eta_sq) / spec.eps0), eta_sq, tau);
      break;
    case SymbolFamily::MTildeGen:
      v = rescaled(spec.k, spec.eps, spec.zeta((1.0 - eta_sq) / spec.delta), eta_sq, tau);
      break;
    case SymbolFamily::RingLocalized: {
      const double delta = std::ldexp(spec.eps, spec.j);
      v = rescaled(spec.k, spec.eps, spec.zeta((1.0 - eta_sq) / delta), eta_sq, tau);
      break;
    }
  }
  return apply_part(v, spec.part);
}

cplx eval_symbol(const SymbolSpec& spec, std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != spec.d) throw DomainError("frequency has wrong dimension");
  double eta_sq = 0.0;
  for (std::size_t i = 0; i + 1 < xi.size(); ++i) eta_sq += xi[i] * xi[i];
  return eval_symbol_radial(spec, eta_sq, xi.back());
}

// With a = |eta|^2 - 1 + eps^2 tau^2 and b = 2 eps tau,
// (a + i b)^{-k} = (a - i b)^k / (a^2 + b^2)^k, whose imaginary part is
// sum over odd l of C(k,l) a^{k-l} (-b)^l (-1)^{(l-1)/2} / (a^2 + b^2)^k.
double eval_im_mtilde(int d, int k, double eps, double eps0, double eta_sq, double tau) {
  (void)d;
  const double c = Cutoff::psi0()((1.0 - eta_sq) / eps0) * Cutoff::psi()(tau);
  if (c == 0.0) return 0.0;
  const double a = eta_sq - 1.0 + eps * eps * tau * tau;
  const double b = 2.0 * eps * tau;
  double sum = 0.0;
  for (int l = 1; l <= k; l += 2) {
    const double sign = ((l - 1) / 2) % 2 == 0 ? -1.0 : 1.0;
    sum += sign * binomial(k, l) * std::pow(a, k - l) * std::pow(b, l);
  }
  return c * sum / std::pow(a * a + b * b, k);
}

cplx eval_phi_eps_ell(double eps, int ell, double rho, double tau, double eps0) {
  if (ell < 0) throw DomainError("derivative order must be nonnegative");
  const double z = Cutoff::psi0().derivative(static_cast<std::size_t>(ell))((1.0 - rho * rho) / eps0);
  const double ps = Cutoff::psi()(tau);
  if (z == 0.0 || ps == 0.0) return {0.0, 0.0};
  return z * ps / cplx{rho * rho - 1.0 + eps * eps * tau * tau, 2.0 * eps * tau};
}

}  // namespace carleman
