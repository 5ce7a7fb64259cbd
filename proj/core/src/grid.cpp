#include "carleman/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include "carleman/errors.hpp"

namespace carleman {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void check_axes(const std::vector<GridAxis>& axes) {
  if (axes.empty()) throw DomainError("grid needs at least one axis");
  for (const auto& a : axes) {
    if (a.n < 4 || (a.n & (a.n - 1)) != 0) throw DomainError("axis size must be a power of two >= 4");
    if (!(a.period > 0)) throw DomainError("axis period must be positive");
  }
}

std::size_t total_size(const std::vector<GridAxis>& axes) {
  std::size_t s = 1;
  for (const auto& a : axes) s *= static_cast<std::size_t>(a.n);
  return s;
}

// (-1)^{sum of indices}, the checkerboard that centres the window.
void checkerboard(const std::vector<GridAxis>& axes, std::vector<cplx>& v) {
  const int d = static_cast<int>(axes.size());
  std::vector<int> idx(d, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    int parity = 0;
    for (int a = 0; a < d; ++a) parity += idx[a];
    if (parity & 1) v[i] = -v[i];
    for (int a = d - 1; a >= 0; --a) {
      if (++idx[a] < axes[a].n) break;
      idx[a] = 0;
    }
  }
}

void fft_inplace(const std::vector<GridAxis>& axes, std::vector<cplx>& v, int sign) {
  std::vector<int> dims;
  for (const auto& a : axes) dims.push_back(a.n);
  auto* ptr = reinterpret_cast<fftw_complex*>(v.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), ptr, ptr, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace

double GridAxis::freq_step() const { return 2 * std::numbers::pi / period; }

GridField::GridField(std::vector<GridAxis> axes, Domain domain) : axes_(std::move(axes)), domain_(domain) {
  check_axes(axes_);
  data_.assign(total_size(axes_), cplx{0.0, 0.0});
}

GridField GridField::isotropic(int d, int n, double period, Domain domain) {
  return GridField(std::vector<GridAxis>(static_cast<std::size_t>(d), GridAxis{n, period, 0.0}), domain);
}

double GridField::cell_volume() const {
  double v = 1.0;
  for (const auto& a : axes_) v *= a.spacing();
  return v;
}

double GridField::freq_cell_volume() const {
  double v = 1.0;
  for (const auto& a : axes_) v *= a.freq_step();
  return v;
}

double GridField::total_volume() const {
  double v = 1.0;
  for (const auto& a : axes_) v *= a.period;
  return v;
}

void GridField::multi_index(std::size_t flat, std::span<int> idx) const {
  for (int a = dim() - 1; a >= 0; --a) {
    const auto n = static_cast<std::size_t>(axes_[a].n);
    idx[a] = static_cast<int>(flat % n);
    flat /= n;
  }
}

void GridField::coordinates(std::size_t flat, std::span<double> x) const {
  std::vector<int> idx(dim());
  multi_index(flat, idx);
  for (int a = 0; a < dim(); ++a) x[a] = axes_[a].coordinate(idx[a]);
}

void GridField::frequencies(std::size_t flat, std::span<double> xi) const {
  std::vector<int> idx(dim());
  multi_index(flat, idx);
  for (int a = 0; a < dim(); ++a) xi[a] = axes_[a].frequency(idx[a]);
}

cplx GridField::physical_value(std::size_t flat) const {
  std::vector<double> x(dim());
  coordinates(flat, x);
  double phase = 0.0;
  for (int a = 0; a < dim(); ++a) phase += axes_[a].center * x[a];
  return data_[flat] * std::polar(1.0, phase);
}

GridField GridField::to_frequency() const {
  if (domain_ == Domain::Frequency) return *this;
  GridField out = *this;
  out.domain_ = Domain::Frequency;
  checkerboard(axes_, out.data_);
  fft_inplace(axes_, out.data_, FFTW_FORWARD);
  checkerboard(axes_, out.data_);
  const double cell = cell_volume();
  for (auto& v : out.data_) v *= cell;
  return out;
}

GridField GridField::to_space() const {
  if (domain_ == Domain::Space) return *this;
  GridField out = *this;
  out.domain_ = Domain::Space;
  checkerboard(axes_, out.data_);
  fft_inplace(axes_, out.data_, FFTW_BACKWARD);
  checkerboard(axes_, out.data_);
  const double scale = freq_cell_volume() / std::pow(2 * std::numbers::pi, dim());
  for (auto& v : out.data_) v *= scale;
  return out;
}

GridField GridField::from_function(std::vector<GridAxis> axes, Domain domain,
                                   const std::function<cplx(std::span<const double>)>& fn) {
  GridField f(std::move(axes), domain);
  std::vector<double> pt(f.dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (domain == Domain::Frequency) {
      f.frequencies(i, pt);
      f.data_[i] = fn(pt);
    } else {
      f.coordinates(i, pt);
      double phase = 0.0;
      for (int a = 0; a < f.dim(); ++a) phase += f.axes_[a].center * pt[a];
      f.data_[i] = fn(pt) * std::polar(1.0, -phase);
    }
  }
  return f;
}

SymbolTable tabulate_symbol(const std::vector<GridAxis>& axes, const std::function<cplx(std::span<const double>)>& m) {
  check_axes(axes);
  GridField shape(axes, Domain::Frequency);
  SymbolTable t(shape.size());
  std::vector<double> xi(axes.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    shape.frequencies(i, xi);
    t[i] = m(xi);
  }
  return t;
}

SymbolTable tabulate_symbol(const std::vector<GridAxis>& axes, const SymbolSpec& spec) {
  spec.validate();
  if (static_cast<int>(axes.size()) != spec.d) throw DomainError("grid dimension differs from symbol dimension");
  try {
    return tabulate_symbol(axes, [&](std::span<const double> xi) { return eval_symbol(spec, xi); });
  } catch (const SingularFrequency&) {
    throw SingularFrequency("lattice hits the singular sphere; use offset_for_full_symbol to shift the window");
  }
}

GridField apply_multiplier(const GridField& f, const SymbolTable& table) {
  if (table.size() != f.size()) throw DomainError("symbol table does not match the field");
  GridField F = f.to_frequency();
  for (std::size_t i = 0; i < F.size(); ++i) F[i] *= table[i];
  return f.domain() == Domain::Space ? F.to_space() : F;
}

GridField apply_multiplier(const GridField& f, const SymbolSpec& spec) {
  return apply_multiplier(f, tabulate_symbol(f.axes(), spec));
}

std::vector<GridAxis> offset_for_full_symbol(std::vector<GridAxis> axes) {
  if (axes.size() < 2) return axes;
  // Shifting the first spatial axis by half a step keeps every |eta| off an exact
  // lattice value 1 whenever the unshifted lattice contains it; the tau axis keeps 0.
  axes.front().center += 0.5 * axes.front().freq_step();
  return axes;
}

double lp_norm(const GridField& f, double p) {
  const GridField g = f.to_space();
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : g.samples()) m = std::max(m, std::abs(v));
    return m;
  }
  if (!(p > 0)) throw DomainError("lp_norm needs p > 0");
  double s = 0.0;
  for (const auto& v : g.samples()) s += std::pow(std::abs(v), p);
  return std::pow(s * g.cell_volume(), 1.0 / p);
}

double lorentz_norm(std::vector<double> moduli, double cell, double p, LorentzFlavor flavor) {
  if (!(p > 0) || std::isinf(p)) throw DomainError("Lorentz norms need 0 < p < inf");
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  const std::size_t n = moduli.size();
  double result = 0.0;
  if (flavor == LorentzFlavor::PInf) {
    // sup_t t mu(|f| > t)^{1/p}, attained at t just below a level value.
    for (std::size_t i = 0; i < n; ++i) {
      if (i + 1 < n && moduli[i + 1] == moduli[i]) continue;
      result = std::max(result, moduli[i] * std::pow(static_cast<double>(i + 1) * cell, 1.0 / p));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double next = i + 1 < n ? moduli[i + 1] : 0.0;
      result += (moduli[i] - next) * std::pow(static_cast<double>(i + 1) * cell, 1.0 / p);
    }
  }
  return result;
}

double lorentz_norm(const GridField& f, double p, LorentzFlavor flavor) {
  const GridField g = f.to_space();
  std::vector<double> mod(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) mod[i] = std::abs(g[i]);
  return lorentz_norm(std::move(mod), g.cell_volume(), p, flavor);
}

}  // namespace carleman
