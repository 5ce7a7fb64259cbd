#pragma once
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "carleman/symbols.hpp"

namespace carleman {

// One periodic axis. Frequencies form the window c + (2pi/L)(m - n/2), m = 0..n-1.
struct GridAxis {
  int n = 64;
  double period = 2 * 3.141592653589793;
  double center = 0.0;

  double spacing() const { return period / n; }
  double freq_step() const;
  double coordinate(int p) const { return period * (p - n / 2) / n; }
  double frequency(int m) const { return center + freq_step() * (m - n / 2); }
  bool operator==(const GridAxis&) const = default;
};

enum class Domain { Space, Frequency };

// Complex samples on a periodic grid, stored row-major with the last axis fastest.
// Space samples are f(x) e^{-i c.x}; frequency samples approximate the continuum
// transform f^(xi) = int f(x) e^{-i x.xi} dx at the window frequencies.
class GridField {
 public:
  GridField() = default;
  GridField(std::vector<GridAxis> axes, Domain domain);  // zero-filled

  static GridField isotropic(int d, int n, double period, Domain domain = Domain::Space);

  int dim() const { return static_cast<int>(axes_.size()); }
  const std::vector<GridAxis>& axes() const { return axes_; }
  Domain domain() const { return domain_; }
  std::size_t size() const { return data_.size(); }
  std::vector<cplx>& samples() { return data_; }
  const std::vector<cplx>& samples() const { return data_; }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }

  double cell_volume() const;       // prod L_i / n_i
  double freq_cell_volume() const;  // prod 2 pi / L_i
  double total_volume() const;      // prod L_i

  void multi_index(std::size_t flat, std::span<int> idx) const;
  void coordinates(std::size_t flat, std::span<double> x) const;
  void frequencies(std::size_t flat, std::span<double> xi) const;

  // Physical value f(x) of a space-domain sample, undoing the window modulation.
  cplx physical_value(std::size_t flat) const;

  GridField to_frequency() const;
  GridField to_space() const;

  // Samples fn at every lattice point of the chosen domain.
  static GridField from_function(std::vector<GridAxis> axes, Domain domain,
                                 const std::function<cplx(std::span<const double>)>& fn);

 private:
  std::vector<GridAxis> axes_;
  Domain domain_ = Domain::Space;
  std::vector<cplx> data_;
};

// Symbol sampled on the frequency lattice of a field shape.
using SymbolTable = std::vector<cplx>;
SymbolTable tabulate_symbol(const std::vector<GridAxis>& axes, const SymbolSpec& spec);
SymbolTable tabulate_symbol(const std::vector<GridAxis>& axes, const std::function<cplx(std::span<const double>)>& m);

// m(D) f on the periodized problem. Result is in the domain of the input.
GridField apply_multiplier(const GridField& f, const SymbolSpec& spec);
GridField apply_multiplier(const GridField& f, const SymbolTable& table);

// Half a frequency step so that no lattice point sits on the sphere |eta| = 1, tau = 0.
std::vector<GridAxis> offset_for_full_symbol(std::vector<GridAxis> axes);

double lp_norm(const GridField& f, double p);  // p = inf gives the max modulus

enum class LorentzFlavor { P1, PInf };
double lorentz_norm(const GridField& f, double p, LorentzFlavor flavor);
// Same, from raw moduli and a cell measure.
double lorentz_norm(std::vector<double> moduli, double cell, double p, LorentzFlavor flavor);

}  // namespace carleman
