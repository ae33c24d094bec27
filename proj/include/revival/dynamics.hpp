#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "revival/spectrum.hpp"
#include "revival/wavepacket.hpp"

namespace revival {

/// Uniform time grid. Both endpoints are grid points and are returned
/// exactly; interior points are t_start + (t_end - t_start) * k/(N-1).
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 1.0;
  int samples = 2;

  double dt() const { return (t_end - t_start) / (samples - 1); }
  double time(int k) const;
  std::vector<double> times() const;
};

/// Sampled autocorrelation A(t_k) on a time grid.
struct ComplexSeries {
  TimeGrid grid;
  std::vector<std::complex<double>> values;
};

/// Space-time probability density for a 1D box, row-major by time.
/// x_j = j * length / (x_samples - 1); row 0 corresponds to t_start.
struct DensityGrid {
  int x_samples = 0;
  double length = 0.0;
  TimeGrid grid;
  std::vector<double> values;

  double at(int time_index, int x_index) const {
    return values[static_cast<std::size_t>(time_index) * x_samples + x_index];
  }
  double x(int j) const;
};

/// A(t) = sum_n |c_n|^2 exp(-i E_n t), summed in ascending n per sample.
/// Phase arguments beyond 1e8 are reduced modulo 2 pi in extended
/// precision before the trig evaluation.
ComplexSeries autocorrelation(const Coefficients& coeffs, const SpectrumModel& model,
                              const TimeGrid& grid);

ComplexSeries autocorrelation_2d(const Coefficients2D& coeffs, const SpectrumModel2D& model,
                                 const TimeGrid& grid);

/// rho(x, t) = |sum_n c_n phi_n(x) exp(-i E_n t)|^2 with the box
/// eigenfunctions phi_n(x) = sqrt(2/L) sin(n pi x / L).
double box_density(const Coefficients& coeffs, double mass, double length, double x, double t);

/// Dense rho(x_j, t_k) raster; pointwise identical to box_density.
DensityGrid carpet(const Coefficients& coeffs, double mass, double length, int x_samples,
                   const TimeGrid& grid);

}  // namespace revival
