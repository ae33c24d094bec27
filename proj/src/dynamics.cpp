#include "revival/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace revival {

namespace {

constexpr double kPhaseReductionThreshold = 1e8;

// exp(-i E t). When |E t| is large the argument is reduced modulo 2 pi in
// extended precision first; otherwise phase accuracy degrades linearly
// with the magnitude of the raw argument.
std::complex<double> evolution_phase(double energy, double t) {
  double theta = energy * t;
  if (std::abs(theta) > kPhaseReductionThreshold) {
    constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    const long double wide = static_cast<long double>(energy) * static_cast<long double>(t);
    theta = static_cast<double>(std::remainderl(wide, two_pi));
  }
  return {std::cos(theta), -std::sin(theta)};
}

void validate_grid(const TimeGrid& grid) {
  if (grid.samples < 2) throw std::invalid_argument("time grid needs at least 2 samples");
  if (!(grid.t_end > grid.t_start))
    throw std::invalid_argument("time grid needs t_end > t_start");
}

double box_eigenfunction(int n, double x, double length) {
  return std::sqrt(2.0 / length) * std::sin(static_cast<double>(n) * std::numbers::pi * x / length);
}

// Single evaluation point shared by box_density and carpet so both
// produce bit-identical values for identical inputs.
[[gnu::noinline]] double density_point(const std::vector<Coefficients::Entry>& entries,
                                       const double* phi, const std::complex<double>* phases) {
  std::complex<double> psi = 0.0;
  for (std::size_t j = 0; j < entries.size(); ++j)
    psi += entries[j].amplitude * phi[j] * phases[j];
  return std::norm(psi);
}

}  // namespace

double TimeGrid::time(int k) const {
  if (k == 0) return t_start;
  if (k == samples - 1) return t_end;
  return t_start + (t_end - t_start) * (static_cast<double>(k) / (samples - 1));
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) out.push_back(time(k));
  return out;
}

double DensityGrid::x(int j) const {
  if (j == 0) return 0.0;
  if (j == x_samples - 1) return length;
  return length * (static_cast<double>(j) / (x_samples - 1));
}

ComplexSeries autocorrelation(const Coefficients& coeffs, const SpectrumModel& model,
                              const TimeGrid& grid) {
  validate_grid(grid);
  if (coeffs.entries.empty()) throw std::invalid_argument("autocorrelation: empty coefficients");

  std::vector<double> weights;
  std::vector<double> energies;
  weights.reserve(coeffs.entries.size());
  energies.reserve(coeffs.entries.size());
  for (const auto& e : coeffs.entries) {
    weights.push_back(std::norm(e.amplitude));
    energies.push_back(model.energy(e.n));  // throws below the model floor
  }

  ComplexSeries series;
  series.grid = grid;
  series.values.reserve(static_cast<std::size_t>(grid.samples));
  for (int k = 0; k < grid.samples; ++k) {
    const double t = grid.time(k);
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j)
      acc += weights[j] * evolution_phase(energies[j], t);
    series.values.push_back(acc);
  }
  return series;
}

ComplexSeries autocorrelation_2d(const Coefficients2D& coeffs, const SpectrumModel2D& model,
                                 const TimeGrid& grid) {
  validate_grid(grid);
  if (coeffs.entries.empty()) throw std::invalid_argument("autocorrelation: empty coefficients");

  std::vector<double> weights;
  std::vector<double> energies;
  weights.reserve(coeffs.entries.size());
  energies.reserve(coeffs.entries.size());
  for (const auto& e : coeffs.entries) {
    weights.push_back(std::norm(e.amplitude));
    energies.push_back(model.energy(e.n1, e.n2));
  }

  ComplexSeries series;
  series.grid = grid;
  series.values.reserve(static_cast<std::size_t>(grid.samples));
  for (int k = 0; k < grid.samples; ++k) {
    const double t = grid.time(k);
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j)
      acc += weights[j] * evolution_phase(energies[j], t);
    series.values.push_back(acc);
  }
  return series;
}

double box_density(const Coefficients& coeffs, double mass, double length, double x, double t) {
  if (!(mass > 0.0) || !(length > 0.0))
    throw std::invalid_argument("box_density: mass and length must be > 0");
  if (!(x >= 0.0) || !(x <= length))
    throw std::invalid_argument("box_density: x = " + std::to_string(x) + " outside [0, " +
                                std::to_string(length) + "]");
  const SpectrumModel box = SpectrumModel::box1d(mass, length);
  const std::size_t states = coeffs.entries.size();
  std::vector<double> phi(states);
  std::vector<std::complex<double>> phases(states);
  for (std::size_t j = 0; j < states; ++j) {
    phi[j] = box_eigenfunction(coeffs.entries[j].n, x, length);
    phases[j] = evolution_phase(box.energy(coeffs.entries[j].n), t);
  }
  return density_point(coeffs.entries, phi.data(), phases.data());
}

DensityGrid carpet(const Coefficients& coeffs, double mass, double length, int x_samples,
                   const TimeGrid& grid) {
  validate_grid(grid);
  if (x_samples < 2) throw std::invalid_argument("carpet: x_samples must be >= 2");
  if (!(mass > 0.0) || !(length > 0.0))
    throw std::invalid_argument("carpet: mass and length must be > 0");

  const SpectrumModel box = SpectrumModel::box1d(mass, length);
  const std::size_t states = coeffs.entries.size();

  DensityGrid out;
  out.x_samples = x_samples;
  out.length = length;
  out.grid = grid;

  std::vector<double> energies(states);
  for (std::size_t j = 0; j < states; ++j) energies[j] = box.energy(coeffs.entries[j].n);

  // Eigenfunction table, one contiguous column per position; the per-point
  // sum below then matches box_density term for term.
  std::vector<double> phi(static_cast<std::size_t>(x_samples) * states);
  for (int jx = 0; jx < x_samples; ++jx) {
    const double x = out.x(jx);
    for (std::size_t j = 0; j < states; ++j)
      phi[static_cast<std::size_t>(jx) * states + j] =
          box_eigenfunction(coeffs.entries[j].n, x, length);
  }

  out.values.resize(static_cast<std::size_t>(grid.samples) * x_samples);
  std::vector<std::complex<double>> phases(states);
  for (int k = 0; k < grid.samples; ++k) {
    const double t = grid.time(k);
    for (std::size_t j = 0; j < states; ++j) phases[j] = evolution_phase(energies[j], t);
    for (int jx = 0; jx < x_samples; ++jx) {
      const double* col = &phi[static_cast<std::size_t>(jx) * states];
      out.values[static_cast<std::size_t>(k) * x_samples + jx] =
          density_point(coeffs.entries, col, phases.data());
    }
  }
  return out;
}

}  // namespace revival
