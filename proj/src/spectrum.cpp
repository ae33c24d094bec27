#include "revival/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace revival {

namespace {

constexpr double kPi = std::numbers::pi;

std::optional<double> scale_from(double numerator, double derivative) {
  if (derivative == 0.0) return std::nullopt;
  return std::abs(numerator / derivative);
}

}  // namespace

SpectrumModel SpectrumModel::harmonic(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("harmonic: omega must be > 0");
  SpectrumModel m;
  m.kind_ = SpectrumKind::Harmonic;
  m.omega_ = omega;
  return m;
}

SpectrumModel SpectrumModel::box1d(double mass, double length) {
  if (!(mass > 0.0)) throw std::invalid_argument("box1d: mass must be > 0");
  if (!(length > 0.0)) throw std::invalid_argument("box1d: length must be > 0");
  SpectrumModel m;
  m.kind_ = SpectrumKind::Box1D;
  m.mass_ = mass;
  m.length_ = length;
  return m;
}

SpectrumModel SpectrumModel::rydberg() {
  SpectrumModel m;
  m.kind_ = SpectrumKind::Rydberg;
  return m;
}

SpectrumModel SpectrumModel::polynomial(const std::array<double, 4>& coeffs) {
  if (coeffs[1] == 0.0 && coeffs[2] == 0.0 && coeffs[3] == 0.0)
    throw std::invalid_argument("polynomial: needs a nonzero coefficient of order >= 1");
  SpectrumModel m;
  m.kind_ = SpectrumKind::Polynomial;
  m.coeffs_ = coeffs;
  return m;
}

std::string SpectrumModel::name() const {
  switch (kind_) {
    case SpectrumKind::Harmonic: return "harmonic";
    case SpectrumKind::Box1D: return "box1d";
    case SpectrumKind::Rydberg: return "rydberg";
    case SpectrumKind::Polynomial: return "polynomial";
  }
  return "unknown";
}

int SpectrumModel::n_floor() const {
  switch (kind_) {
    case SpectrumKind::Harmonic:
    case SpectrumKind::Polynomial: return 0;
    case SpectrumKind::Box1D:
    case SpectrumKind::Rydberg: return 1;
  }
  return 0;
}

double SpectrumModel::energy(int n) const {
  if (n < n_floor())
    throw std::domain_error(name() + ": quantum number " + std::to_string(n) +
                            " is below the floor " + std::to_string(n_floor()));
  const double x = static_cast<double>(n);
  switch (kind_) {
    case SpectrumKind::Harmonic: return omega_ * (x + 0.5);
    case SpectrumKind::Box1D: return x * x * kPi * kPi / (2.0 * mass_ * length_ * length_);
    case SpectrumKind::Rydberg: return -0.5 / (x * x);
    case SpectrumKind::Polynomial:
      return ((coeffs_[3] * x + coeffs_[2]) * x + coeffs_[1]) * x + coeffs_[0];
  }
  return 0.0;
}

double SpectrumModel::derivative(double n_bar, int order) const {
  if (order < 1 || order > 3)
    throw std::invalid_argument("derivative: order must be 1, 2, or 3");
  if (!(n_bar >= n_floor()))
    throw std::domain_error(name() + ": n_bar " + std::to_string(n_bar) +
                            " is below the floor " + std::to_string(n_floor()));
  switch (kind_) {
    case SpectrumKind::Harmonic:
      return order == 1 ? omega_ : 0.0;
    case SpectrumKind::Box1D: {
      const double curvature = kPi * kPi / (mass_ * length_ * length_);
      if (order == 1) return n_bar * curvature;
      if (order == 2) return curvature;
      return 0.0;
    }
    case SpectrumKind::Rydberg: {
      if (order == 1) return std::pow(n_bar, -3.0);
      if (order == 2) return -3.0 * std::pow(n_bar, -4.0);
      return 12.0 * std::pow(n_bar, -5.0);
    }
    case SpectrumKind::Polynomial: {
      if (order == 1) return coeffs_[1] + 2.0 * coeffs_[2] * n_bar + 3.0 * coeffs_[3] * n_bar * n_bar;
      if (order == 2) return 2.0 * coeffs_[2] + 6.0 * coeffs_[3] * n_bar;
      return 6.0 * coeffs_[3];
    }
  }
  return 0.0;
}

SpectrumModel2D::SpectrumModel2D(Spectrum2DKind kind, SpectrumModel a, SpectrumModel b)
    : kind_(kind), axes_{std::move(a), std::move(b)} {}

SpectrumModel2D SpectrumModel2D::box2d(double mass, double length1, double length2) {
  return SpectrumModel2D(Spectrum2DKind::Box2D, SpectrumModel::box1d(mass, length1),
                         SpectrumModel::box1d(mass, length2));
}

SpectrumModel2D SpectrumModel2D::separable_sum(SpectrumModel first, SpectrumModel second) {
  return SpectrumModel2D(Spectrum2DKind::SeparableSum, std::move(first), std::move(second));
}

const SpectrumModel& SpectrumModel2D::axis(int i) const {
  if (i != 0 && i != 1) throw std::invalid_argument("axis index must be 0 or 1");
  return axes_[static_cast<std::size_t>(i)];
}

double SpectrumModel2D::energy(int n1, int n2) const {
  return axes_[0].energy(n1) + axes_[1].energy(n2);
}

TimeScales time_scales(const SpectrumModel& model, double n_bar) {
  TimeScales ts;
  ts.d1 = model.derivative(n_bar, 1);
  ts.d2 = model.derivative(n_bar, 2);
  ts.d3 = model.derivative(n_bar, 3);
  ts.t_cl = scale_from(2.0 * kPi, ts.d1);
  ts.t_rev = scale_from(4.0 * kPi, ts.d2);
  ts.t_sr = scale_from(12.0 * kPi, ts.d3);
  return ts;
}

TimeScales2D time_scales_2d(const SpectrumModel2D& model, double n_bar_1, double n_bar_2) {
  const SpectrumModel& a = model.axis(0);
  const SpectrumModel& b = model.axis(1);
  TimeScales2D ts;
  ts.t_cl_1 = scale_from(2.0 * kPi, a.derivative(n_bar_1, 1));
  ts.t_cl_2 = scale_from(2.0 * kPi, b.derivative(n_bar_2, 1));
  ts.t_rev_1 = scale_from(4.0 * kPi, a.derivative(n_bar_1, 2));
  ts.t_rev_2 = scale_from(4.0 * kPi, b.derivative(n_bar_2, 2));
  // Mixed partials of a separable law vanish identically.
  ts.t_rev_mixed = std::nullopt;
  ts.t_third[0] = scale_from(12.0 * kPi, a.derivative(n_bar_1, 3));
  ts.t_third[1] = std::nullopt;
  ts.t_third[2] = std::nullopt;
  ts.t_third[3] = scale_from(12.0 * kPi, b.derivative(n_bar_2, 3));
  return ts;
}

RevivalClass classify(const SpectrumModel& model, double n_bar) {
  const double d1 = model.derivative(n_bar, 1);
  if (d1 == 0.0)
    throw std::domain_error(model.name() + ": degenerate spectrum, E'(n_bar) = 0 at n_bar = " +
                            std::to_string(n_bar));
  const double d2 = model.derivative(n_bar, 2);
  const double d3 = model.derivative(n_bar, 3);
  if (d2 == 0.0 && d3 == 0.0) return RevivalClass::TypeI_Periodic;
  if (d3 == 0.0) return RevivalClass::TypeII_PerfectRevival;
  return RevivalClass::TypeIII_General;
}

std::string to_string(RevivalClass c) {
  switch (c) {
    case RevivalClass::TypeI_Periodic: return "TypeI_Periodic";
    case RevivalClass::TypeII_PerfectRevival: return "TypeII_PerfectRevival";
    case RevivalClass::TypeIII_General: return "TypeIII_General";
  }
  return "unknown";
}

}  // namespace revival
