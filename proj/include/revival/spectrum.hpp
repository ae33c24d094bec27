#pragma once

#include <array>
#include <optional>
#include <string>

namespace revival {

/// Discrete energy laws E(n) in natural units (hbar = 1). Every built-in
/// model is analytic in n, so derivatives of the continuous extension are
/// evaluated in closed form rather than by finite differencing.
enum class SpectrumKind { Harmonic, Box1D, Rydberg, Polynomial };

class SpectrumModel {
public:
  /// E_n = omega * (n + 1/2), n >= 0.
  static SpectrumModel harmonic(double omega);
  /// E_n = n^2 pi^2 / (2 m L^2), n >= 1.
  static SpectrumModel box1d(double mass, double length);
  /// E_n = -1 / (2 n^2), n >= 1.
  static SpectrumModel rydberg();
  /// E_n = a0 + a1 n + a2 n^2 + a3 n^3, n >= 0. At least one of a1..a3
  /// must be nonzero.
  static SpectrumModel polynomial(const std::array<double, 4>& coeffs);

  SpectrumKind kind() const { return kind_; }
  std::string name() const;

  /// Smallest valid quantum number for this model.
  int n_floor() const;

  // Parameter accessors; meaningful for the corresponding kind only.
  double omega() const { return omega_; }
  double mass() const { return mass_; }
  double length() const { return length_; }
  const std::array<double, 4>& coefficients() const { return coeffs_; }

  /// Energy of level n. Throws std::domain_error below n_floor().
  double energy(int n) const;

  /// d^order E / dn^order at n_bar for order in {1, 2, 3}.
  double derivative(double n_bar, int order) const;

private:
  SpectrumModel() = default;

  SpectrumKind kind_ = SpectrumKind::Harmonic;
  double omega_ = 0.0;
  double mass_ = 0.0;
  double length_ = 0.0;
  std::array<double, 4> coeffs_{};
};

/// Separable two-quantum-number law E(n1, n2) = E1(n1) + E2(n2).
enum class Spectrum2DKind { Box2D, SeparableSum };

class SpectrumModel2D {
public:
  static SpectrumModel2D box2d(double mass, double length1, double length2);
  static SpectrumModel2D separable_sum(SpectrumModel first, SpectrumModel second);

  Spectrum2DKind kind() const { return kind_; }
  const SpectrumModel& axis(int i) const;

  double energy(int n1, int n2) const;

private:
  SpectrumModel2D(Spectrum2DKind kind, SpectrumModel a, SpectrumModel b);

  Spectrum2DKind kind_;
  std::array<SpectrumModel, 2> axes_;
};

/// Revival time scales at the packet mean. Magnitudes are reported
/// (t_cl = 2 pi / |E'|, t_rev = 4 pi / |E''|, t_sr = 12 pi / |E'''|); the
/// signed derivatives are kept alongside. A scale is present exactly when
/// its derivative is nonzero.
struct TimeScales {
  std::optional<double> t_cl;
  std::optional<double> t_rev;
  std::optional<double> t_sr;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

TimeScales time_scales(const SpectrumModel& model, double n_bar);

/// Two-quantum-number time scales. Per-axis scales follow the 1D
/// conventions; the mixed revival time is 2 pi / |d2E/dn1 dn2| and the
/// mixed third-order scales are 4 pi / |d3E/dni^2 dnj| (reciprocal Taylor
/// coefficients times 2 pi). Separable models have every mixed partial
/// identically zero, so those scales are always absent here.
struct TimeScales2D {
  std::optional<double> t_cl_1;
  std::optional<double> t_cl_2;
  std::optional<double> t_rev_1;
  std::optional<double> t_rev_2;
  std::optional<double> t_rev_mixed;
  /// Third-order scales for the partials (3,0), (2,1), (1,2), (0,3).
  std::array<std::optional<double>, 4> t_third;
};

TimeScales2D time_scales_2d(const SpectrumModel2D& model, double n_bar_1, double n_bar_2);

/// Revival structure classes: TypeI when E'' = E''' = 0 at n_bar (pure
/// periodic motion), TypeII when E'' != 0 and E''' = 0 (perfect
/// revivals), TypeIII otherwise.
enum class RevivalClass { TypeI_Periodic, TypeII_PerfectRevival, TypeIII_General };

/// Throws std::domain_error when E'(n_bar) = 0 (no classical period).
RevivalClass classify(const SpectrumModel& model, double n_bar);

std::string to_string(RevivalClass c);

}  // namespace revival
