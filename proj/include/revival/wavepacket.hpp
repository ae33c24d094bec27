#pragma once

#include <complex>
#include <vector>

namespace revival {

/// Gaussian weighting over quantum numbers: |c_n|^2 has mean n_bar and
/// standard deviation sigma on the integer lattice, restricted to
/// [n_min, n_max].
struct PacketSpec {
  double n_bar = 1.0;
  double sigma = 1.0;
  int n_min = 0;
  int n_max = 0;
};

/// Relative weight outside the support at or above this threshold marks
/// the built packet with a truncation warning.
inline constexpr double kTailTolerance = 1e-12;

struct Coefficients {
  struct Entry {
    int n;
    std::complex<double> amplitude;
  };

  std::vector<Entry> entries;  // strictly increasing in n
  double tail_mass = 0.0;      // relative weight lost to support truncation

  bool truncation_warning() const { return tail_mass >= kTailTolerance; }
};

struct Coefficients2D {
  struct Entry {
    int n1;
    int n2;
    std::complex<double> amplitude;
  };

  std::vector<Entry> entries;  // lexicographically increasing in (n1, n2)
  double tail_mass = 0.0;

  bool truncation_warning() const { return tail_mass >= kTailTolerance; }
};

/// c_n = N exp(-(n - n_bar)^2 / (4 sigma^2)) with real N > 0 fixed by
/// sum |c_n|^2 = 1; all phases zero. Entries whose weight underflows to
/// zero are dropped.
Coefficients gaussian_coefficients(const PacketSpec& spec);

/// amplitude(n1, n2) = c1_{n1} * c2_{n2}; normalized because both factors
/// are. Truncation warnings from either factor propagate.
Coefficients2D product_coefficients_2d(const PacketSpec& spec1, const PacketSpec& spec2);

struct PacketMoments {
  double mean = 0.0;
  double std_dev = 0.0;
};

/// Mean and standard deviation of n under |c_n|^2. Assumes normalized
/// coefficients.
PacketMoments packet_moments(const Coefficients& coeffs);

}  // namespace revival
