#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revival/dynamics.hpp"

namespace revival {

/// Reduced fraction: p >= 0, q >= 1, gcd(p, q) = 1.
struct Rational {
  long long p = 0;
  long long q = 1;

  bool operator==(const Rational&) const = default;
};

/// Reduces p/q; throws std::invalid_argument unless p >= 0 and q >= 1.
Rational make_rational(long long p, long long q);

std::string to_string(const Rational& r);

struct FractionLabel {
  Rational value;
  double residual = 0.0;  // |t / t_rev - p/q|
};

/// A detected |A|^2 peak. The fraction label, when attached, names the
/// nearest p/q of the reference revival time.
struct RevivalEvent {
  double t = 0.0;
  double height = 0.0;  // |A(t)|^2
  std::optional<FractionLabel> fraction;
};

/// Interior strict local maxima of |A|^2 at or above min_height, greedily
/// thinned so retained peaks are at least min_separation apart (higher
/// peaks kept first), returned in time order. Fractions are left unset.
std::vector<RevivalEvent> detect_revivals(const ComplexSeries& series, double min_height,
                                          double min_separation);

/// Reduced p/q with q <= q_max minimizing |t/t_rev - p/q|, if the minimum
/// is within tol; ties prefer smaller q, then smaller p.
std::optional<FractionLabel> label_fraction(double t, double t_rev, int q_max, double tol);

struct BeatPeak {
  double frequency = 0.0;  // cycles per unit time
  double power = 0.0;
};

/// Spectral peaks of |A|^2, strongest first.
struct BeatReport {
  std::vector<BeatPeak> frequencies;
};

/// Discrete Fourier analysis of the mean-subtracted |A(t_k)|^2 sequence;
/// reports up to top_k spectral peaks with parabolic interpolation
/// between adjacent bins. Needs at least 8 samples.
BeatReport periodogram_beats(const ComplexSeries& series, int top_k);

/// Best rational approximation p/q to t1/t2 with q <= q_max, found via
/// continued-fraction convergents and semiconvergents; returned only when
/// |t1/t2 - p/q| <= tol.
std::optional<Rational> commensurate(double t1, double t2, int q_max, double tol);

/// Side ratio L1/L2 = sqrt(p/q) making the 2D box revival times satisfy
/// t_rev,1 / t_rev,2 = p/q. Requires p, q >= 1.
double tune_box_ratio(const Rational& target);

/// Least common multiple time q*t1 = p*t2 of two commensurate revival
/// times; the full-revival period of the joint system. Throws
/// std::invalid_argument when |t1/t2 - p/q| exceeds 1e-9 relative.
double common_revival(double t1, double t2, const Rational& ratio);

}  // namespace revival
