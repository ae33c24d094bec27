#include "revival/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace revival {

namespace {

void validate_spec(const PacketSpec& spec) {
  if (!(spec.sigma > 0.0)) throw std::invalid_argument("packet: sigma must be > 0");
  if (!(spec.n_bar > 0.0)) throw std::invalid_argument("packet: n_bar must be > 0");
  if (spec.n_min > spec.n_max) throw std::invalid_argument("packet: empty support (n_min > n_max)");
  const double floor_nbar = std::floor(spec.n_bar);
  if (spec.n_min > floor_nbar || floor_nbar > spec.n_max)
    throw std::invalid_argument("packet: support [" + std::to_string(spec.n_min) + ", " +
                                std::to_string(spec.n_max) + "] must bracket n_bar = " +
                                std::to_string(spec.n_bar));
}

}  // namespace

Coefficients gaussian_coefficients(const PacketSpec& spec) {
  validate_spec(spec);

  // Weights are evaluated relative to the largest lattice weight so the
  // in-support sum never underflows for narrow packets.
  const double d_min = std::abs(std::round(spec.n_bar) - spec.n_bar);
  const double d_min2 = d_min * d_min;
  const double two_sigma2 = 2.0 * spec.sigma * spec.sigma;

  auto weight = [&](int n) {
    const double d = static_cast<double>(n) - spec.n_bar;
    return std::exp(-(d * d - d_min2) / two_sigma2);
  };

  // Window over which the full lattice sum is effectively exact: weights
  // beyond 40 sigma underflow to zero.
  const double reach = 40.0 * spec.sigma + 2.0;
  const long long lo_ll = std::min<long long>(spec.n_min, llround(std::floor(spec.n_bar - reach)));
  const long long hi_ll = std::max<long long>(spec.n_max, llround(std::ceil(spec.n_bar + reach)));
  if (hi_ll - lo_ll > 10'000'000)
    throw std::invalid_argument("packet: sigma too large for tail accounting");
  const int lo = static_cast<int>(lo_ll);
  const int hi = static_cast<int>(hi_ll);

  double total = 0.0;
  double in_support = 0.0;
  for (int n = lo; n <= hi; ++n) {
    const double w = weight(n);
    total += w;
    if (n >= spec.n_min && n <= spec.n_max) in_support += w;
  }
  if (in_support <= 0.0)
    throw std::invalid_argument("packet: all in-support weights underflow; widen the support");

  Coefficients out;
  out.tail_mass = (total - in_support) / total;
  const double norm = 1.0 / std::sqrt(in_support);
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    const double d = static_cast<double>(n) - spec.n_bar;
    const double amp = std::exp(-(d * d - d_min2) / (2.0 * two_sigma2)) * norm;
    if (amp != 0.0) out.entries.push_back({n, amp});
  }
  return out;
}

Coefficients2D product_coefficients_2d(const PacketSpec& spec1, const PacketSpec& spec2) {
  const Coefficients a = gaussian_coefficients(spec1);
  const Coefficients b = gaussian_coefficients(spec2);

  Coefficients2D out;
  out.tail_mass = 1.0 - (1.0 - a.tail_mass) * (1.0 - b.tail_mass);
  out.entries.reserve(a.entries.size() * b.entries.size());
  for (const auto& ea : a.entries)
    for (const auto& eb : b.entries)
      out.entries.push_back({ea.n, eb.n, ea.amplitude * eb.amplitude});
  return out;
}

PacketMoments packet_moments(const Coefficients& coeffs) {
  double mean = 0.0;
  for (const auto& e : coeffs.entries) mean += static_cast<double>(e.n) * std::norm(e.amplitude);
  double var = 0.0;
  for (const auto& e : coeffs.entries) {
    const double d = static_cast<double>(e.n) - mean;
    var += d * d * std::norm(e.amplitude);
  }
  return {mean, std::sqrt(var)};
}

}  // namespace revival
