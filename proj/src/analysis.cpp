#include "revival/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace revival {

namespace {

// Best rational approximation to x > 0 with denominator bound, via
// continued-fraction convergents, falling back to the deepest valid
// semiconvergent when the next convergent would overshoot q_max. Ties
// prefer the smaller denominator.
std::pair<long long, long long> best_rational(double x, long long q_max) {
  long long p_prev = 1, q_prev = 0;  // conventional h_{-1}/k_{-1}
  long long p_cur = static_cast<long long>(std::floor(x));
  long long q_cur = 1;
  double frac = x - std::floor(x);

  for (int iter = 0; iter < 64 && frac > 1e-18; ++iter) {
    const double y = 1.0 / frac;
    const double a_real = std::floor(y);
    // The next convergent denominator would be a*q_cur + q_prev; cap the
    // partial quotient at the largest value still within q_max.
    const long long a_max = (q_max - q_prev) / q_cur;
    if (a_real > static_cast<double>(a_max)) {
      if (a_max >= 1) {
        const long long p_semi = a_max * p_cur + p_prev;
        const long long q_semi = a_max * q_cur + q_prev;
        const double err_semi = std::abs(x - static_cast<double>(p_semi) / q_semi);
        const double err_cur = std::abs(x - static_cast<double>(p_cur) / q_cur);
        if (err_semi < err_cur) return {p_semi, q_semi};
      }
      return {p_cur, q_cur};
    }
    const long long a = static_cast<long long>(a_real);
    const long long p_next = a * p_cur + p_prev;
    const long long q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    frac = y - a_real;
  }
  return {p_cur, q_cur};
}

}  // namespace

Rational make_rational(long long p, long long q) {
  if (p < 0 || q < 1) throw std::invalid_argument("rational: requires p >= 0 and q >= 1");
  const long long g = std::gcd(p, q);
  return {p / g, q / g};
}

std::string to_string(const Rational& r) {
  return std::to_string(r.p) + "/" + std::to_string(r.q);
}

std::vector<RevivalEvent> detect_revivals(const ComplexSeries& series, double min_height,
                                          double min_separation) {
  if (series.values.empty()) throw std::invalid_argument("detect_revivals: empty series");
  if (!(min_height > 0.0 && min_height < 1.0))
    throw std::invalid_argument("detect_revivals: min_height must lie in (0, 1)");
  if (min_separation < series.grid.dt())
    throw std::invalid_argument("detect_revivals: min_separation must be >= the grid spacing");

  const int n = static_cast<int>(series.values.size());
  std::vector<double> height(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) height[static_cast<std::size_t>(k)] = std::norm(series.values[k]);

  std::vector<int> candidates;
  for (int k = 1; k + 1 < n; ++k) {
    const double h = height[static_cast<std::size_t>(k)];
    if (h >= min_height && h > height[static_cast<std::size_t>(k - 1)] &&
        h > height[static_cast<std::size_t>(k + 1)])
      candidates.push_back(k);
  }

  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    const double ha = height[static_cast<std::size_t>(a)];
    const double hb = height[static_cast<std::size_t>(b)];
    if (ha != hb) return ha > hb;
    return a < b;
  });

  std::vector<int> kept;
  for (int k : candidates) {
    const double t = series.grid.time(k);
    bool clear = true;
    for (int j : kept) {
      if (std::abs(t - series.grid.time(j)) < min_separation) {
        clear = false;
        break;
      }
    }
    if (clear) kept.push_back(k);
  }
  std::sort(kept.begin(), kept.end());

  std::vector<RevivalEvent> events;
  events.reserve(kept.size());
  for (int k : kept)
    events.push_back({series.grid.time(k), height[static_cast<std::size_t>(k)], std::nullopt});
  return events;
}

std::optional<FractionLabel> label_fraction(double t, double t_rev, int q_max, double tol) {
  if (!(t_rev > 0.0)) throw std::invalid_argument("label_fraction: t_rev must be > 0");
  if (t < 0.0) throw std::invalid_argument("label_fraction: t must be >= 0");
  if (q_max < 1) throw std::invalid_argument("label_fraction: q_max must be >= 1");

  const double x = t / t_rev;
  bool found = false;
  double best_err = 0.0;
  long long best_p = 0, best_q = 1;
  for (long long q = 1; q <= q_max; ++q) {
    const long long base = static_cast<long long>(std::floor(x * static_cast<double>(q)));
    for (long long p : {base, base + 1}) {
      if (p < 0) continue;
      const double err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
      if (!found || err < best_err) {
        found = true;
        best_err = err;
        best_p = p;
        best_q = q;
      }
    }
  }
  if (!found || best_err > tol) return std::nullopt;
  return FractionLabel{make_rational(best_p, best_q), best_err};
}

BeatReport periodogram_beats(const ComplexSeries& series, int top_k) {
  const int n = static_cast<int>(series.values.size());
  if (n < 8) throw std::invalid_argument("periodogram_beats: series too short (need >= 8 samples)");
  if (top_k < 1) throw std::invalid_argument("periodogram_beats: top_k must be >= 1");

  std::vector<double> y(static_cast<std::size_t>(n));
  double mean = 0.0;
  for (int k = 0; k < n; ++k) {
    y[static_cast<std::size_t>(k)] = std::norm(series.values[k]);
    mean += y[static_cast<std::size_t>(k)];
  }
  mean /= n;
  for (double& v : y) v -= mean;

  // Roots of unity table; e^{-2 pi i m k / n} = table[(m k) mod n].
  std::vector<std::complex<double>> table(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    table[static_cast<std::size_t>(j)] =
        std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) / n);

  const int bins = n / 2;
  std::vector<double> power(static_cast<std::size_t>(bins) + 1);
  for (int m = 0; m <= bins; ++m) {
    std::complex<double> acc = 0.0;
    for (int k = 0; k < n; ++k)
      acc += y[static_cast<std::size_t>(k)] *
             table[static_cast<std::size_t>((static_cast<long long>(m) * k) % n)];
    power[static_cast<std::size_t>(m)] = std::norm(acc) / n;
  }

  struct RawPeak {
    int bin;
    double freq;
    double power;
  };
  const double dt = series.grid.dt();
  const double bin_width = 1.0 / (static_cast<double>(n) * dt);
  const double nyquist = 0.5 / dt;

  std::vector<RawPeak> peaks;
  for (int m = 1; m < bins; ++m) {
    const double pm = power[static_cast<std::size_t>(m)];
    const double pl = power[static_cast<std::size_t>(m - 1)];
    const double pr = power[static_cast<std::size_t>(m + 1)];
    if (!(pm > pl && pm > pr)) continue;
    const double denom = pl - 2.0 * pm + pr;
    double delta = denom != 0.0 ? 0.5 * (pl - pr) / denom : 0.0;
    delta = std::clamp(delta, -0.5, 0.5);
    const double freq = std::clamp((static_cast<double>(m) + delta) * bin_width, 0.0, nyquist);
    const double value = pm - 0.25 * (pl - pr) * delta;
    peaks.push_back({m, freq, value});
  }

  std::sort(peaks.begin(), peaks.end(), [](const RawPeak& a, const RawPeak& b) {
    if (a.power != b.power) return a.power > b.power;
    return a.freq < b.freq;
  });
  if (static_cast<int>(peaks.size()) > top_k) peaks.resize(static_cast<std::size_t>(top_k));

  BeatReport report;
  report.frequencies.reserve(peaks.size());
  for (const auto& p : peaks) report.frequencies.push_back({p.freq, p.power});
  return report;
}

std::optional<Rational> commensurate(double t1, double t2, int q_max, double tol) {
  if (!(t1 > 0.0) || !(t2 > 0.0)) throw std::invalid_argument("commensurate: times must be > 0");
  if (q_max < 1) throw std::invalid_argument("commensurate: q_max must be >= 1");
  const double x = t1 / t2;
  if (!(x < 1e15)) throw std::invalid_argument("commensurate: ratio too large");

  const auto [p, q] = best_rational(x, q_max);
  const double err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
  if (err > tol) return std::nullopt;
  return make_rational(p, q);
}

double tune_box_ratio(const Rational& target) {
  if (target.p < 1 || target.q < 1)
    throw std::invalid_argument("tune_box_ratio: requires p >= 1 and q >= 1");
  return std::sqrt(static_cast<double>(target.p) / static_cast<double>(target.q));
}

double common_revival(double t1, double t2, const Rational& ratio) {
  if (!(t1 > 0.0) || !(t2 > 0.0)) throw std::invalid_argument("common_revival: times must be > 0");
  if (ratio.p < 1 || ratio.q < 1)
    throw std::invalid_argument("common_revival: ratio must have p >= 1 and q >= 1");
  const double target = static_cast<double>(ratio.p) / static_cast<double>(ratio.q);
  const double residual = std::abs(t1 / t2 - target) / target;
  if (residual > 1e-9)
    throw std::invalid_argument("common_revival: t1/t2 inconsistent with " + to_string(ratio) +
                                ", relative residual = " + std::to_string(residual));
  return static_cast<double>(ratio.q) * t1;
}

}  // namespace revival
