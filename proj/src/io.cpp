#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <system_error>

#include "revival/scenario.hpp"

namespace revival {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

void write_series_csv(const ComplexSeries& series, const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << "t,re_A,im_A,abs_A2\n";
  for (int k = 0; k < series.grid.samples; ++k) {
    const std::complex<double> a = series.values[static_cast<std::size_t>(k)];
    out << format_double(series.grid.time(k)) << ',' << format_double(a.real()) << ','
        << format_double(a.imag()) << ',' << format_double(std::norm(a)) << '\n';
  }
  finish_output(out, path);
}

void write_events_csv(const std::vector<RevivalEvent>& events, const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << "t,height,fraction\n";
  for (const auto& e : events) {
    out << format_double(e.t) << ',' << format_double(e.height) << ',';
    if (e.fraction) out << to_string(e.fraction->value);
    out << '\n';
  }
  finish_output(out, path);
}

void write_carpet_pgm(const DensityGrid& grid, const std::filesystem::path& path) {
  constexpr int kMaxGray = 65535;
  double peak = 0.0;
  for (double v : grid.values) peak = std::max(peak, v);

  std::ofstream out = open_output(path);
  out << "P5\n" << grid.x_samples << " " << grid.grid.samples << "\n" << kMaxGray << "\n";
  for (double v : grid.values) {
    const long level = peak > 0.0 ? std::lround(static_cast<double>(kMaxGray) * (v / peak)) : 0;
    const auto pixel = static_cast<std::uint16_t>(std::clamp(level, 0L, static_cast<long>(kMaxGray)));
    const char bytes[2] = {static_cast<char>(pixel >> 8), static_cast<char>(pixel & 0xFF)};
    out.write(bytes, 2);
  }
  finish_output(out, path);
}

}  // namespace revival
