#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "revival/analysis.hpp"
#include "revival/dynamics.hpp"
#include "revival/spectrum.hpp"
#include "revival/wavepacket.hpp"

namespace revival {

/// Malformed or inconsistent scenario document (CLI exit code 2).
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failed file read or write (CLI exit code 4).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// End of the simulated window: either an absolute time (scale empty) or
/// a multiple of a named time scale such as "t_rev" or "t_cl_2".
struct TimeSpan {
  double multiplier = 1.0;
  std::string scale;
};

struct AnalysisParams {
  double min_height = 0.5;
  std::optional<double> min_separation;  // default: half the classical period
  int q_max = 10;
  double tol = 0.01;
};

/// A fully validated scenario document.
struct Scenario {
  std::variant<SpectrumModel, SpectrumModel2D> model = SpectrumModel::rydberg();
  std::vector<PacketSpec> packets;  // one for 1D models, two for 2D
  TimeSpan t_end;
  int samples = 4096;
  AnalysisParams analysis;
  std::optional<std::filesystem::path> series_path;
  std::optional<std::filesystem::path> events_path;
  std::optional<std::filesystem::path> carpet_path;
  int x_samples = 0;  // set when a carpet output is requested
};

/// Parses and validates a scenario document (JSON text). Every defect, a
/// syntax error, an unknown key or model kind, a missing field, or a
/// named time scale absent for the chosen model, raises ScenarioError.
Scenario parse_scenario(const std::string& document);

/// Reads the file (IoError on failure) and parses it.
Scenario load_scenario_file(const std::filesystem::path& path);

struct RunReport {
  std::vector<std::pair<std::string, std::optional<double>>> scales;
  double t_end = 0.0;
  std::optional<std::size_t> event_count;
  std::vector<std::filesystem::path> written;
  std::vector<std::string> warnings;
};

/// Executes a scenario: computes time scales, builds packets, evolves the
/// autocorrelation (and the carpet for box models when requested), runs
/// detection and labeling, and writes the requested artifacts. Identical
/// scenarios produce byte-identical output files.
RunReport run_scenario(const Scenario& scenario);

void write_series_csv(const ComplexSeries& series, const std::filesystem::path& path);
void write_events_csv(const std::vector<RevivalEvent>& events, const std::filesystem::path& path);

/// 16-bit binary PGM (maxval 65535, big-endian), density normalized by
/// the grid's global maximum; row 0 is t_start.
void write_carpet_pgm(const DensityGrid& grid, const std::filesystem::path& path);

/// Shortest decimal form that round-trips to the same double; locale
/// independent.
std::string format_double(double value);

}  // namespace revival
