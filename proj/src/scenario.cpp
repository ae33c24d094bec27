#include "revival/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace revival {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ScenarioError(message); }

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) fail("unknown key \"" + item.key() + "\" in " + where);
  }
}

const json& require(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail(where + ": missing required field \"" + key + "\"");
  return obj.at(key);
}

double as_number(const json& v, const std::string& what) {
  if (!v.is_number()) fail(what + " must be a number");
  return v.get<double>();
}

int as_integer(const json& v, const std::string& what) {
  if (!v.is_number_integer()) fail(what + " must be an integer");
  return v.get<int>();
}

std::string as_string(const json& v, const std::string& what) {
  if (!v.is_string()) fail(what + " must be a string");
  return v.get<std::string>();
}

SpectrumModel parse_model_1d(const json& m, const std::string& where) {
  const std::string kind = as_string(require(m, where, "kind"), where + ".kind");
  try {
    if (kind == "harmonic") {
      check_keys(m, where, {"kind", "omega"});
      return SpectrumModel::harmonic(as_number(require(m, where, "omega"), where + ".omega"));
    }
    if (kind == "box1d") {
      check_keys(m, where, {"kind", "mass", "length"});
      return SpectrumModel::box1d(as_number(require(m, where, "mass"), where + ".mass"),
                                  as_number(require(m, where, "length"), where + ".length"));
    }
    if (kind == "rydberg") {
      check_keys(m, where, {"kind"});
      return SpectrumModel::rydberg();
    }
    if (kind == "polynomial") {
      check_keys(m, where, {"kind", "coefficients"});
      const json& arr = require(m, where, "coefficients");
      if (!arr.is_array() || arr.empty() || arr.size() > 4)
        fail(where + ".coefficients must be an array of 1 to 4 numbers");
      std::array<double, 4> coeffs{};
      for (std::size_t i = 0; i < arr.size(); ++i)
        coeffs[i] = as_number(arr[i], where + ".coefficients");
      return SpectrumModel::polynomial(coeffs);
    }
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
  fail(where + ": unknown model kind \"" + kind + "\"");
}

std::variant<SpectrumModel, SpectrumModel2D> parse_model(const json& m) {
  if (!m.is_object()) fail("model must be an object");
  const std::string kind = as_string(require(m, "model", "kind"), "model.kind");
  if (kind == "box2d") {
    check_keys(m, "model", {"kind", "mass", "length1", "length2"});
    try {
      return SpectrumModel2D::box2d(as_number(require(m, "model", "mass"), "model.mass"),
                                    as_number(require(m, "model", "length1"), "model.length1"),
                                    as_number(require(m, "model", "length2"), "model.length2"));
    } catch (const std::invalid_argument& e) {
      fail(std::string("model: ") + e.what());
    }
  }
  if (kind == "separable_sum") {
    check_keys(m, "model", {"kind", "first", "second"});
    return SpectrumModel2D::separable_sum(
        parse_model_1d(require(m, "model", "first"), "model.first"),
        parse_model_1d(require(m, "model", "second"), "model.second"));
  }
  return parse_model_1d(m, "model");
}

PacketSpec parse_packet(const json& p, const std::string& where, int model_floor) {
  if (!p.is_object()) fail(where + " must be an object");
  check_keys(p, where, {"n_bar", "sigma", "n_min", "n_max"});
  PacketSpec spec;
  spec.n_bar = as_number(require(p, where, "n_bar"), where + ".n_bar");
  spec.sigma = as_number(require(p, where, "sigma"), where + ".sigma");
  spec.n_min = as_integer(require(p, where, "n_min"), where + ".n_min");
  spec.n_max = as_integer(require(p, where, "n_max"), where + ".n_max");
  if (!(spec.sigma > 0.0)) fail(where + ".sigma must be > 0");
  if (!(spec.n_bar > 0.0)) fail(where + ".n_bar must be > 0");
  if (spec.n_min > spec.n_max) fail(where + ": empty support (n_min > n_max)");
  const double fl = std::floor(spec.n_bar);
  if (spec.n_min > fl || fl > spec.n_max) fail(where + ": support must bracket n_bar");
  if (spec.n_min < model_floor)
    fail(where + ".n_min is below the model floor " + std::to_string(model_floor));
  return spec;
}

TimeSpan parse_t_end(const json& v) {
  if (v.is_number()) {
    const double t = v.get<double>();
    if (!(t > 0.0)) fail("time.t_end must be > 0");
    return {t, ""};
  }
  if (!v.is_string()) fail("time.t_end must be a number or a string like \"2 t_rev\"");
  std::istringstream in(v.get<std::string>());
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty() || tokens.size() > 2)
    fail("time.t_end must be \"<scale>\" or \"<multiplier> <scale>\"");
  TimeSpan span;
  if (tokens.size() == 2) {
    std::size_t used = 0;
    try {
      span.multiplier = std::stod(tokens[0], &used);
    } catch (const std::exception&) {
      fail("time.t_end: bad multiplier \"" + tokens[0] + "\"");
    }
    if (used != tokens[0].size()) fail("time.t_end: bad multiplier \"" + tokens[0] + "\"");
    if (!(span.multiplier > 0.0)) fail("time.t_end: multiplier must be > 0");
  }
  span.scale = tokens.back();
  return span;
}

// Named time scales available to t_end, given the model and packets.
std::vector<std::pair<std::string, std::optional<double>>> named_scales(
    const Scenario& scenario) {
  std::vector<std::pair<std::string, std::optional<double>>> out;
  if (std::holds_alternative<SpectrumModel>(scenario.model)) {
    const TimeScales ts =
        time_scales(std::get<SpectrumModel>(scenario.model), scenario.packets[0].n_bar);
    out = {{"t_cl", ts.t_cl}, {"t_rev", ts.t_rev}, {"t_sr", ts.t_sr}};
  } else {
    const TimeScales2D ts = time_scales_2d(std::get<SpectrumModel2D>(scenario.model),
                                           scenario.packets[0].n_bar, scenario.packets[1].n_bar);
    out = {{"t_cl_1", ts.t_cl_1},
           {"t_cl_2", ts.t_cl_2},
           {"t_rev_1", ts.t_rev_1},
           {"t_rev_2", ts.t_rev_2},
           {"t_rev_mixed", ts.t_rev_mixed}};
    std::optional<double> t_common;
    if (ts.t_rev_1 && ts.t_rev_2) {
      const auto ratio = commensurate(*ts.t_rev_1, *ts.t_rev_2, scenario.analysis.q_max,
                                      scenario.analysis.tol);
      if (ratio) t_common = common_revival(*ts.t_rev_1, *ts.t_rev_2, *ratio);
    }
    out.emplace_back("t_common", t_common);
  }
  return out;
}

double resolve_t_end(const Scenario& scenario) {
  if (scenario.t_end.scale.empty()) return scenario.t_end.multiplier;
  const auto scales = named_scales(scenario);
  for (const auto& [name, value] : scales) {
    if (name != scenario.t_end.scale) continue;
    if (!value) fail("time scale \"" + name + "\" is absent for this model and packet");
    return scenario.t_end.multiplier * *value;
  }
  std::string known;
  for (const auto& [name, value] : scales) known += (known.empty() ? "" : ", ") + name;
  fail("unknown time scale \"" + scenario.t_end.scale + "\" (expected one of: " + known + ")");
}

}  // namespace

Scenario parse_scenario(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(document, e.byte);
    fail("scenario syntax error at line " + std::to_string(line) + ", column " +
         std::to_string(column));
  }
  if (!doc.is_object()) fail("scenario root must be an object");
  check_keys(doc, "scenario", {"model", "packet", "time", "analysis", "outputs", "carpet"});

  Scenario scenario;
  scenario.model = parse_model(require(doc, "scenario", "model"));
  const bool is_2d = std::holds_alternative<SpectrumModel2D>(scenario.model);

  const json& packet = require(doc, "scenario", "packet");
  if (is_2d) {
    if (!packet.is_array() || packet.size() != 2)
      fail("packet: a 2D model needs an array of exactly two packet blocks");
    const auto& model2 = std::get<SpectrumModel2D>(scenario.model);
    scenario.packets.push_back(parse_packet(packet[0], "packet[0]", model2.axis(0).n_floor()));
    scenario.packets.push_back(parse_packet(packet[1], "packet[1]", model2.axis(1).n_floor()));
  } else {
    const auto& model1 = std::get<SpectrumModel>(scenario.model);
    if (packet.is_array()) {
      if (packet.size() != 1) fail("packet: a 1D model needs exactly one packet block");
      scenario.packets.push_back(parse_packet(packet[0], "packet[0]", model1.n_floor()));
    } else {
      scenario.packets.push_back(parse_packet(packet, "packet", model1.n_floor()));
    }
  }

  if (doc.contains("analysis")) {
    const json& a = doc.at("analysis");
    if (!a.is_object()) fail("analysis must be an object");
    check_keys(a, "analysis", {"min_height", "min_separation", "q_max", "tol"});
    if (a.contains("min_height"))
      scenario.analysis.min_height = as_number(a.at("min_height"), "analysis.min_height");
    if (a.contains("min_separation"))
      scenario.analysis.min_separation =
          as_number(a.at("min_separation"), "analysis.min_separation");
    if (a.contains("q_max")) scenario.analysis.q_max = as_integer(a.at("q_max"), "analysis.q_max");
    if (a.contains("tol")) scenario.analysis.tol = as_number(a.at("tol"), "analysis.tol");
    if (!(scenario.analysis.min_height > 0.0 && scenario.analysis.min_height < 1.0))
      fail("analysis.min_height must lie in (0, 1)");
    if (scenario.analysis.min_separation && !(*scenario.analysis.min_separation > 0.0))
      fail("analysis.min_separation must be > 0");
    if (scenario.analysis.q_max < 1) fail("analysis.q_max must be >= 1");
    if (!(scenario.analysis.tol > 0.0)) fail("analysis.tol must be > 0");
  }

  const json& time = require(doc, "scenario", "time");
  if (!time.is_object()) fail("time must be an object");
  check_keys(time, "time", {"t_end", "samples"});
  scenario.t_end = parse_t_end(require(time, "time", "t_end"));
  if (time.contains("samples")) scenario.samples = as_integer(time.at("samples"), "time.samples");
  if (scenario.samples < 2) fail("time.samples must be >= 2");

  const json& outputs = require(doc, "scenario", "outputs");
  if (!outputs.is_object()) fail("outputs must be an object");
  check_keys(outputs, "outputs", {"series", "events", "carpet"});
  auto path_of = [&](const char* key) -> std::optional<std::filesystem::path> {
    if (!outputs.contains(key)) return std::nullopt;
    const json& v = outputs.at(key);
    if (!v.is_string() || v.get<std::string>().empty())
      fail(std::string("outputs.") + key + " must be a nonempty path string");
    return std::filesystem::path(v.get<std::string>());
  };
  scenario.series_path = path_of("series");
  scenario.events_path = path_of("events");
  scenario.carpet_path = path_of("carpet");
  if (!scenario.series_path && !scenario.events_path && !scenario.carpet_path)
    fail("outputs: at least one of series, events, carpet must be requested");

  if (scenario.carpet_path) {
    if (is_2d || std::get<SpectrumModel>(scenario.model).kind() != SpectrumKind::Box1D)
      fail("outputs.carpet requires a box1d model");
    const json& c = require(doc, "scenario", "carpet");
    if (!c.is_object()) fail("carpet must be an object");
    check_keys(c, "carpet", {"x_samples"});
    scenario.x_samples = as_integer(require(c, "carpet", "x_samples"), "carpet.x_samples");
    if (scenario.x_samples < 2) fail("carpet.x_samples must be >= 2");
  } else if (doc.contains("carpet")) {
    fail("carpet block given but no carpet output requested");
  }

  // Referenced named scale must exist for this model and packet.
  resolve_t_end(scenario);
  return scenario;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading scenario file " + path.string());
  return parse_scenario(buffer.str());
}

RunReport run_scenario(const Scenario& scenario) {
  RunReport report;
  report.scales = named_scales(scenario);
  report.t_end = resolve_t_end(scenario);

  const TimeGrid grid{0.0, report.t_end, scenario.samples};

  auto scale_value = [&](const std::string& name) -> std::optional<double> {
    for (const auto& [key, value] : report.scales)
      if (key == name) return value;
    return std::nullopt;
  };

  ComplexSeries series;
  std::optional<double> label_reference;  // revival time the p/q labels refer to
  std::optional<double> classical_period;

  if (std::holds_alternative<SpectrumModel>(scenario.model)) {
    const auto& model = std::get<SpectrumModel>(scenario.model);
    const Coefficients coeffs = gaussian_coefficients(scenario.packets[0]);
    if (coeffs.truncation_warning())
      report.warnings.push_back("packet: truncated tail mass " + format_double(coeffs.tail_mass) +
                                " outside support [" + std::to_string(scenario.packets[0].n_min) +
                                ", " + std::to_string(scenario.packets[0].n_max) + "]");
    series = autocorrelation(coeffs, model, grid);
    label_reference = scale_value("t_rev");
    classical_period = scale_value("t_cl");

    if (scenario.carpet_path) {
      const DensityGrid density =
          carpet(coeffs, model.mass(), model.length(), scenario.x_samples, grid);
      write_carpet_pgm(density, *scenario.carpet_path);
    }
  } else {
    const auto& model = std::get<SpectrumModel2D>(scenario.model);
    const Coefficients2D coeffs =
        product_coefficients_2d(scenario.packets[0], scenario.packets[1]);
    if (coeffs.truncation_warning())
      report.warnings.push_back("packet: truncated tail mass " + format_double(coeffs.tail_mass));
    series = autocorrelation_2d(coeffs, model, grid);
    label_reference = scale_value("t_common");
    const auto t1 = scale_value("t_cl_1");
    const auto t2 = scale_value("t_cl_2");
    if (t1 && t2) classical_period = std::min(*t1, *t2);
    else classical_period = t1 ? t1 : t2;
  }

  if (scenario.series_path) write_series_csv(series, *scenario.series_path);

  if (scenario.events_path) {
    double min_separation;
    if (scenario.analysis.min_separation) {
      min_separation = *scenario.analysis.min_separation;
    } else {
      // Default: half the classical period, never below the grid spacing.
      min_separation = classical_period ? *classical_period / 2.0 : grid.dt();
      min_separation = std::max(min_separation, grid.dt());
    }
    std::vector<RevivalEvent> events =
        detect_revivals(series, scenario.analysis.min_height, min_separation);
    if (label_reference) {
      for (auto& event : events)
        event.fraction =
            label_fraction(event.t, *label_reference, scenario.analysis.q_max, scenario.analysis.tol);
    }
    write_events_csv(events, *scenario.events_path);
    report.event_count = events.size();
  }

  // Written paths, in the fixed series/events/carpet order.
  if (scenario.series_path) report.written.push_back(*scenario.series_path);
  if (scenario.events_path) report.written.push_back(*scenario.events_path);
  if (scenario.carpet_path) report.written.push_back(*scenario.carpet_path);
  return report;
}

}  // namespace revival
