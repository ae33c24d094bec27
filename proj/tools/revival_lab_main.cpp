#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revival/analysis.hpp"
#include "revival/scenario.hpp"
#include "revival/spectrum.hpp"

namespace {

using revival::ScenarioError;

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> params;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ScenarioError("bad parameter \"" + item + "\" (want key=value)");
    const std::string key = item.substr(0, eq);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw ScenarioError("bad numeric value in \"" + item + "\"");
    }
    if (used != item.size() - eq - 1) throw ScenarioError("bad numeric value in \"" + item + "\"");
    params[key] = value;
  }
  return params;
}

double take(std::map<std::string, double>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw ScenarioError("model parameter \"" + key + "\" is required");
  const double value = it->second;
  params.erase(it);
  return value;
}

void reject_leftovers(const std::map<std::string, double>& params) {
  if (params.empty()) return;
  throw ScenarioError("unknown model parameter \"" + params.begin()->first + "\"");
}

std::vector<double> parse_nbar(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    try {
      values.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      throw ScenarioError("bad n_bar value \"" + item + "\"");
    }
    if (used != item.size()) throw ScenarioError("bad n_bar value \"" + item + "\"");
  }
  if (values.empty() || values.size() > 2)
    throw ScenarioError("--nbar wants one value, or two comma-separated values for 2D models");
  return values;
}

void print_scale(const std::string& name, const std::optional<double>& value) {
  std::cout << name << ",";
  if (value) std::cout << revival::format_double(*value);
  else std::cout << "absent";
  std::cout << "\n";
}

int run_timescales(const std::string& model_kind, const std::string& params_text,
                   const std::string& nbar_text) {
  auto params = parse_params(params_text);
  const auto nbar = parse_nbar(nbar_text);

  if (model_kind == "box2d") {
    if (nbar.size() != 2) throw ScenarioError("box2d needs --nbar <n1>,<n2>");
    const double mass = take(params, "mass");
    const double length1 = take(params, "length1");
    const double length2 = take(params, "length2");
    reject_leftovers(params);
    revival::SpectrumModel2D model = [&] {
      try {
        return revival::SpectrumModel2D::box2d(mass, length1, length2);
      } catch (const std::invalid_argument& e) {
        throw ScenarioError(e.what());
      }
    }();
    const auto ts = revival::time_scales_2d(model, nbar[0], nbar[1]);
    print_scale("t_cl_1", ts.t_cl_1);
    print_scale("t_cl_2", ts.t_cl_2);
    print_scale("t_rev_1", ts.t_rev_1);
    print_scale("t_rev_2", ts.t_rev_2);
    print_scale("t_rev_mixed", ts.t_rev_mixed);
    print_scale("t_sr_111", ts.t_third[0]);
    print_scale("t_sr_112", ts.t_third[1]);
    print_scale("t_sr_122", ts.t_third[2]);
    print_scale("t_sr_222", ts.t_third[3]);
    return 0;
  }

  if (nbar.size() != 1) throw ScenarioError("1D models take a single --nbar value");
  revival::SpectrumModel model = [&] {
    try {
      if (model_kind == "harmonic") return revival::SpectrumModel::harmonic(take(params, "omega"));
      if (model_kind == "box1d")
        return revival::SpectrumModel::box1d(take(params, "mass"), take(params, "length"));
      if (model_kind == "rydberg") return revival::SpectrumModel::rydberg();
      if (model_kind == "polynomial") {
        std::array<double, 4> coeffs{};
        for (int i = 0; i < 4; ++i) {
          const std::string key = "a" + std::to_string(i);
          if (params.count(key)) coeffs[static_cast<std::size_t>(i)] = take(params, key);
        }
        return revival::SpectrumModel::polynomial(coeffs);
      }
      throw ScenarioError("unknown model kind \"" + model_kind + "\"");
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(e.what());
    }
  }();
  reject_leftovers(params);

  const auto ts = revival::time_scales(model, nbar[0]);
  print_scale("t_cl", ts.t_cl);
  print_scale("t_rev", ts.t_rev);
  print_scale("t_sr", ts.t_sr);
  return 0;
}

int run_tune2d(const std::string& ratio_text) {
  const auto slash = ratio_text.find('/');
  if (slash == std::string::npos) throw ScenarioError("--ratio wants p/q, e.g. 2/1");
  long long p = 0, q = 0;
  try {
    p = std::stoll(ratio_text.substr(0, slash));
    q = std::stoll(ratio_text.substr(slash + 1));
  } catch (const std::exception&) {
    throw ScenarioError("bad ratio \"" + ratio_text + "\"");
  }
  if (p < 1 || q < 1) throw ScenarioError("ratio wants p >= 1 and q >= 1");
  std::cout << revival::format_double(revival::tune_box_ratio(revival::make_rational(p, q)))
            << "\n";
  return 0;
}

int run_run(const std::string& scenario_path) {
  const revival::Scenario scenario = revival::load_scenario_file(scenario_path);
  const revival::RunReport report = revival::run_scenario(scenario);
  for (const auto& warning : report.warnings) std::cerr << "warning: " << warning << "\n";
  for (const auto& [name, value] : report.scales) {
    std::cout << "scale " << name;
    if (value) std::cout << " = " << revival::format_double(*value);
    else std::cout << " absent";
    std::cout << "\n";
  }
  std::cout << "t_end = " << revival::format_double(report.t_end) << "\n";
  if (report.event_count) std::cout << "events = " << *report.event_count << "\n";
  for (const auto& path : report.written) std::cout << "wrote " << path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wave-packet revival toolkit"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Execute a scenario file and write its artifacts");
  std::string scenario_path;
  run_cmd->add_option("scenario", scenario_path, "Scenario document (JSON)")->required();

  auto* ts_cmd = app.add_subcommand("timescales", "Print revival time scales for a model");
  std::string model_kind, params_text, nbar_text;
  ts_cmd->add_option("--model", model_kind, "harmonic|box1d|rydberg|polynomial|box2d")->required();
  ts_cmd->add_option("--params", params_text, "Comma-separated key=value model parameters");
  ts_cmd->add_option("--nbar", nbar_text, "Mean quantum number (two comma-separated for 2D)")
      ->required();

  auto* tune_cmd = app.add_subcommand("tune2d", "Print the box side ratio for a revival ratio");
  std::string ratio_text;
  tune_cmd->add_option("--ratio", ratio_text, "Target revival-time ratio p/q")->required();

  try {
    app.parse(argc, argv);
    if (run_cmd->parsed()) return run_run(scenario_path);
    if (ts_cmd->parsed()) return run_timescales(model_kind, params_text, nbar_text);
    if (tune_cmd->parsed()) return run_tune2d(ratio_text);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const revival::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
