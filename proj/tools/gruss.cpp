#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "gruss/run.hpp"

namespace {

using gruss::RunConfig;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw gruss::InputError("cannot parse " + what + " from '" + text + "'");
  }
}

gruss::Bracket parse_bracket_flag(const std::string& text, const std::string& flag) {
  const auto parts = split(text, ',');
  if (parts.size() != 2)
    throw gruss::InputError(flag + " wants 'lo,hi', got '" + text + "'");
  return gruss::Bracket(parse_number(parts[0], flag + " lower endpoint"),
                        parse_number(parts[1], flag + " upper endpoint"));
}

// "mean", "weights:<path>", or "grid:a,b,n,rule"
void apply_metric_flag(const std::string& text, RunConfig& cfg) {
  if (text == "mean") {
    cfg.metric_kind = RunConfig::MetricKind::mean;
    return;
  }
  if (text.rfind("weights:", 0) == 0) {
    cfg.metric_kind = RunConfig::MetricKind::weights;
    cfg.weights_path = text.substr(8);
    if (cfg.weights_path.empty())
      throw gruss::InputError("--metric weights: needs a file path");
    return;
  }
  if (text.rfind("grid:", 0) == 0) {
    const auto parts = split(text.substr(5), ',');
    if (parts.size() != 4)
      throw gruss::InputError("--metric grid: wants 'a,b,n,rule', got '" + text + "'");
    cfg.metric_kind = RunConfig::MetricKind::grid;
    cfg.grid.a = parse_number(parts[0], "grid start");
    cfg.grid.b = parse_number(parts[1], "grid end");
    const double n = parse_number(parts[2], "grid subinterval count");
    if (n < 1 || n != static_cast<double>(static_cast<std::size_t>(n)))
      throw gruss::InputError("grid subinterval count must be a positive integer");
    cfg.grid.n = static_cast<std::size_t>(n);
    if (parts[3] == "midpoint") cfg.grid.rule = gruss::QuadRule::midpoint;
    else if (parts[3] == "trapezoid") cfg.grid.rule = gruss::QuadRule::trapezoid;
    else if (parts[3] == "simpson") cfg.grid.rule = gruss::QuadRule::simpson;
    else throw gruss::InputError("unknown quadrature rule '" + parts[3] + "'");
    return;
  }
  throw gruss::InputError("--metric wants mean, weights:<path>, or grid:a,b,n,rule");
}

int emit(const gruss::RunResult& result, const std::string& out_path) {
  const std::string text = result.document.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return result.exit_code;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "gruss: cannot open output file '" << out_path << "'\n";
    return 2;
  }
  out << text;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified Gruss-type bounds on weighted inner-product spaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string metric_flag = "mean";
  std::string bracket_x_flag, bracket_y_flag;
  std::string out_path;

  const std::map<std::string, gruss::Field> field_map{
      {"real", gruss::Field::real}, {"complex", gruss::Field::complex}};
  const std::map<std::string, bool> mode_map{{"strict", true}, {"diagnostic", false}};
  const std::map<std::string, gruss::SearchKind> kind_map{
      {"classic", gruss::SearchKind::classic},
      {"refined", gruss::SearchKind::refined},
      {"companion", gruss::SearchKind::companion}};

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "data file, one function per column")
        ->required();
    sub->add_option("--field", cfg.field, "scalar field of the data")
        ->transform(CLI::CheckedTransformer(field_map, CLI::ignore_case));
    sub->add_flag("--complex-pairs", cfg.complex_pairs,
                  "read real columns as (re, im) pairs");
    sub->add_option("--out", out_path, "write the report here instead of stdout");
  };
  auto add_batch = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "base seed; fixes the whole batch");
    sub->add_option("--samples", cfg.samples, "sample budget");
    sub->add_option("--field", cfg.field, "scalar field to sample")
        ->transform(CLI::CheckedTransformer(field_map, CLI::ignore_case));
    sub->add_option("--dims", cfg.dims, "dimensions to draw from")
        ->delimiter(',');
    sub->add_option("--tolerance", cfg.tolerance, "inequality tolerance");
    sub->add_flag("--serial", cfg.serial, "run the serial reference kernel");
    sub->add_option("--out", out_path, "write the report here instead of stdout");
  };

  CLI::App* check = app.add_subcommand(
      "check", "validate bracket conditions and certify the bounds");
  add_io(check);
  check->add_option("--metric", metric_flag,
                    "mean | weights:<path> | grid:a,b,n,rule");
  check->add_option("--bracket-x", bracket_x_flag, "bracket lo,hi for x columns");
  check->add_option("--bracket-y", bracket_y_flag, "bracket lo,hi for y columns");
  check->add_flag("--estimate-brackets", cfg.estimate_brackets,
                  "estimate missing brackets from the data");
  check->add_option("--mode", cfg.strict, "strict | diagnostic")
      ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case));
  check->add_option("--tolerance", cfg.tolerance, "condition tolerance");

  CLI::App* estimate = app.add_subcommand(
      "estimate", "report tight brackets covering each column");
  add_io(estimate);

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "re-check every certified inequality on random admissible tuples");
  add_batch(fuzz);

  CLI::App* sharp = app.add_subcommand(
      "sharpness", "search for tuples approaching ratio 1 against the bound");
  add_batch(sharp);
  sharp->add_option("--kind", cfg.kind, "classic | refined | companion")
      ->transform(CLI::CheckedTransformer(kind_map, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (check->parsed()) cfg.command = RunConfig::Command::check;
  else if (estimate->parsed()) cfg.command = RunConfig::Command::estimate;
  else if (fuzz->parsed()) cfg.command = RunConfig::Command::fuzz;
  else cfg.command = RunConfig::Command::sharpness;

  try {
    if (!bracket_x_flag.empty())
      cfg.bracket_x = parse_bracket_flag(bracket_x_flag, "--bracket-x");
    if (!bracket_y_flag.empty())
      cfg.bracket_y = parse_bracket_flag(bracket_y_flag, "--bracket-y");
    apply_metric_flag(metric_flag, cfg);
  } catch (const gruss::Error& e) {
    std::cerr << "gruss: " << e.what() << "\n";
    return 2;
  }

  return emit(gruss::run(cfg), out_path);
}
