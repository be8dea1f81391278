#include "gruss/run.hpp"

#include <string>
#include <utility>

namespace gruss {

namespace {

const char* command_name(RunConfig::Command c) {
  switch (c) {
    case RunConfig::Command::check: return "check";
    case RunConfig::Command::estimate: return "estimate";
    case RunConfig::Command::fuzz: return "fuzz";
    case RunConfig::Command::sharpness: return "sharpness";
  }
  return "?";
}

const char* kind_name(SearchKind k) {
  switch (k) {
    case SearchKind::classic: return "classic";
    case SearchKind::refined: return "refined";
    case SearchKind::companion: return "companion";
  }
  return "?";
}

const char* rule_name(QuadRule r) {
  switch (r) {
    case QuadRule::midpoint: return "midpoint";
    case QuadRule::trapezoid: return "trapezoid";
    case QuadRule::simpson: return "simpson";
  }
  return "?";
}

Json metric_echo(const RunConfig& cfg) {
  switch (cfg.metric_kind) {
    case RunConfig::MetricKind::mean:
      return Json{{"kind", "mean"}};
    case RunConfig::MetricKind::weights:
      return Json{{"kind", "weights"}, {"path", cfg.weights_path.string()}};
    case RunConfig::MetricKind::grid:
      return Json{{"kind", "grid"},
                  {"a", cfg.grid.a},
                  {"b", cfg.grid.b},
                  {"n", cfg.grid.n},
                  {"rule", rule_name(cfg.grid.rule)}};
  }
  return Json::object();
}

Json base_document(const RunConfig& cfg) {
  Json config{{"field", field_name(cfg.field)}};
  switch (cfg.command) {
    case RunConfig::Command::check:
      config["input"] = cfg.input.string();
      config["metric"] = metric_echo(cfg);
      config["mode"] = cfg.strict ? "strict" : "diagnostic";
      config["estimate_brackets"] = cfg.estimate_brackets;
      if (cfg.bracket_x) config["bracket_x"] = bracket_json(*cfg.bracket_x);
      if (cfg.bracket_y) config["bracket_y"] = bracket_json(*cfg.bracket_y);
      if (cfg.tolerance >= 0.0) config["tolerance"] = cfg.tolerance;
      break;
    case RunConfig::Command::estimate:
      config["input"] = cfg.input.string();
      break;
    case RunConfig::Command::fuzz:
    case RunConfig::Command::sharpness: {
      config["seed"] = cfg.seed;
      config["samples"] = cfg.samples;
      Json dims = Json::array();
      for (std::size_t d : cfg.dims) dims.push_back(d);
      config["dims"] = dims;
      if (cfg.command == RunConfig::Command::sharpness)
        config["kind"] = kind_name(cfg.kind);
      if (cfg.tolerance >= 0.0) config["tolerance"] = cfg.tolerance;
      config["execution"] = cfg.serial ? "serial" : "parallel";
      break;
    }
  }
  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"schema_version", kSchemaVersion},
              {"command", command_name(cfg.command)},
              {"config", std::move(config)}};
}

void require_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InputError("an input file is required");
}

MetricPtr build_metric(const RunConfig& cfg, std::size_t rows) {
  switch (cfg.metric_kind) {
    case RunConfig::MetricKind::mean:
      return mean_metric(rows);
    case RunConfig::MetricKind::weights: {
      const Dataset wd = ingest(cfg.weights_path, Field::real);
      if (wd.columns.size() != 1)
        throw InputError("weights file must have exactly one column");
      std::vector<double> w;
      w.reserve(wd.rows());
      for (const Scalar& s : wd.columns.front()) w.push_back(s.real());
      if (w.size() != rows)
        throw InputError("weights file has " + std::to_string(w.size()) +
                         " entries, data has " + std::to_string(rows) + " rows");
      return weighted_metric(std::move(w), /*normalize_mass=*/true);
    }
    case RunConfig::MetricKind::grid: {
      QuadratureGrid grid = quadrature_metric(cfg.grid);
      if (grid.metric->dim() != rows)
        throw InputError("grid has " + std::to_string(grid.metric->dim()) +
                         " nodes, data has " + std::to_string(rows) + " rows");
      return grid.metric;
    }
  }
  throw InputError("unknown metric kind");
}

struct ResolvedBracket {
  Bracket bracket;
  const char* source;  // "explicit" or "estimated"
  std::optional<double> cover_slack;
};

ResolvedBracket resolve_bracket(const RunConfig& cfg,
                                const std::optional<Bracket>& flag,
                                const SampledFunction& column, const char* which) {
  if (flag) return {*flag, "explicit", std::nullopt};
  if (cfg.estimate_brackets) {
    const EstimatedBracket est = estimate_bracket(column, cfg.field);
    return {est.bracket, "estimated", est.cover_slack};
  }
  throw InputError(std::string("no bracket for ") + which +
                   ": pass --bracket-x/--bracket-y or --estimate-brackets");
}

Json bracket_echo(const ResolvedBracket& rb) {
  Json j{{"bracket", bracket_json(rb.bracket)}, {"source", rb.source}};
  if (rb.cover_slack) j["cover_slack"] = *rb.cover_slack;
  return j;
}

std::string column_label(const Dataset& ds, std::size_t i) {
  if (i < ds.column_names.size()) return ds.column_names[i];
  return "column " + std::to_string(i);
}

}  // namespace

RunResult run_check(const RunConfig& cfg) {
  require_input(cfg);
  Json doc = base_document(cfg);
  const Dataset ds = ingest(cfg.input, cfg.field, cfg.complex_pairs);
  const MetricPtr metric = build_metric(cfg, ds.rows());
  const SampledFunction unit =
      normalize_unit(SampledFunction(metric->dim(), Scalar(1.0)), *metric);

  // columns pair up as (0,1), (2,3), ...; a trailing odd column pairs with itself
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < ds.columns.size(); i += 2) pairs.emplace_back(i, i + 1);
  if (ds.columns.size() % 2 == 1)
    pairs.emplace_back(ds.columns.size() - 1, ds.columns.size() - 1);

  bool all_certified = true;
  bool strict_failure = false;
  Json out_pairs = Json::array();
  for (const auto& [i, j] : pairs) {
    const SampledFunction& f = ds.columns[i];
    const SampledFunction& g = ds.columns[j];
    Json pair_doc{{"x", column_label(ds, i)}, {"y", column_label(ds, j)}};
    const ResolvedBracket brf = resolve_bracket(cfg, cfg.bracket_x, f, "x");
    const ResolvedBracket brg =
        i == j && !cfg.bracket_y ? brf : resolve_bracket(cfg, cfg.bracket_y, g, "y");
    pair_doc["bracket_x"] = bracket_echo(brf);
    pair_doc["bracket_y"] = bracket_echo(brg);
    try {
      const BoundReport rep = integral_gruss(f, g, unit, brf.bracket, brg.bracket,
                                             metric, cfg.strict, cfg.tolerance);
      pair_doc["bounds"] = bound_json(rep);
      // companion bracket for (f+g)/2: averaged center, averaged radius;
      // containment follows from the two marginal disks by convexity
      const Bracket br_mid = Bracket::from_center(
          0.5 * (brf.bracket.mid() + brg.bracket.mid()),
          0.5 * (brf.bracket.radius() + brg.bracket.radius()));
      const CompanionReport comp =
          integral_companion(f, g, unit, br_mid, CompanionSign::plus, metric,
                             cfg.field, /*strict=*/false, cfg.tolerance);
      pair_doc["companion"] =
          Json{{"bracket", bracket_json(br_mid)}, {"report", companion_json(comp)}};
      const bool ok = rep.certified && comp.upper_certified;
      pair_doc["certified"] = ok;
      all_certified = all_certified && ok;
    } catch (const ConditionViolated& violated) {
      pair_doc["error"] = violated.what();
      pair_doc["condition"] = condition_json(violated.report());
      pair_doc["certified"] = false;
      all_certified = false;
      strict_failure = true;
    }
    out_pairs.push_back(std::move(pair_doc));
  }
  doc["pairs"] = std::move(out_pairs);
  doc["certified"] = all_certified;
  return {std::move(doc), strict_failure && cfg.strict ? 1 : 0};
}

RunResult run_estimate(const RunConfig& cfg) {
  require_input(cfg);
  Json doc = base_document(cfg);
  const Dataset ds = ingest(cfg.input, cfg.field, cfg.complex_pairs);
  Json cols = Json::array();
  for (std::size_t i = 0; i < ds.columns.size(); ++i) {
    const EstimatedBracket est = estimate_bracket(ds.columns[i], cfg.field);
    cols.push_back(Json{{"column", column_label(ds, i)},
                        {"estimate", estimated_bracket_json(est)}});
  }
  doc["columns"] = std::move(cols);
  return {std::move(doc), 0};
}

namespace {
FuzzConfig fuzz_config(const RunConfig& cfg) {
  FuzzConfig fc;
  fc.seed = cfg.seed;
  fc.dims = cfg.dims;
  fc.field = cfg.field;
  fc.samples = cfg.samples;
  fc.tolerance = cfg.tolerance >= 0.0 ? cfg.tolerance : kInequalityTolerance;
  return fc;
}
}  // namespace

RunResult run_fuzz(const RunConfig& cfg) {
  Json doc = base_document(cfg);
  const FuzzReport rep =
      fuzz_all(fuzz_config(cfg), cfg.serial ? Execution::serial : Execution::parallel);
  doc["fuzz"] = fuzz_json(rep);
  return {std::move(doc), 0};
}

RunResult run_sharpness(const RunConfig& cfg) {
  Json doc = base_document(cfg);
  const SharpnessResult res = sharpness_search(
      fuzz_config(cfg), cfg.kind, cfg.serial ? Execution::serial : Execution::parallel);
  doc["sharpness"] = sharpness_json(res);
  return {std::move(doc), 0};
}

RunResult run(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case RunConfig::Command::check: return run_check(cfg);
      case RunConfig::Command::estimate: return run_estimate(cfg);
      case RunConfig::Command::fuzz: return run_fuzz(cfg);
      case RunConfig::Command::sharpness: return run_sharpness(cfg);
    }
    throw InputError("unknown command");
  } catch (const Error& e) {
    Json doc = base_document(cfg);
    doc["error"] = e.what();
    return {std::move(doc), 2};
  } catch (const std::exception& e) {
    Json doc = base_document(cfg);
    doc["error"] = e.what();
    return {std::move(doc), 2};
  }
}

}  // namespace gruss
