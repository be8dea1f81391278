#include "gruss/report_json.hpp"

namespace gruss {

const char* field_name(Field f) { return f == Field::real ? "real" : "complex"; }

Json scalar_json(const Scalar& s) { return Json{{"re", s.real()}, {"im", s.imag()}}; }

Json bracket_json(const Bracket& br) {
  return Json{{"lo", scalar_json(br.lo())},
              {"hi", scalar_json(br.hi())},
              {"mid", scalar_json(br.mid())},
              {"radius", br.radius()}};
}

Json condition_json(const ConditionReport& rep) {
  return Json{{"quad_value", rep.quad_value},
              {"norm_slack", rep.norm_slack},
              {"equiv_residual", rep.equiv_residual},
              {"satisfied", rep.satisfied},
              {"tolerance", rep.tolerance}};
}

Json bound_json(const BoundReport& rep) {
  return Json{{"functional", scalar_json(rep.functional)},
              {"abs_functional", rep.abs_functional},
              {"classic_bound", rep.classic_bound},
              {"refined_bound", rep.refined_bound},
              {"slack_classic", rep.slack_classic},
              {"slack_refined", rep.slack_refined},
              {"cond_x", condition_json(rep.cond_x)},
              {"cond_y", condition_json(rep.cond_y)},
              {"certified", rep.certified}};
}

Json companion_json(const CompanionReport& rep) {
  return Json{{"re_functional", rep.re_functional},
              {"abs_functional", rep.abs_functional},
              {"bound", rep.bound},
              {"cond_plus", condition_json(rep.cond_plus)},
              {"cond_minus", condition_json(rep.cond_minus)},
              {"upper_certified", rep.upper_certified},
              {"lower_certified", rep.lower_certified},
              {"abs_certified", rep.abs_certified},
              {"real_abs_certified", rep.real_abs_certified},
              {"slack_upper", rep.slack_upper},
              {"slack_abs", rep.slack_abs},
              {"midpoint_gap", rep.midpoint_gap}};
}

Json dual_chain_json(const DualChain& chain) {
  return Json{{"span_distance", chain.span_distance},
              {"mixed_bound", chain.mixed_bound},
              {"endpoint_rms", chain.endpoint_rms}};
}

Json estimated_bracket_json(const EstimatedBracket& est) {
  return Json{{"bracket", bracket_json(est.bracket)}, {"cover_slack", est.cover_slack}};
}

Json fuzz_json(const FuzzReport& rep) {
  Json violations = Json::object();
  for (const auto& [name, count] : rep.violations) violations[name] = count;
  return Json{{"seed", rep.seed},
              {"samples", rep.samples},
              {"field", field_name(rep.field)},
              {"tolerance", rep.tolerance},
              {"violations", violations},
              {"total_violations", rep.total_violations()}};
}

namespace {
Json coords_json(const Vector& v) {
  Json arr = Json::array();
  for (const Scalar& c : v.coords()) arr.push_back(scalar_json(c));
  return arr;
}
}  // namespace

Json sharpness_json(const SharpnessResult& res) {
  Json weights = Json::array();
  for (double w : res.witness.metric->weights()) weights.push_back(w);
  return Json{{"best_ratio", res.best_ratio},
              {"iterations", res.iterations},
              {"witness",
               Json{{"weights", weights},
                    {"e", coords_json(res.witness.e)},
                    {"x", coords_json(res.witness.x)},
                    {"y", coords_json(res.witness.y)},
                    {"bracket_x", bracket_json(res.witness.bracket_x)},
                    {"bracket_y", bracket_json(res.witness.bracket_y)}}}};
}

}  // namespace gruss
