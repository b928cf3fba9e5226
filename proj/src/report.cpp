#include "ouro/report.hpp"

namespace ouro {

json scalar_json(const Scalar& s) {
  if (s.is_int()) return json(s.as_int());
  return json(s.value());
}

json config_json(const CheckConfig& cfg) {
  json j;
  j["sample_count"] = cfg.sample_count;
  j["enumeration_cutoff"] = cfg.enumeration_cutoff;
  j["eps_abs"] = cfg.eps_abs;
  j["eps_rel"] = cfg.eps_rel;
  j["seed"] = cfg.seed;
  j["window"] = {cfg.window.lo, cfg.window.hi};
  return j;
}

json witness_json(const Witness& w) {
  json j;
  json input = json::array();
  for (const auto& v : w.input) input.push_back(scalar_json(v));
  j["input"] = input;
  if (w.output) j["output"] = scalar_json(*w.output);
  if (w.defect) j["defect"] = *w.defect;
  j["detail"] = w.detail;
  return j;
}

json verdict_report(const std::string& function, const std::string& signature,
                    const Verdict& v, const CheckConfig& cfg) {
  json j;
  j["function"] = function;
  j["signature"] = signature;
  j["status"] = status_str(v.status);
  j["points_checked"] = v.points_checked;
  j["max_defect"] = v.max_defect;
  if (v.witness) j["witness"] = witness_json(*v.witness);
  j["seed"] = cfg.seed;
  j["config"] = config_json(cfg);
  return j;
}

json containment_report_json(const std::string& function,
                             const std::string& signature,
                             const ContainmentReport& r,
                             const CheckConfig& cfg) {
  json j;
  j["function"] = function;
  j["signature"] = signature;
  j["status"] = r.consistent ? "consistent" : "escape";
  j["points_checked"] = r.points_checked;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  j["seed"] = cfg.seed;
  j["config"] = config_json(cfg);
  return j;
}

static json set_json(const ScalarSet& s) {
  json j;
  j["exact"] = s.exact;
  j["count"] = s.values.size();
  if (!s.values.empty()) {
    j["min"] = scalar_json(s.values.front());
    j["max"] = scalar_json(s.values.back());
  }
  json vals = json::array();
  // cap listed values so sampled summaries stay readable
  const std::size_t limit = s.exact ? s.values.size()
                                    : std::min<std::size_t>(s.values.size(), 64);
  for (std::size_t i = 0; i < limit; ++i) vals.push_back(scalar_json(s.values[i]));
  j["values"] = vals;
  return j;
}

json image_report_json(const std::string& function, const ImageReport& r) {
  json j;
  j["function"] = function;
  j["image"] = set_json(r.image);
  j["fixed_points"] = set_json(r.fixed);
  j["equal"] = r.equal;
  return j;
}

json sweep_report(const std::string& label,
                  const std::vector<std::pair<int, Verdict>>& results,
                  const CheckConfig& cfg, const std::string& distribution) {
  json j;
  j["sweep"] = label;
  if (!distribution.empty()) j["distribution"] = distribution;
  j["seed"] = cfg.seed;
  j["config"] = config_json(cfg);
  json rows = json::array();
  for (const auto& [n, v] : results) {
    json row;
    row["n"] = n;
    row["status"] = status_str(v.status);
    row["points_checked"] = v.points_checked;
    row["max_defect"] = v.max_defect;
    if (v.witness) row["witness"] = witness_json(*v.witness);
    rows.push_back(row);
  }
  j["results"] = rows;
  return j;
}

json trace_json(const DistributionSpec& d, const ConvergenceTrace& t) {
  json j;
  j["distribution"] = d.str();
  j["seed"] = t.seed;
  j["analytic_mean"] = t.analytic_mean;
  j["checkpoints"] = t.checkpoints;
  j["running_means"] = t.running_means;
  j["final_abs_error"] = t.final_abs_error;
  return j;
}

}  // namespace ouro
