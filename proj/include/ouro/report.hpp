#pragma once

#include <json.hpp>

#include "ouro/analysis.hpp"
#include "ouro/slln.hpp"

namespace ouro {

using json = nlohmann::ordered_json;

json scalar_json(const Scalar& s);
json config_json(const CheckConfig& cfg);
json witness_json(const Witness& w);

// {function, signature, status, points_checked, max_defect, witness?, seed, config}
json verdict_report(const std::string& function, const std::string& signature,
                    const Verdict& v, const CheckConfig& cfg);

json containment_report_json(const std::string& function,
                             const std::string& signature,
                             const ContainmentReport& r,
                             const CheckConfig& cfg);

json image_report_json(const std::string& function, const ImageReport& r);

json sweep_report(const std::string& label,
                  const std::vector<std::pair<int, Verdict>>& results,
                  const CheckConfig& cfg, const std::string& distribution = "");

json trace_json(const DistributionSpec& d, const ConvergenceTrace& t);

}  // namespace ouro
