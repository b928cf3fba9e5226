#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ouro/expr.hpp"

namespace ouro {

struct CheckConfig {
  std::uint64_t sample_count = 10000;
  std::uint64_t enumeration_cutoff = 100000;  // exhaust at or below, sample above
  double eps_abs = 1e-9;
  double eps_rel = 1e-9;
  std::uint64_t seed = 42;
  SampleWindow window;
};

enum class Status { Holds, HoldsProbably, Fails, Undefined };

std::string status_str(Status s);

struct Witness {
  std::vector<Scalar> input;
  std::optional<Scalar> output;
  std::optional<double> defect;
  std::string detail;
};

struct Verdict {
  Status status = Status::HoldsProbably;
  std::optional<Witness> witness;
  std::uint64_t points_checked = 0;
  double max_defect = 0.0;
  bool exhaustive = false;
};

struct ContainmentReport {
  bool consistent = true;
  std::optional<Witness> witness;
  std::uint64_t points_checked = 0;
  bool exhaustive = false;
};

// Output-containment precheck: reports the first input whose output
// leaves the base domain (power) or any factor (mixed).
ContainmentReport check_containment(const FunctionDef& f,
                                    const CheckConfig& cfg);

Verdict check_univariate(const FunctionDef& f, const CheckConfig& cfg);
Verdict check_multivariate(const FunctionDef& f, const CheckConfig& cfg);

// Dispatches on arity.
Verdict check(const FunctionDef& f, const CheckConfig& cfg);

// Same point stream as check_multivariate but tests f(t,...,t) = t at
// t = f(x) directly.
Verdict check_diagonal(const FunctionDef& f, const CheckConfig& cfg);

// mean_n over the base domain for each requested arity
std::vector<std::pair<int, Verdict>> check_mean_sweep(
    const Domain& base, const std::vector<int>& n_values,
    const CheckConfig& cfg);

// Multivariate check with a caller-supplied input-vector source.
using PointSampler = std::function<std::vector<Scalar>(Rng&)>;
Verdict check_multivariate_sampled(const FunctionDef& f,
                                   const CheckConfig& cfg,
                                   const PointSampler& sampler);

}  // namespace ouro
