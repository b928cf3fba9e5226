#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ouro/checker.hpp"

namespace ouro {

// An i.i.d. scalar distribution with a known mean. Parameters are
// validated at construction; non-integrable families are not accepted.
class DistributionSpec {
 public:
  enum class Family { Uniform, Bernoulli, Normal, Exponential };

  static DistributionSpec uniform(double a, double b);
  static DistributionSpec bernoulli(double p);
  static DistributionSpec normal(double mu, double sigma);
  static DistributionSpec exponential(double lambda);

  // "uniform(0,1)", "bernoulli(0.5)", "normal(0,1)", "exponential(2)"
  static DistributionSpec parse(const std::string& text);

  Family family() const { return family_; }
  double analytic_mean() const { return mean_; }
  double draw(Rng& rng) const;
  std::string str() const;

 private:
  DistributionSpec(Family f, double p0, double p1);
  Family family_;
  double p0_, p1_;
  double mean_;
};

// Running mean of one fixed sample path, recorded at the checkpoints.
struct ConvergenceTrace {
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> checkpoints;
  std::vector<double> running_means;
  double analytic_mean = 0.0;
  double final_abs_error = 0.0;
};

// One path of n_max draws; prefix sums, deterministic given seed.
ConvergenceTrace simulate_path(const DistributionSpec& d, std::uint64_t n_max,
                               const std::vector<std::uint64_t>& checkpoints,
                               std::uint64_t seed);

// Verifies mean_n over R^n for each n, sampling inputs from d.
std::vector<std::pair<int, Verdict>> membership_sweep(
    const DistributionSpec& d, const std::vector<int>& n_values,
    const CheckConfig& cfg);

// header `n,running_mean,analytic_mean,abs_error`, one row per checkpoint
std::string convergence_csv(const ConvergenceTrace& trace);

}  // namespace ouro
