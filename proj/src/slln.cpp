#include "ouro/slln.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ouro {

DistributionSpec::DistributionSpec(Family f, double p0, double p1)
    : family_(f), p0_(p0), p1_(p1), mean_(0) {
  switch (f) {
    case Family::Uniform:
      if (!(p0 < p1)) throw std::invalid_argument("uniform needs a < b");
      mean_ = 0.5 * (p0 + p1);
      break;
    case Family::Bernoulli:
      if (!(p0 >= 0 && p0 <= 1))
        throw std::invalid_argument("bernoulli needs 0 <= p <= 1");
      mean_ = p0;
      break;
    case Family::Normal:
      if (!(p1 > 0)) throw std::invalid_argument("normal needs sigma > 0");
      mean_ = p0;
      break;
    case Family::Exponential:
      if (!(p0 > 0)) throw std::invalid_argument("exponential needs lambda > 0");
      mean_ = 1.0 / p0;
      break;
  }
}

DistributionSpec DistributionSpec::uniform(double a, double b) {
  return DistributionSpec(Family::Uniform, a, b);
}
DistributionSpec DistributionSpec::bernoulli(double p) {
  return DistributionSpec(Family::Bernoulli, p, 0);
}
DistributionSpec DistributionSpec::normal(double mu, double sigma) {
  return DistributionSpec(Family::Normal, mu, sigma);
}
DistributionSpec DistributionSpec::exponential(double lambda) {
  return DistributionSpec(Family::Exponential, lambda, 0);
}

DistributionSpec DistributionSpec::parse(const std::string& text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("expected family(params): " + text);
  std::string name = text.substr(0, open);
  std::string params = text.substr(open + 1, close - open - 1);
  auto comma = params.find(',');
  auto num = [](const std::string& s) { return std::stod(s); };
  if (name == "uniform") {
    if (comma == std::string::npos)
      throw std::invalid_argument("uniform needs two parameters");
    return uniform(num(params.substr(0, comma)), num(params.substr(comma + 1)));
  }
  if (name == "bernoulli") return bernoulli(num(params));
  if (name == "normal") {
    if (comma == std::string::npos)
      throw std::invalid_argument("normal needs two parameters");
    return normal(num(params.substr(0, comma)), num(params.substr(comma + 1)));
  }
  if (name == "exponential") return exponential(num(params));
  throw std::invalid_argument("unknown distribution family: " + name);
}

double DistributionSpec::draw(Rng& rng) const {
  switch (family_) {
    case Family::Uniform:
      return rng.uniform(p0_, p1_);
    case Family::Bernoulli:
      return rng.uniform01() < p0_ ? 1.0 : 0.0;
    case Family::Normal: {
      // Box-Muller; the second variate is discarded to keep draw stateless
      const double u1 = 1.0 - rng.uniform01();  // (0,1]
      const double u2 = rng.uniform01();
      const double z =
          std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
      return p0_ + p1_ * z;
    }
    case Family::Exponential:
      return -std::log(1.0 - rng.uniform01()) / p0_;
  }
  throw std::logic_error("unreachable");
}

std::string DistributionSpec::str() const {
  switch (family_) {
    case Family::Uniform:
      return "uniform(" + format_double(p0_) + "," + format_double(p1_) + ")";
    case Family::Bernoulli:
      return "bernoulli(" + format_double(p0_) + ")";
    case Family::Normal:
      return "normal(" + format_double(p0_) + "," + format_double(p1_) + ")";
    case Family::Exponential:
      return "exponential(" + format_double(p0_) + ")";
  }
  return "?";
}

ConvergenceTrace simulate_path(const DistributionSpec& d, std::uint64_t n_max,
                               const std::vector<std::uint64_t>& checkpoints,
                               std::uint64_t seed) {
  std::vector<std::uint64_t> cps = checkpoints;
  if (cps.empty()) cps.push_back(n_max);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] == 0 || cps[i] > n_max || (i > 0 && cps[i] <= cps[i - 1]))
      throw std::invalid_argument("checkpoints must be ascending and <= n_max");
  }

  ConvergenceTrace trace;
  trace.seed = seed;
  trace.checkpoints = cps;
  trace.analytic_mean = d.analytic_mean();

  Rng rng(seed);
  double sum = 0.0;
  std::size_t next = 0;
  for (std::uint64_t i = 1; i <= n_max && next < cps.size(); ++i) {
    sum += d.draw(rng);
    if (i == cps[next]) {
      trace.running_means.push_back(sum / static_cast<double>(i));
      ++next;
    }
  }
  trace.final_abs_error =
      std::fabs(trace.running_means.back() - trace.analytic_mean);
  return trace;
}

std::vector<std::pair<int, Verdict>> membership_sweep(
    const DistributionSpec& d, const std::vector<int>& n_values,
    const CheckConfig& cfg) {
  std::vector<std::pair<int, Verdict>> out;
  out.reserve(n_values.size());
  for (int n : n_values) {
    FunctionDef f = make_mean(n, Domain::all_reals());
    auto sampler = [&d, n](Rng& rng) {
      std::vector<Scalar> p;
      p.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) p.push_back(Scalar::real(d.draw(rng)));
      return p;
    };
    out.emplace_back(n, check_multivariate_sampled(f, cfg, sampler));
  }
  return out;
}

std::string convergence_csv(const ConvergenceTrace& trace) {
  std::string out = "n,running_mean,analytic_mean,abs_error\n";
  for (std::size_t i = 0; i < trace.checkpoints.size(); ++i) {
    out += std::to_string(trace.checkpoints[i]);
    out += ",";
    out += format_double(trace.running_means[i]);
    out += ",";
    out += format_double(trace.analytic_mean);
    out += ",";
    out += format_double(std::fabs(trace.running_means[i] - trace.analytic_mean));
    out += "\n";
  }
  return out;
}

}  // namespace ouro
