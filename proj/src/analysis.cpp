#include "ouro/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ouro {

namespace {

ScalarSet make_set(std::vector<Scalar> values, bool exact) {
  std::sort(values.begin(), values.end());
  std::vector<Scalar> dedup;
  for (const auto& v : values) {
    if (!dedup.empty() && dedup.back().value() == v.value()) continue;
    dedup.push_back(v);
  }
  return ScalarSet{std::move(dedup), exact};
}

// nearest-neighbor distance from v to the sorted set
double nn_distance(const std::vector<Scalar>& sorted, const Scalar& v) {
  if (sorted.empty()) return std::numeric_limits<double>::infinity();
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  double best = std::numeric_limits<double>::infinity();
  if (it != sorted.end()) best = std::fabs(it->value() - v.value());
  if (it != sorted.begin())
    best = std::min(best, std::fabs(std::prev(it)->value() - v.value()));
  return best;
}

bool one_sided_close(const std::vector<Scalar>& from,
                     const std::vector<Scalar>& to, const CheckConfig& cfg) {
  for (const auto& v : from) {
    const double tol = cfg.eps_abs + cfg.eps_rel * std::fabs(v.value());
    if (nn_distance(to, v) > tol) return false;
  }
  return true;
}

bool exact_set_equal(const std::vector<Scalar>& a,
                     const std::vector<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].value() != b[i].value()) return false;
  return true;
}

}  // namespace

ScalarSet image(const FunctionDef& f, const CheckConfig& cfg) {
  std::vector<Scalar> values;
  auto size = f.signature.finite_size();
  const bool exhaustive = size && *size <= cfg.enumeration_cutoff;
  auto apply = [&](const std::vector<Scalar>& p) {
    try {
      values.push_back(eval(f.body, p));
    } catch (const DomainError&) {
      // undefined points contribute nothing to the image
    }
  };
  if (exhaustive) {
    f.signature.enumerate_points(apply);
  } else {
    Rng rng(cfg.seed);
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i)
      apply(f.signature.sample_point(rng, cfg.window));
  }
  return make_set(std::move(values), exhaustive);
}

ScalarSet fixed_points(const FunctionDef& f, const CheckConfig& cfg) {
  const Domain& base = f.signature.base();
  std::vector<Scalar> values;
  auto size = base.finite_size();
  const bool exhaustive = size && *size <= cfg.enumeration_cutoff;

  auto test = [&](const Scalar& t) {
    std::vector<Scalar> diag(static_cast<std::size_t>(f.arity), t);
    try {
      Scalar ft = eval(f.body, diag);
      if (scalars_equal(ft, t, cfg.eps_abs, cfg.eps_rel)) values.push_back(t);
    } catch (const DomainError&) {
    }
  };
  if (exhaustive) {
    for (const auto& t : base.enumerate()) test(t);
  } else {
    // Fix(f) is a subset of Im(f), so image values of the sampled points
    // are candidates too; without them a continuous sample almost never
    // lands on an isolated fixed point.
    Rng rng(cfg.seed);
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
      Scalar t = base.sample_one(rng, cfg.window);
      test(t);
      std::vector<Scalar> diag(static_cast<std::size_t>(f.arity), t);
      try {
        Scalar u = eval(f.body, diag);
        if (base.contains(u) && !(u.value() == t.value())) test(u);
      } catch (const DomainError&) {
      }
    }
  }
  return make_set(std::move(values), exhaustive);
}

ImageReport verify_fix_equals_image(const FunctionDef& f,
                                    const CheckConfig& cfg) {
  Verdict v = check(f, cfg);
  if (v.status == Status::Fails || v.status == Status::Undefined)
    throw PreconditionError("function '" + f.name + "' verdict is " +
                            status_str(v.status) +
                            "; Fix = Im applies to verified members only");
  ImageReport r;
  r.image = image(f, cfg);
  r.fixed = fixed_points(f, cfg);
  if (r.image.exact && r.fixed.exact) {
    r.equal = exact_set_equal(r.image.values, r.fixed.values);
  } else {
    r.equal = one_sided_close(r.image.values, r.fixed.values, cfg) &&
              one_sided_close(r.fixed.values, r.image.values, cfg);
  }
  return r;
}

}  // namespace ouro
