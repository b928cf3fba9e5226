#include "ouro/checker.hpp"

#include <algorithm>

namespace ouro {

std::string status_str(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::HoldsProbably: return "HoldsProbably";
    case Status::Fails: return "Fails";
    case Status::Undefined: return "Undefined";
  }
  return "?";
}

namespace {

// Visits either every point of a finite signature under the cutoff or
// cfg.sample_count seeded samples. The visitor returns false to stop.
template <typename Visit>
std::pair<std::uint64_t, bool> for_each_point(const DomainSignature& sig,
                                              const CheckConfig& cfg,
                                              Visit&& visit) {
  auto size = sig.finite_size();
  if (size && *size <= cfg.enumeration_cutoff) {
    std::uint64_t count = 0;
    bool stop = false;
    sig.enumerate_points([&](const std::vector<Scalar>& p) {
      if (stop) return;
      ++count;
      if (!visit(p)) stop = true;
    });
    return {count, true};
  }
  Rng rng(cfg.seed);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
    ++count;
    if (!visit(sig.sample_point(rng, cfg.window))) break;
  }
  return {count, false};
}

// Power outputs must land in the base; mixed outputs in every factor.
bool output_contained(const DomainSignature& sig, const Scalar& y,
                      std::string* detail) {
  if (sig.is_power()) {
    if (sig.base().contains(y)) return true;
    if (detail) *detail = "output not in " + sig.base().str();
    return false;
  }
  for (int i = 0; i < sig.arity(); ++i) {
    if (!sig.factor(i).contains(y)) {
      if (detail)
        *detail = "output not in factor " + std::to_string(i + 1) + " (" +
                  sig.factor(i).str() + ")";
      return false;
    }
  }
  return true;
}

Verdict run_equation_check(const FunctionDef& f, const CheckConfig& cfg) {
  Verdict v;
  double max_defect = 0.0;
  std::optional<Witness> witness;
  Status bad = Status::Fails;

  auto [count, exhaustive] = for_each_point(
      f.signature, cfg, [&](const std::vector<Scalar>& p) {
        Scalar y;
        try {
          y = eval(f.body, p);
        } catch (const DomainError& e) {
          witness = Witness{p, std::nullopt, std::nullopt, e.what()};
          bad = Status::Undefined;
          return false;
        }
        std::string detail;
        if (!output_contained(f.signature, y, &detail)) {
          witness = Witness{p, y, std::nullopt, detail};
          bad = Status::Undefined;
          return false;
        }
        // the single value y fills every argument slot
        std::vector<Scalar> diag(static_cast<std::size_t>(f.arity), y);
        Scalar z;
        try {
          z = eval(f.body, diag);
        } catch (const DomainError& e) {
          witness = Witness{p, y, std::nullopt, e.what()};
          bad = Status::Undefined;
          return false;
        }
        const double d = scalar_defect(z, y);
        max_defect = std::max(max_defect, d);
        if (!scalars_equal(z, y, cfg.eps_abs, cfg.eps_rel)) {
          witness = Witness{p, y, d, "f(f(x),...,f(x)) != f(x)"};
          bad = Status::Fails;
          return false;
        }
        return true;
      });

  v.points_checked = count;
  v.exhaustive = exhaustive;
  v.max_defect = max_defect;
  if (witness) {
    v.status = bad;
    v.witness = std::move(witness);
  } else {
    v.status = exhaustive ? Status::Holds : Status::HoldsProbably;
  }
  return v;
}

}  // namespace

ContainmentReport check_containment(const FunctionDef& f,
                                    const CheckConfig& cfg) {
  ContainmentReport r;
  auto [count, exhaustive] = for_each_point(
      f.signature, cfg, [&](const std::vector<Scalar>& p) {
        Scalar y;
        try {
          y = eval(f.body, p);
        } catch (const DomainError& e) {
          r.witness = Witness{p, std::nullopt, std::nullopt, e.what()};
          r.consistent = false;
          return false;
        }
        std::string detail;
        if (!output_contained(f.signature, y, &detail)) {
          r.witness = Witness{p, y, std::nullopt, detail};
          r.consistent = false;
          return false;
        }
        return true;
      });
  r.points_checked = count;
  r.exhaustive = exhaustive;
  return r;
}

Verdict check_univariate(const FunctionDef& f, const CheckConfig& cfg) {
  if (f.arity != 1) throw std::invalid_argument("check_univariate needs arity 1");
  return run_equation_check(f, cfg);
}

Verdict check_multivariate(const FunctionDef& f, const CheckConfig& cfg) {
  if (f.arity < 2)
    throw std::invalid_argument("check_multivariate needs arity >= 2");
  return run_equation_check(f, cfg);
}

Verdict check(const FunctionDef& f, const CheckConfig& cfg) {
  return f.arity == 1 ? check_univariate(f, cfg) : check_multivariate(f, cfg);
}

Verdict check_diagonal(const FunctionDef& f, const CheckConfig& cfg) {
  if (f.arity < 2)
    throw std::invalid_argument("check_diagonal needs arity >= 2");
  Verdict v;
  double max_defect = 0.0;
  std::optional<Witness> witness;
  Status bad = Status::Fails;

  auto [count, exhaustive] = for_each_point(
      f.signature, cfg, [&](const std::vector<Scalar>& p) {
        Scalar t;
        try {
          t = eval(f.body, p);
        } catch (const DomainError& e) {
          witness = Witness{p, std::nullopt, std::nullopt, e.what()};
          bad = Status::Undefined;
          return false;
        }
        std::string detail;
        if (!output_contained(f.signature, t, &detail)) {
          witness = Witness{p, t, std::nullopt, detail};
          bad = Status::Undefined;
          return false;
        }
        std::vector<Scalar> diag(static_cast<std::size_t>(f.arity), t);
        Scalar ft;
        try {
          ft = eval(f.body, diag);
        } catch (const DomainError& e) {
          witness = Witness{p, t, std::nullopt, e.what()};
          bad = Status::Undefined;
          return false;
        }
        const double d = scalar_defect(ft, t);
        max_defect = std::max(max_defect, d);
        if (!scalars_equal(ft, t, cfg.eps_abs, cfg.eps_rel)) {
          witness = Witness{p, t, d, "f(t,...,t) != t"};
          bad = Status::Fails;
          return false;
        }
        return true;
      });

  v.points_checked = count;
  v.exhaustive = exhaustive;
  v.max_defect = max_defect;
  if (witness) {
    v.status = bad;
    v.witness = std::move(witness);
  } else {
    v.status = exhaustive ? Status::Holds : Status::HoldsProbably;
  }
  return v;
}

std::vector<std::pair<int, Verdict>> check_mean_sweep(
    const Domain& base, const std::vector<int>& n_values,
    const CheckConfig& cfg) {
  std::vector<std::pair<int, Verdict>> out;
  out.reserve(n_values.size());
  for (int n : n_values) {
    FunctionDef f = make_mean(n, base);
    out.emplace_back(n, check(f, cfg));
  }
  return out;
}

Verdict check_multivariate_sampled(const FunctionDef& f,
                                   const CheckConfig& cfg,
                                   const PointSampler& sampler) {
  Verdict v;
  double max_defect = 0.0;
  std::optional<Witness> witness;
  Status bad = Status::Fails;
  Rng rng(cfg.seed);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
    ++count;
    std::vector<Scalar> p = sampler(rng);
    Scalar y;
    try {
      y = eval(f.body, p);
    } catch (const DomainError& e) {
      witness = Witness{p, std::nullopt, std::nullopt, e.what()};
      bad = Status::Undefined;
      break;
    }
    std::string detail;
    if (!output_contained(f.signature, y, &detail)) {
      witness = Witness{p, y, std::nullopt, detail};
      bad = Status::Undefined;
      break;
    }
    std::vector<Scalar> diag(static_cast<std::size_t>(f.arity), y);
    Scalar z;
    try {
      z = eval(f.body, diag);
    } catch (const DomainError& e) {
      witness = Witness{p, y, std::nullopt, e.what()};
      bad = Status::Undefined;
      break;
    }
    const double d = scalar_defect(z, y);
    max_defect = std::max(max_defect, d);
    if (!scalars_equal(z, y, cfg.eps_abs, cfg.eps_rel)) {
      witness = Witness{p, y, d, "f(f(x),...,f(x)) != f(x)"};
      bad = Status::Fails;
      break;
    }
  }
  v.points_checked = count;
  v.exhaustive = false;
  v.max_defect = max_defect;
  if (witness) {
    v.status = bad;
    v.witness = std::move(witness);
  } else {
    v.status = Status::HoldsProbably;
  }
  return v;
}

}  // namespace ouro
