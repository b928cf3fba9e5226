#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ouro/report.hpp"

namespace py = pybind11;
using namespace ouro;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

Scalar to_scalar(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Scalar::integer(h.cast<std::int64_t>());
  return Scalar::real(h.cast<double>());
}

py::object from_scalar(const Scalar& s) {
  if (s.is_int()) return py::int_(s.as_int());
  return py::float_(s.value());
}

CheckConfig make_config(std::uint64_t samples, std::uint64_t seed,
                        double eps_abs, double eps_rel, std::uint64_t cutoff) {
  CheckConfig cfg;
  cfg.sample_count = samples;
  cfg.seed = seed;
  cfg.eps_abs = eps_abs;
  cfg.eps_rel = eps_rel;
  cfg.enumeration_cutoff = cutoff;
  return cfg;
}

FunctionDef resolve(const std::string& fn, const std::string& domain) {
  if (const FunctionDef* named = find_catalog(fn)) {
    FunctionDef def = *named;
    if (!domain.empty()) {
      def.signature = parse_signature(domain);
      def.codomain = def.signature.base();
    }
    return def;
  }
  if (domain.empty())
    throw std::invalid_argument("a domain signature is required for '" + fn +
                                "'");
  DomainSignature sig = parse_signature(domain);
  Domain codomain = sig.base();
  return make_function(fn, fn, std::move(sig), std::move(codomain));
}

}  // namespace

PYBIND11_MODULE(_ouro, m) {
  m.doc() = "membership checks for idempotent (Ouroboros) function spaces";

  m.def(
      "check",
      [](const std::string& fn, const std::string& domain,
         std::uint64_t samples, std::uint64_t seed, double eps_abs,
         double eps_rel, std::uint64_t cutoff) {
        CheckConfig cfg = make_config(samples, seed, eps_abs, eps_rel, cutoff);
        FunctionDef def = resolve(fn, domain);
        Verdict v = check(def, cfg);
        return json_to_py(verdict_report(def.name, def.signature.str(), v, cfg));
      },
      py::arg("fn"), py::arg("domain") = "", py::arg("samples") = 10000,
      py::arg("seed") = 42, py::arg("eps_abs") = 1e-9,
      py::arg("eps_rel") = 1e-9, py::arg("cutoff") = 100000,
      "Decide membership of an expression (or catalog name) in the Ouroboros "
      "space of its domain signature. Returns the report as a dict.");

  m.def(
      "check_containment",
      [](const std::string& fn, const std::string& domain,
         std::uint64_t samples, std::uint64_t seed, double eps_abs,
         double eps_rel, std::uint64_t cutoff) {
        CheckConfig cfg = make_config(samples, seed, eps_abs, eps_rel, cutoff);
        FunctionDef def = resolve(fn, domain);
        auto r = check_containment(def, cfg);
        return json_to_py(
            containment_report_json(def.name, def.signature.str(), r, cfg));
      },
      py::arg("fn"), py::arg("domain") = "", py::arg("samples") = 10000,
      py::arg("seed") = 42, py::arg("eps_abs") = 1e-9,
      py::arg("eps_rel") = 1e-9, py::arg("cutoff") = 100000);

  m.def(
      "image_report",
      [](const std::string& fn, const std::string& domain,
         std::uint64_t samples, std::uint64_t seed, double eps_abs,
         double eps_rel, std::uint64_t cutoff) {
        CheckConfig cfg = make_config(samples, seed, eps_abs, eps_rel, cutoff);
        FunctionDef def = resolve(fn, domain);
        ImageReport r = verify_fix_equals_image(def, cfg);
        return json_to_py(image_report_json(def.name, r));
      },
      py::arg("fn"), py::arg("domain") = "", py::arg("samples") = 10000,
      py::arg("seed") = 42, py::arg("eps_abs") = 1e-9,
      py::arg("eps_rel") = 1e-9, py::arg("cutoff") = 100000,
      "Image / fixed-point comparison for a verified member.");

  m.def(
      "mean_sweep",
      [](const std::vector<int>& n_values, const std::string& base,
         std::uint64_t samples, std::uint64_t seed) {
        CheckConfig cfg;
        cfg.sample_count = samples;
        cfg.seed = seed;
        auto results = check_mean_sweep(parse_domain(base), n_values, cfg);
        return json_to_py(sweep_report("mean_n", results, cfg));
      },
      py::arg("n_values"), py::arg("base") = "R", py::arg("samples") = 1000,
      py::arg("seed") = 42);

  m.def(
      "membership_sweep",
      [](const std::string& dist, const std::vector<int>& n_values,
         std::uint64_t samples, std::uint64_t seed) {
        CheckConfig cfg;
        cfg.sample_count = samples;
        cfg.seed = seed;
        DistributionSpec d = DistributionSpec::parse(dist);
        auto results = membership_sweep(d, n_values, cfg);
        return json_to_py(sweep_report("mean_n", results, cfg, d.str()));
      },
      py::arg("dist"), py::arg("n_values"), py::arg("samples") = 1000,
      py::arg("seed") = 42,
      "mean_n membership with inputs drawn from the given distribution.");

  m.def(
      "simulate_path",
      [](const std::string& dist, std::uint64_t n_max,
         const std::vector<std::uint64_t>& checkpoints, std::uint64_t seed) {
        DistributionSpec d = DistributionSpec::parse(dist);
        return json_to_py(
            trace_json(d, simulate_path(d, n_max, checkpoints, seed)));
      },
      py::arg("dist"), py::arg("n_max") = 1000000,
      py::arg("checkpoints") = std::vector<std::uint64_t>{}, py::arg("seed") = 42,
      "Running-mean path of i.i.d. draws, recorded at the checkpoints.");

  m.def(
      "convergence_csv",
      [](const std::string& dist, std::uint64_t n_max,
         const std::vector<std::uint64_t>& checkpoints, std::uint64_t seed) {
        DistributionSpec d = DistributionSpec::parse(dist);
        return convergence_csv(simulate_path(d, n_max, checkpoints, seed));
      },
      py::arg("dist"), py::arg("n_max") = 1000000,
      py::arg("checkpoints") = std::vector<std::uint64_t>{}, py::arg("seed") = 42);

  m.def("catalog", [] {
    py::list out;
    for (const auto& e : catalog()) {
      py::dict d;
      d["name"] = e.def.name;
      d["expr"] = print_expr(e.def.body);
      d["signature"] = e.def.signature.str();
      d["codomain"] = e.def.codomain.str();
      d["expected"] = e.expected;
      out.append(d);
    }
    return out;
  });

  m.def(
      "eval_expr",
      [](const std::string& source, const py::sequence& args) {
        std::vector<Scalar> scalars;
        for (const auto& a : args) scalars.push_back(to_scalar(a));
        ExprPtr e = parse_expr(source, static_cast<int>(scalars.size()));
        return from_scalar(eval(e, scalars));
      },
      py::arg("source"), py::arg("args"));

  m.def(
      "print_parsed",
      [](const std::string& source, int arity) {
        return print_expr(parse_expr(source, arity));
      },
      py::arg("source"), py::arg("arity"));

  m.def(
      "domain_contains",
      [](const std::string& spec, const py::handle& value) {
        return parse_domain(spec).contains(to_scalar(value));
      },
      py::arg("domain"), py::arg("value"));

  m.def(
      "domain_enumerate",
      [](const std::string& spec) {
        py::list out;
        for (const auto& v : parse_domain(spec).enumerate())
          out.append(from_scalar(v));
        return out;
      },
      py::arg("domain"));

  m.def(
      "domain_sample",
      [](const std::string& spec, std::uint64_t k, std::uint64_t seed) {
        Rng rng(seed);
        py::list out;
        for (const auto& v : parse_domain(spec).sample(k, rng))
          out.append(from_scalar(v));
        return out;
      },
      py::arg("domain"), py::arg("k"), py::arg("seed") = 42);

  py::register_exception<SyntaxError>(m, "ExprSyntaxError", PyExc_ValueError);
  py::register_exception<ArityError>(m, "ExprArityError", PyExc_ValueError);
  py::register_exception<DomainParseError>(m, "DomainSyntaxError",
                                           PyExc_ValueError);
  py::register_exception<DomainError>(m, "EvalDomainError", PyExc_ValueError);
  py::register_exception<NotEnumerable>(m, "NotEnumerableError",
                                        PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_ValueError);
}
