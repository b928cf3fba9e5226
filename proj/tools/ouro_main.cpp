#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ouro/report.hpp"

namespace {

using namespace ouro;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUndefined = 2;
constexpr int kExitUsage = 3;

int verdict_exit(Status s) {
  switch (s) {
    case Status::Holds:
    case Status::HoldsProbably:
      return kExitOk;
    case Status::Fails:
      return kExitFails;
    case Status::Undefined:
      return kExitUndefined;
  }
  return kExitUsage;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << text;
}

template <typename T, typename Conv>
std::vector<T> split_list(const std::string& s, Conv conv) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(conv(item));
  }
  return out;
}

std::string witness_text(const Witness& w) {
  std::string s = "witness: x = (";
  for (std::size_t i = 0; i < w.input.size(); ++i) {
    if (i) s += ", ";
    s += w.input[i].str();
  }
  s += ")";
  if (w.output) s += ", f(x) = " + w.output->str();
  if (w.defect) s += ", defect = " + format_double(*w.defect);
  if (!w.detail.empty()) s += " [" + w.detail + "]";
  return s;
}

std::string verdict_text(const std::string& fn, const std::string& sig,
                         const Verdict& v, const CheckConfig& cfg) {
  std::string s;
  s += "function:       " + fn + "\n";
  s += "signature:      " + sig + "\n";
  s += "status:         " + status_str(v.status) + "\n";
  s += "points_checked: " + std::to_string(v.points_checked) +
       (v.exhaustive ? " (exhaustive)\n" : " (sampled)\n");
  s += "max_defect:     " + format_double(v.max_defect) + "\n";
  s += "seed:           " + std::to_string(cfg.seed) + "\n";
  if (v.witness) s += witness_text(*v.witness) + "\n";
  return s;
}

struct CommonOpts {
  std::string fn_source;
  std::string catalog_name;
  std::string domain_spec;
  std::string format = "text";
  std::string out_path;
  CheckConfig cfg;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_function) {
  if (with_function) {
    cmd->add_option("--fn", o.fn_source, "function body, e.g. \"mean(x1,x2)\"");
    cmd->add_option("--name", o.catalog_name, "catalog function name");
    cmd->add_option("--domain", o.domain_spec,
                    "domain signature, e.g. \"R^2\" or \"real[0,1] x int[0..9]\"");
  }
  cmd->add_option("--samples", o.cfg.sample_count, "sample budget");
  cmd->add_option("--seed", o.cfg.seed, "random seed");
  cmd->add_option("--eps-abs", o.cfg.eps_abs, "absolute tolerance");
  cmd->add_option("--eps-rel", o.cfg.eps_rel, "relative tolerance");
  cmd->add_option("--cutoff", o.cfg.enumeration_cutoff,
                  "exhaustive enumeration cutoff");
  cmd->add_option("--format", o.format, "output format: text|json|csv");
  cmd->add_option("--out", o.out_path, "output path (default stdout)");
}

FunctionDef resolve_function(const CommonOpts& o) {
  if (!o.catalog_name.empty()) {
    const FunctionDef* f = find_catalog(o.catalog_name);
    if (!f) throw std::invalid_argument("no catalog entry named " + o.catalog_name);
    FunctionDef def = *f;
    if (!o.domain_spec.empty()) {
      def.signature = parse_signature(o.domain_spec);
      def.codomain = def.signature.base();
    }
    return def;
  }
  if (o.fn_source.empty())
    throw std::invalid_argument("either --fn or --name is required");
  if (o.domain_spec.empty())
    throw std::invalid_argument("--domain is required with --fn");
  DomainSignature sig = parse_signature(o.domain_spec);
  Domain codomain = sig.base();
  return make_function(o.fn_source, o.fn_source, std::move(sig),
                       std::move(codomain));
}

int cmd_check(const CommonOpts& o) {
  FunctionDef f = resolve_function(o);
  Verdict v = check(f, o.cfg);
  if (o.format == "json") {
    emit(verdict_report(f.name, f.signature.str(), v, o.cfg).dump(2) + "\n",
         o.out_path);
  } else {
    emit(verdict_text(f.name, f.signature.str(), v, o.cfg), o.out_path);
  }
  return verdict_exit(v.status);
}

int cmd_image(const CommonOpts& o) {
  FunctionDef f = resolve_function(o);
  Verdict v = check(f, o.cfg);
  ImageReport r;
  if (v.status == Status::Holds || v.status == Status::HoldsProbably) {
    r = verify_fix_equals_image(f, o.cfg);
  } else {
    r.image = image(f, o.cfg);
    r.fixed = fixed_points(f, o.cfg);
    r.equal = false;
  }
  if (o.format == "json") {
    json j = image_report_json(f.name, r);
    j["verdict"] = status_str(v.status);
    emit(j.dump(2) + "\n", o.out_path);
  } else {
    std::string s;
    s += "function:     " + f.name + "\n";
    s += "verdict:      " + status_str(v.status) + "\n";
    s += "image size:   " + std::to_string(r.image.values.size()) +
         (r.image.exact ? " (exact)\n" : " (sampled)\n");
    s += "fixed points: " + std::to_string(r.fixed.values.size()) +
         (r.fixed.exact ? " (exact)\n" : " (sampled)\n");
    s += std::string("fix = im:     ") + (r.equal ? "yes" : "no") + "\n";
    emit(s, o.out_path);
  }
  return verdict_exit(v.status);
}

int cmd_catalog(const std::string& format, const std::string& out_path) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& e : catalog()) {
      json j;
      j["name"] = e.def.name;
      j["expr"] = print_expr(e.def.body);
      j["signature"] = e.def.signature.str();
      j["codomain"] = e.def.codomain.str();
      j["expected"] = e.expected;
      rows.push_back(j);
    }
    emit(rows.dump(2) + "\n", out_path);
  } else {
    std::string s;
    for (const auto& e : catalog()) {
      s += e.def.name + "  " + print_expr(e.def.body) + "  on " +
           e.def.signature.str() + "  -> " + e.def.codomain.str() +
           "  [expected: " + e.expected + "]\n";
    }
    emit(s, out_path);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ouroboros space membership checker"};
  app.require_subcommand(1);

  CommonOpts check_opts;
  auto* check_cmd = app.add_subcommand("check", "decide membership of a function");
  add_common(check_cmd, check_opts, true);

  CommonOpts image_opts;
  auto* image_cmd =
      app.add_subcommand("image", "image / fixed-point report for a function");
  add_common(image_cmd, image_opts, true);

  CommonOpts catalog_opts;
  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in functions");
  catalog_cmd->add_option("--format", catalog_opts.format, "text|json");
  catalog_cmd->add_option("--out", catalog_opts.out_path, "output path");

  CommonOpts slln_opts;
  std::string dist_spec = "uniform(0,1)";
  std::uint64_t n_max = 1000000;
  std::string checkpoints_arg;
  auto* slln_cmd =
      app.add_subcommand("slln", "running-mean convergence simulation");
  slln_cmd->add_option("--dist", dist_spec, "distribution, e.g. uniform(0,1)");
  slln_cmd->add_option("--n-max", n_max, "path length");
  slln_cmd->add_option("--checkpoints", checkpoints_arg,
                       "comma-separated checkpoint sizes");
  add_common(slln_cmd, slln_opts, false);
  slln_opts.format = "csv";

  CommonOpts sweep_opts;
  std::string sweep_ns = "1,2,3,4,8,16,64,256,1024";
  std::string sweep_dist;
  std::string sweep_base = "R";
  auto* sweep_cmd =
      app.add_subcommand("sweep", "mean_n membership across arities");
  sweep_cmd->add_option("--n", sweep_ns, "comma-separated arities");
  sweep_cmd->add_option("--dist", sweep_dist,
                        "sample inputs from this distribution");
  sweep_cmd->add_option("--domain", sweep_base, "base domain (default R)");
  add_common(sweep_cmd, sweep_opts, false);

  try {
    app.parse(argc, argv);

    if (check_cmd->parsed()) return cmd_check(check_opts);
    if (image_cmd->parsed()) return cmd_image(image_opts);
    if (catalog_cmd->parsed())
      return cmd_catalog(catalog_opts.format, catalog_opts.out_path);

    if (slln_cmd->parsed()) {
      DistributionSpec d = DistributionSpec::parse(dist_spec);
      std::vector<std::uint64_t> cps;
      if (checkpoints_arg.empty()) {
        for (std::uint64_t c = 1; c <= n_max; c *= 10) cps.push_back(c);
        if (cps.empty() || cps.back() != n_max) cps.push_back(n_max);
      } else {
        cps = split_list<std::uint64_t>(checkpoints_arg, [](const std::string& s) {
          return static_cast<std::uint64_t>(std::stoull(s));
        });
      }
      ConvergenceTrace t = simulate_path(d, n_max, cps, slln_opts.cfg.seed);
      if (slln_opts.format == "json") {
        emit(trace_json(d, t).dump(2) + "\n", slln_opts.out_path);
      } else {
        emit(convergence_csv(t), slln_opts.out_path);
      }
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      auto ns = split_list<int>(sweep_ns,
                                [](const std::string& s) { return std::stoi(s); });
      std::vector<std::pair<int, Verdict>> results;
      std::string dist_label;
      if (!sweep_dist.empty()) {
        DistributionSpec d = DistributionSpec::parse(sweep_dist);
        dist_label = d.str();
        results = membership_sweep(d, ns, sweep_opts.cfg);
      } else {
        results = check_mean_sweep(parse_domain(sweep_base), ns, sweep_opts.cfg);
      }
      int exit_code = kExitOk;
      for (const auto& [n, v] : results)
        exit_code = std::max(exit_code, verdict_exit(v.status));
      if (sweep_opts.format == "json") {
        emit(sweep_report("mean_n", results, sweep_opts.cfg, dist_label).dump(2) +
                 "\n",
             sweep_opts.out_path);
      } else {
        std::string s = "n,status,points_checked,max_defect\n";
        for (const auto& [n, v] : results) {
          s += std::to_string(n) + "," + status_str(v.status) + "," +
               std::to_string(v.points_checked) + "," +
               format_double(v.max_defect) + "\n";
        }
        emit(s, sweep_opts.out_path);
      }
      return exit_code;
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "expression grammar: expr := term ((\"+\"|\"-\") term)*; "
                 "variables x1..xn; calls mean/median/clamp/min/max/abs/"
                 "floor/ceil/round\n";
    std::cerr << "domain syntax: set{1,2,3}, int[-50..50], real[0,1], "
                 "real(0,1], R, Z, R^3, real[0,1] x int[0..9]\n";
    return kExitUsage;
  }
  return kExitUsage;
}
