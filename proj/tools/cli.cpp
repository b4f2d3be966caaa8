#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "slicefock/errors.hpp"
#include "slicefock/fock.hpp"
#include "slicefock/kernel.hpp"
#include "slicefock/reports.hpp"
#include "slicefock/smoothness.hpp"

namespace slicefock::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string emit(const Table& t, const ExperimentConfig& c) {
  return c.output_format() == "json" ? t.json() : t.csv();
}

std::string cmd_norm(const ExperimentConfig& c) {
  const SliceSeries f = FunctionSpec::parse(c.fn).build();
  const NormSpec spec = c.norm_spec();
  const NormResult r = norm(f, spec);
  if (c.output_format() == "json") return to_json(r, spec);
  Table t{{"value", "tail_bound", "radial", "angular", "sphere"}, {}};
  t.add({r.value, r.tail_bound, static_cast<std::int64_t>(r.grid.radial),
         static_cast<std::int64_t>(r.grid.angular), static_cast<std::int64_t>(r.grid.sphere)});
  return t.csv();
}

OperatorSpec operator_of(const ExperimentConfig& c, int n) {
  if (c.family.empty()) throw ConfigError(c.command + " needs --family or --op");
  return OperatorSpec{c.family, n, c.m};
}

std::string cmd_converge(const ExperimentConfig& c) {
  const SliceSeries f = FunctionSpec::parse(c.fn).build();
  const NormSpec spec = c.norm_spec();
  const bool on_slice = spec.kind == FockKind::kSecond && spec.slice.has_value();
  Table t{{"n", "error", "bound", "slack"}, {}};
  for (int n : parse_int_list(c.ns)) {
    const OperatorSpec op = operator_of(c, n);
    double error = 0.0, bound = kNaN, slack = kNaN;
    if (op.family == "vdp" && on_slice) {
      const EstimateReport r = verify_vdp(f, n, c.p, c.alpha, *spec.slice, c.grid);
      error = r.lhs;
      bound = r.rhs;
      slack = r.slack;
    } else if (op.family == "jackson" && on_slice) {
      const EstimateReport r = verify_jackson(f, n, c.m, c.p, c.alpha, *spec.slice, c.h_grid, c.grid);
      error = r.lhs;
      bound = r.rhs;
    } else {
      error = norm(apply(op.build(c.p), f) - f, spec).value;
    }
    t.add({static_cast<std::int64_t>(n), error, bound, slack});
  }
  return emit(t, c);
}

std::string cmd_multipliers(const ExperimentConfig& c) {
  const MultiplierOperator op = operator_of(c, c.n).build(c.p);
  return c.output_format() == "json" ? to_json(op) : multiplier_table(op).csv();
}

std::string cmd_smoothness(const ExperimentConfig& c) {
  const SliceSeries f = FunctionSpec::parse(c.fn).build();
  const ImaginaryUnit I = SliceSpec::parse(c.slice).fixed(c.command);
  if (c.family.empty()) {
    Table t{{"k", "delta", "omega"}, {}};
    for (double d : parse_double_list(c.delta)) {
      ModulusQuery q;
      q.k = c.k;
      q.delta = d;
      q.p = c.p;
      q.alpha = c.alpha;
      q.slice = I;
      q.h_grid = c.h_grid;
      q.grid = c.grid;
      t.add({static_cast<std::int64_t>(c.k), d, modulus(f, q)});
    }
    return emit(t, c);
  }
  EstimateReport r;
  if (c.family == "vdp") {
    r = verify_vdp(f, c.n, c.p, c.alpha, I, c.grid);
  } else if (c.family == "jackson") {
    r = verify_jackson(f, c.n, c.m, c.p, c.alpha, I, c.h_grid, c.grid);
  } else {
    throw ConfigError("smoothness estimates exist for vdp and jackson, not " + c.family);
  }
  if (c.output_format() == "json") return to_json(r);
  Table t{{"theorem", "n", "m", "r", "lhs", "rhs", "ratio", "slack", "degenerate", "passed"}, {}};
  t.add({r.theorem, static_cast<std::int64_t>(r.n), static_cast<std::int64_t>(r.m),
         static_cast<std::int64_t>(r.r), r.lhs, r.rhs, r.ratio, r.slack,
         static_cast<std::int64_t>(r.degenerate), static_cast<std::int64_t>(r.passed)});
  return t.csv();
}

std::string cmd_bestapprox(const ExperimentConfig& c) {
  const SliceSeries f = FunctionSpec::parse(c.fn).build();
  Table t{{"n", "value", "method", "iterations"}, {}};
  for (int n : parse_int_list(c.ns)) {
    BestApproxResult r;
    if (c.fock_kind() == FockKind::kFirst) {
      if (c.p != 2.0) throw ConfigError("first-kind best approximation is available at p = 2 only");
      r = best_approx_first(f, n, c.alpha, c.grid);
    } else {
      r = best_approx(f, n, c.p, c.alpha, SliceSpec::parse(c.slice).fixed(c.command), c.grid);
    }
    t.add({static_cast<std::int64_t>(n), r.value, method_name(r.method),
           static_cast<std::int64_t>(r.iterations)});
  }
  return emit(t, c);
}

std::string cmd_growth(const ExperimentConfig& c) {
  const SliceSeries f = FunctionSpec::parse(c.fn).build();
  if (c.radii < 4) throw ConfigError("growth needs at least 4 radii");
  const GrowthReport r = order_type(f, geometric_radii(c.r_min, c.r_max, c.radii));
  if (c.output_format() == "json") return to_json(r);
  Table t{{"order", "type", "residual"}, {}};
  t.add({r.order, r.type.value_or(kNaN), r.residual});
  return t.csv();
}

std::string cmd_kernel_fit(const ExperimentConfig& c) {
  const SliceSeries f = FunctionSpec::parse(c.fn).build();
  const ImaginaryUnit I = SliceSpec::parse(c.slice).unit.value_or(ImaginaryUnit::i());
  const std::vector<Quaternion> centers = parse_centers(c.centers);
  Table t{{"centers", "residual", "condition"}, {}};
  if (!centers.empty()) {
    if (c.output_format() == "json")
      return to_json(fit_with_sections(f, centers, c.alpha, c.p, I), centers, c.alpha);
    for (std::size_t N = 1; N <= centers.size(); ++N) {
      const std::vector<Quaternion> head(centers.begin(), centers.begin() + N);
      const SectionFit fit = fit_with_sections(f, head, c.alpha, c.p, I);
      t.add({static_cast<std::int64_t>(N), fit.residual, fit.condition});
    }
  } else {
    for (int N : parse_int_list(c.ns)) {
      if (N < 1) throw ConfigError("kernel-fit needs at least one center");
      const SectionFit fit = fit_with_sections(f, equispaced_real_centers(N), c.alpha, c.p, I);
      t.add({static_cast<std::int64_t>(N), fit.residual, fit.condition});
    }
  }
  return emit(t, c);
}

std::map<std::string, std::string> key_values(const std::string& canonical) {
  std::map<std::string, std::string> kv;
  std::istringstream in(canonical);
  for (std::string line; std::getline(in, line);) {
    const auto eq = line.find('=');
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

std::string execute(const ExperimentConfig& c) {
  if (c.command == "norm") return cmd_norm(c);
  if (c.command == "converge") return cmd_converge(c);
  if (c.command == "multipliers") return cmd_multipliers(c);
  if (c.command == "smoothness") return cmd_smoothness(c);
  if (c.command == "bestapprox") return cmd_bestapprox(c);
  if (c.command == "growth") return cmd_growth(c);
  if (c.command == "kernel-fit") return cmd_kernel_fit(c);
  throw ConfigError("unknown command: '" + c.command + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical experiments in quaternionic slice Fock spaces."};
  app.name(args.empty() ? "slicefock" : args[0]);
  app.fallthrough();
  app.require_subcommand(0, 1);

  // Every option writes a config key; only options given on the command line
  // override the config file or the defaults.
  std::vector<std::pair<CLI::Option*, std::string>> bound;
  auto values = std::make_shared<std::map<std::string, std::string>>();
  auto option = [&](CLI::App* where, const std::string& flag, const std::string& key,
                    const std::string& help) {
    CLI::Option* o = where->add_option(flag, (*values)[key], help);
    bound.emplace_back(o, key);
    return o;
  };

  std::string config_path, op_spec;
  bool print_config = false;
  app.add_option("--config", config_path, "Read key=value settings; flags override them");
  app.add_flag("--print-config", print_config, "Print the canonical configuration and exit");
  option(&app, "--p", "p", "Exponent p > 0 (default 2)");
  option(&app, "--alpha", "alpha", "Gaussian weight alpha > 0 (default 1)");
  option(&app, "--kind", "kind", "first or second (default second)");
  option(&app, "--slice", "slice", "i, j, k, x,y,z or sup:<M> (default i)");
  option(&app, "--quad-radial", "quad_radial", "Radial nodes (default 64)");
  option(&app, "--quad-angular", "quad_angular", "Angular nodes (default 128)");
  option(&app, "--quad-sphere", "quad_sphere", "Sphere nodes (default 64)");
  option(&app, "--out", "out", "Write output to this file instead of stdout");
  option(&app, "--format", "format", "csv or json (default per command)");

  const std::string fn_help = "exp, gauss:<beta>, mono:<k>, poly:<path> or random:<deg>:<seed>";
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : ExperimentConfig::commands()) subs[name] = nullptr;
  subs["norm"] = app.add_subcommand("norm", "Fock norm of a function");
  subs["converge"] = app.add_subcommand("converge", "Operator error sweep: n,error,bound,slack");
  subs["multipliers"] = app.add_subcommand("multipliers", "Coefficient multipliers of an operator");
  subs["smoothness"] =
      app.add_subcommand("smoothness", "Moduli of smoothness, or a vdp/jackson estimate with --op");
  subs["bestapprox"] = app.add_subcommand("bestapprox", "Best polynomial approximation E_n");
  subs["growth"] = app.add_subcommand("growth", "Order and type from the maximum modulus");
  subs["kernel-fit"] = app.add_subcommand("kernel-fit", "Least-squares fit by kernel sections");
  for (const auto& [name, sub] : subs) {
    if (name != "multipliers") option(sub, "--fn", "fn", fn_help + " (default exp)");
  }
  for (const char* name : {"converge", "multipliers", "smoothness"}) {
    option(subs[name], "--family", "family", "taylor, fejer, vdp or jackson");
    option(subs[name], "--m", "m", "Jackson order m (default 0)");
  }
  for (const char* name : {"multipliers", "smoothness"}) {
    option(subs[name], "--n", "n", "Operator index n (default 4)");
    subs[name]->add_option("--op", op_spec, "taylor:<n>, fejer:<n>, vdp:<n> or jackson:<n>:<m>");
  }
  option(subs["converge"], "--ns", "ns", "Comma-separated n values (default 2,4,8,16)");
  option(subs["bestapprox"], "--ns", "ns", "Comma-separated degrees (default 2,4,8,16)");
  option(subs["kernel-fit"], "--ns", "ns",
         "Equispaced center counts in [-1, 1] when --centers is absent");
  option(subs["smoothness"], "--k", "k", "Difference order k (default 1)");
  option(subs["smoothness"], "--delta", "delta", "Comma-separated delta values (default 0.1)");
  for (const char* name : {"converge", "smoothness"})
    option(subs[name], "--h-grid", "h_grid", "Step samples per modulus (default 16)");
  option(subs["growth"], "--r-min", "r_min", "Smallest radius (default 1)");
  option(subs["growth"], "--r-max", "r_max", "Largest radius (default 8)");
  option(subs["growth"], "--radii", "radii", "Number of geometric radii (default 16)");
  option(subs["kernel-fit"], "--centers", "centers",
         "Comma-separated quaternions, each 'w x y z' or w:x:y:z; rows refit with the first N");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  ExperimentConfig config;
  try {
    std::map<std::string, std::string> kv =
        key_values(config_path.empty() ? ExperimentConfig{}.canonical()
                                       : ExperimentConfig::parse(read_file(config_path)).canonical());
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) kv["command"] = name;
    for (const auto& [opt, key] : bound)
      if (opt->count() > 0) kv[key] = (*values)[key];
    if (!op_spec.empty()) {
      const OperatorSpec op = OperatorSpec::parse(op_spec);
      kv["family"] = op.family;
      kv["n"] = std::to_string(op.n);
      kv["m"] = std::to_string(op.m);
    }
    if (kv["command"].empty()) {
      err << "a subcommand or a config file with a command is required\n" << app.help();
      return kUsage;
    }
    std::string text;
    for (const auto& [k, v] : kv) text += k + "=" + v + "\n";
    config = ExperimentConfig::parse(text);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (print_config) {
    out << config.canonical();
    return kOk;
  }

  std::string result;
  try {
    result = execute(config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotInSpaceError& e) {
    err << "not in space: " << e.what() << "\n";
    return kNotInSpace;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }

  if (config.out.empty()) {
    out << result;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    file << result;
    if (!file) {
      err << "error: cannot write " << config.out << "\n";
      return kUsage;
    }
  }
  return kOk;
}

}  // namespace slicefock::cli
