#include "baryquad/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "baryquad/barycentric.hpp"
#include "baryquad/errors.hpp"
#include "baryquad/experiments.hpp"
#include "baryquad/functions.hpp"
#include "baryquad/quadrature.hpp"

namespace baryquad {

namespace {

using json = nlohmann::ordered_json;

struct RuleFlags {
  std::string family = "jacobi";
  double alpha = 0.0;
  double beta = 0.0;
  std::string variant = "gauss";
  int n = 0;
  std::string kind;
};

void add_rule_flags(CLI::App* cmd, RuleFlags& f, bool require_n) {
  cmd->add_option("--family", f.family, "jacobi, laguerre, hermite, legendre, chebyshev1, chebyshev2")
      ->check(CLI::IsMember({"jacobi", "laguerre", "hermite", "legendre", "chebyshev1",
                             "chebyshev2"}));
  cmd->add_option("--alpha", f.alpha, "first weight parameter (Jacobi, Laguerre)");
  cmd->add_option("--beta", f.beta, "second weight parameter (Jacobi)");
  cmd->add_option("--variant", f.variant, "gauss, radau, radau-left, radau-right, lobatto")
      ->check(CLI::IsMember({"gauss", "radau", "radau-left", "radau-right", "lobatto"}));
  auto* n = cmd->add_option("--n", f.n, "number of points")->check(CLI::PositiveNumber);
  if (require_n) n->required();
  cmd->add_option("--kind", f.kind, "barycentric weights: simplified or full")
      ->check(CLI::IsMember({"simplified", "full"}));
}

WeightFamily parse_family(const RuleFlags& f) {
  if (f.family == "jacobi") return WeightFamily::jacobi(f.alpha, f.beta);
  if (f.family == "laguerre") return WeightFamily::laguerre(f.alpha);
  if (f.family == "hermite") return WeightFamily::hermite();
  if (f.family == "legendre") return WeightFamily::legendre();
  if (f.family == "chebyshev1") return WeightFamily::chebyshev_first();
  return WeightFamily::chebyshev_second();
}

RuleVariant parse_variant(const std::string& v) {
  if (v == "gauss") return RuleVariant::Gauss;
  if (v == "radau" || v == "radau-left") return RuleVariant::RadauLeft;
  if (v == "radau-right") return RuleVariant::RadauRight;
  return RuleVariant::Lobatto;
}

WeightKind parse_kind(const std::string& k, WeightKind fallback) {
  if (k.empty()) return fallback;
  return k == "full" ? WeightKind::Full : WeightKind::Simplified;
}

ErrorNorm parse_norm(const std::string& s) {
  if (s == "maxgrid") return ErrorNorm::MaxGrid;
  if (s == "weighted-l2") return ErrorNorm::WeightedL2;
  return ErrorNorm::WeightedL1;
}

json number_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

std::vector<double> read_numbers(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      if (token[0] == '#') break;
      char* end = nullptr;
      const double v = std::strtod(token.c_str(), &end);
      if (end == token.c_str() || *end != '\0') {
        throw ArgumentError("'" + path + "': not a number: " + token);
      }
      values.push_back(v);
    }
  }
  return values;
}

int cmd_rule(const RuleFlags& flags, const std::string& format, std::ostream& out) {
  const QuadratureRule rule =
      make_rule(parse_family(flags), parse_variant(flags.variant), flags.n);
  const BarycentricWeights bw =
      bary_weights(rule, parse_kind(flags.kind, WeightKind::Simplified));
  if (format == "json") {
    json rows = json::array();
    for (std::size_t j = 0; j < rule.size(); ++j) {
      rows.push_back({{"index", j},
                      {"node", number_json(rule.nodes[j])},
                      {"quad_weight", number_json(rule.weights[j])},
                      {"bary_weight", number_json(bw.values[j])}});
    }
    out << rows.dump(2) << '\n';
  } else {
    out << "index,node,quad_weight,bary_weight\n";
    for (std::size_t j = 0; j < rule.size(); ++j) {
      out << j << ',' << format_number(rule.nodes[j]) << ','
          << format_number(rule.weights[j]) << ',' << format_number(bw.values[j])
          << '\n';
    }
  }
  return kExitOk;
}

struct InterpFlags {
  std::string samples_file;
  std::string function;
  std::string points_file;
  std::string form = "second";
  std::vector<double> domain;
};

int cmd_interp(const RuleFlags& flags, const InterpFlags& ip, const std::string& format,
               std::ostream& out) {
  const bool first = ip.form == "first";
  const WeightKind kind = parse_kind(flags.kind, first ? WeightKind::Full : WeightKind::Simplified);
  if (first && kind != WeightKind::Full) {
    throw ContractError("the first barycentric form needs --kind full");
  }
  const QuadratureRule rule =
      make_rule(parse_family(flags), parse_variant(flags.variant), flags.n);
  BarycentricWeights bw = bary_weights(rule, kind);

  DomainMap map;
  if (!ip.domain.empty()) {
    if (!rule.family.is_jacobi()) {
      throw ArgumentError("--domain applies to Jacobi-family nodes only");
    }
    map = DomainMap{ip.domain[0], ip.domain[1]};
  }

  Interpolant p;
  if (!ip.function.empty()) {
    p = sample_interpolant(std::move(bw), builtin_function(ip.function), map);
  } else {
    p = make_interpolant(std::move(bw), read_numbers(ip.samples_file));
    if (!map.is_identity()) p = map_to_domain(p, map.a, map.b);
  }

  const std::vector<double> xs = read_numbers(ip.points_file);
  std::vector<double> ys;
  if (first) {
    ys.reserve(xs.size());
    for (double x : xs) ys.push_back(eval_first_form(p, x));
  } else {
    ys = eval_second_form(p, xs);
  }

  if (format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      rows.push_back({{"x", number_json(xs[i])}, {"p", number_json(ys[i])}});
    }
    out << rows.dump(2) << '\n';
  } else {
    out << "x,p\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out << format_number(xs[i]) << ',' << format_number(ys[i]) << '\n';
    }
  }
  return kExitOk;
}

struct ConvergenceFlags {
  std::string function = "runge";
  std::optional<std::string> family;
  std::optional<double> alpha, beta;
  std::optional<std::string> variant;
  std::optional<int> nmin, nmax, nstep;
  std::optional<std::string> norm;
};

int cmd_convergence(const ConvergenceFlags& c, const std::string& format, std::ostream& out) {
  ExperimentSpec spec = default_experiment(c.function);
  if (c.family || c.alpha || c.beta) {
    RuleFlags rf;
    rf.family = c.family.value_or(spec.family.is_laguerre() ? "laguerre" : "jacobi");
    rf.alpha = c.alpha.value_or(spec.family.alpha());
    rf.beta = c.beta.value_or(spec.family.beta());
    spec.family = parse_family(rf);
  }
  if (c.variant) spec.variant = parse_variant(*c.variant);
  if (c.nmin) spec.nmin = *c.nmin;
  if (c.nmax) spec.nmax = *c.nmax;
  if (c.nstep) spec.nstep = *c.nstep;
  if (c.norm) spec.norm = parse_norm(*c.norm);
  validate(spec);

  const std::vector<ConvergenceRow> rows = run_convergence(spec);
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"n", r.n}, {"error", number_json(r.error)}});
    out << arr.dump(2) << '\n';
  } else {
    out << "n,error\n";
    for (const auto& r : rows) out << r.n << ',' << format_number(r.error) << '\n';
  }
  return kExitOk;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss, Radau and Lobatto rules with their barycentric weights", "baryquad"};
  app.require_subcommand(1);
  std::string format = "csv";
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  RuleFlags rule_flags;
  auto* rule_cmd = app.add_subcommand("rule", "emit nodes, quadrature and barycentric weights");
  add_rule_flags(rule_cmd, rule_flags, true);
  rule_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  RuleFlags interp_rule;
  InterpFlags interp;
  auto* interp_cmd = app.add_subcommand("interp", "evaluate a barycentric interpolant");
  add_rule_flags(interp_cmd, interp_rule, true);
  auto* samples_opt = interp_cmd->add_option("--samples", interp.samples_file,
                                             "file with f at the nodes, in node order");
  auto* function_opt = interp_cmd->add_option("--function", interp.function,
                                              "builtin: runge, expinv, bessel, airy")
                           ->check(CLI::IsMember({"runge", "expinv", "bessel", "airy"}));
  samples_opt->excludes(function_opt);
  interp_cmd->add_option("--points", interp.points_file, "file with evaluation points")
      ->required();
  interp_cmd->add_option("--form", interp.form, "first or second")
      ->check(CLI::IsMember({"first", "second"}));
  interp_cmd->add_option("--domain", interp.domain, "map [-1,1] onto [A,B]")
      ->expected(2);
  interp_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  ConvergenceFlags conv;
  auto* conv_cmd = app.add_subcommand("convergence", "error table of a builtin experiment");
  conv_cmd->add_option("--function", conv.function, "runge, expinv, bessel, airy")
      ->check(CLI::IsMember({"runge", "expinv", "bessel", "airy"}));
  conv_cmd->add_option("--family", conv.family, "jacobi, laguerre, legendre, chebyshev1, chebyshev2")
      ->check(CLI::IsMember({"jacobi", "laguerre", "hermite", "legendre", "chebyshev1",
                             "chebyshev2"}));
  conv_cmd->add_option("--alpha", conv.alpha);
  conv_cmd->add_option("--beta", conv.beta);
  conv_cmd->add_option("--variant", conv.variant)
      ->check(CLI::IsMember({"gauss", "radau", "radau-left", "radau-right", "lobatto"}));
  conv_cmd->add_option("--nmin", conv.nmin);
  conv_cmd->add_option("--nmax", conv.nmax);
  conv_cmd->add_option("--nstep", conv.nstep);
  conv_cmd->add_option("--norm", conv.norm, "maxgrid, weighted-l2, weighted-l1")
      ->check(CLI::IsMember({"maxgrid", "weighted-l2", "weighted-l1"}));
  conv_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "baryquad: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*rule_cmd) return cmd_rule(rule_flags, format, out);
    if (*interp_cmd) {
      if (interp.samples_file.empty() && interp.function.empty()) {
        throw ArgumentError("interp needs --samples or --function");
      }
      return cmd_interp(interp_rule, interp, format, out);
    }
    return cmd_convergence(conv, format, out);
  } catch (const ArgumentError& e) {
    err << "baryquad: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "baryquad: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "baryquad: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "baryquad: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace baryquad
