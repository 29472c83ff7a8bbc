// SPDX-License-Identifier: Apache-2.0
#include "lisscheb_cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "format.hpp"
#include "verify.hpp"

namespace lisscheb::cli {

namespace {

struct SpecFlags {
  std::string variant = "standard";
  std::vector<Index> n;
  std::vector<Index> kappa;

  void attach(CLI::App& app) {
    app.add_option("--variant", variant, "standard or shifted")
        ->check(CLI::IsMember({"standard", "shifted"}));
    app.add_option("--n", n, "pairwise relatively prime frequencies, e.g. 5,3")->delimiter(',')->required();
    app.add_option("--kappa", kappa, "shift vector (shifted variant)")->delimiter(',');
  }

  [[nodiscard]] NodeSpec build() const {
    auto dv = validate_pairwise_coprime(std::span<const Index>(n));
    if (variant == "standard") {
      if (!kappa.empty()) throw ValidationError("--kappa applies only to the shifted variant");
      return NodeSpec::standard(std::move(dv));
    }
    if (kappa.empty()) throw ValidationError("the shifted variant needs --kappa");
    return NodeSpec::shifted(std::move(dv), kappa);
  }
};

std::string short_fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string to_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string describe_gcd(const CoprimalityViolation& e, const std::vector<std::string>& args) {
  std::string n;
  for (std::size_t k = 0; k + 1 < args.size(); ++k) {
    if (args[k] == "--n") n = args[k + 1];
  }
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k].rfind("--n=", 0) == 0) n = args[k].substr(4);
  }
  std::vector<std::string> parts;
  std::stringstream ss(n);
  std::string part;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  if (e.first() >= parts.size() || e.second() >= parts.size()) return e.what();
  return "entries " + std::to_string(e.first() + 1) + " and " + std::to_string(e.second() + 1) +
         " of --n are not relatively prime: gcd(" + parts[e.first()] + "," + parts[e.second()] +
         ") = " + std::to_string(e.gcd());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lissajous-Chebyshev interpolation and quadrature", "lisscheb"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;

  SpecFlags nodes_spec;
  auto* nodes_cmd = app.add_subcommand("nodes", "node set: index, point, weight, parity, face bitmask");
  nodes_spec.attach(*nodes_cmd);
  nodes_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  nodes_cmd->add_option("--out", out_path);

  std::vector<Index> curve_n;
  std::vector<Index> curve_kappa;
  std::vector<int> curve_u;
  std::string curve_variant;
  int epsilon = 0;
  Index samples = 1001;
  double t0 = 0.0;
  double t1 = 2.0 * kPi;
  auto* curve_cmd = app.add_subcommand("curve", "sampled Lissajous curve: t, x1..xd");
  curve_cmd->add_option("--variant", curve_variant)->check(CLI::IsMember({"standard", "shifted"}));
  curve_cmd->add_option("--n", curve_n)->delimiter(',')->required();
  curve_cmd->add_option("--epsilon", epsilon)->check(CLI::IsMember({1, 2}));
  curve_cmd->add_option("--kappa", curve_kappa)->delimiter(',');
  curve_cmd->add_option("--u", curve_u)->delimiter(',');
  curve_cmd->add_option("--samples", samples);
  curve_cmd->add_option("--t0", t0);
  curve_cmd->add_option("--t1", t1);
  curve_cmd->add_option("--out", out_path);

  SpecFlags gamma_spec;
  auto* gamma_cmd = app.add_subcommand("gamma", "spectral index set with norms");
  gamma_spec.attach(*gamma_cmd);
  gamma_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  gamma_cmd->add_option("--out", out_path);

  SpecFlags interp_spec;
  std::string data_path;
  std::string mode = "fast";
  auto* interp_cmd = app.add_subcommand("interp", "interpolating expansion of node data (JSON)");
  interp_spec.attach(*interp_cmd);
  interp_cmd->add_option("--data", data_path)->required();
  interp_cmd->add_option("--mode", mode)->check(CLI::IsMember({"fast", "naive"}));
  interp_cmd->add_option("--out", out_path);

  std::string expansion_path;
  std::string points_path;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expansion at points");
  eval_cmd->add_option("--expansion", expansion_path)->required();
  eval_cmd->add_option("--points", points_path)->required();
  eval_cmd->add_option("--out", out_path);

  SpecFlags quad_spec;
  std::vector<Index> box;
  auto* quad_cmd = app.add_subcommand("quad", "quadrature of node data, or an exactness table with --box");
  quad_spec.attach(*quad_cmd);
  auto* quad_data = quad_cmd->add_option("--data", data_path);
  auto* quad_box = quad_cmd->add_option("--box", box, "inclusive degree bounds")->delimiter(',');
  quad_data->excludes(quad_box);
  quad_cmd->add_option("--out", out_path);

  SpecFlags verify_spec;
  std::string suite = "all";
  bool weight_fault = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites; exit 0 iff all pass");
  verify_spec.attach(*verify_cmd);
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "orthogonality", "curve", "quadrature", "transform"}));
  verify_cmd->add_flag("--inject-weight-fault", weight_fault)->group("");
  verify_cmd->add_option("--out", out_path);

  std::vector<const char*> argv{"lisscheb"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  try {
    if (nodes_cmd->parsed()) {
      const auto nodes = build_node_set(nodes_spec.build());
      emit(format == "json" ? to_text(nodes_json(*nodes)) : nodes_csv(*nodes), out_path, out);
    } else if (curve_cmd->parsed()) {
      auto dv = validate_pairwise_coprime(std::span<const Index>(curve_n));
      const std::size_t d = dv.dim();
      if (epsilon == 0) epsilon = curve_variant == "shifted" ? 2 : 1;
      if (curve_kappa.empty()) curve_kappa.assign(d, 0);
      if (curve_u.empty()) curve_u.assign(d, 1);
      const LCCurve c(std::move(dv), epsilon, curve_kappa, curve_u);
      const auto pts = sample_curve(c, samples, t0, t1);
      std::string s = "t";
      for (std::size_t j = 0; j < d; ++j) s += ",x" + std::to_string(j + 1);
      s += "\n";
      const double step = (t1 - t0) / static_cast<double>(samples - 1);
      for (std::size_t q = 0; q < pts.size(); ++q) {
        const double t = q + 1 == pts.size() ? t1 : t0 + step * static_cast<double>(q);
        s += fmt(t);
        for (double x : pts[q]) s += "," + fmt(x);
        s += "\n";
      }
      emit(s, out_path, out);
    } else if (gamma_cmd->parsed()) {
      const auto gamma = build_gamma(gamma_spec.build());
      emit(format == "json" ? to_text(gamma_json(*gamma)) : gamma_csv(*gamma), out_path, out);
    } else if (interp_cmd->parsed()) {
      const auto nodes = build_node_set(interp_spec.build());
      const auto h = read_samples(nodes, data_path);
      const auto p = interpolate(h, mode == "naive" ? InterpMode::naive : InterpMode::fast);
      emit(to_text(expansion_json(p)), out_path, out);
    } else if (eval_cmd->parsed()) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(read_file(expansion_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("malformed expansion file: ") + e.what());
      }
      const auto p = expansion_from_json(j);
      const std::size_t d = p.spec().dim();
      std::string s;
      for (std::size_t k = 0; k < d; ++k) s += "x" + std::to_string(k + 1) + ",";
      s += "value\n";
      std::size_t line = 1;
      for (const auto& row : read_csv(points_path)) {
        ++line;
        if (row.size() != d) {
          throw ValidationError("points row " + std::to_string(line) + " has " + std::to_string(row.size()) +
                                " columns, expected " + std::to_string(d));
        }
        std::vector<double> x(d);
        for (std::size_t k = 0; k < d; ++k) {
          std::size_t used = 0;
          try {
            x[k] = std::stod(row[k], &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used == 0 || used != row[k].size()) throw ValidationError("not a number: '" + row[k] + "'");
        }
        for (double v : x) s += fmt(v) + ",";
        s += fmt(expansion_eval(p, x)) + "\n";
      }
      emit(s, out_path, out);
    } else if (quad_cmd->parsed()) {
      const auto spec = quad_spec.build();
      if (!box.empty()) {
        std::string s;
        for (std::size_t j = 0; j < spec.dim(); ++j) s += "g" + std::to_string(j + 1) + ",";
        s += "rule,truth,alias,is_alias,pass\n";
        for (const auto& r : exactness_table(spec, box)) {
          for (Index v : r.gamma.values()) s += std::to_string(v) + ",";
          s += fmt(r.rule) + "," + fmt(r.truth) + "," + fmt(r.alias) + "," + (r.is_alias ? "1" : "0") + "," +
               (r.pass ? "1" : "0") + "\n";
        }
        emit(s, out_path, out);
      } else {
        if (data_path.empty()) throw ValidationError("quad needs --data or --box");
        const auto nodes = build_node_set(spec);
        emit(fmt(integrate(read_samples(nodes, data_path))) + "\n", out_path, out);
      }
    } else if (verify_cmd->parsed()) {
      const auto nodes = build_node_set(verify_spec.build());
      std::vector<double> weights(nodes->weights().begin(), nodes->weights().end());
      if (weight_fault) weights[0] *= 1.001;
      const auto results = run_suites(*nodes, weights, parse_suite(suite));
      bool all = true;
      std::string s = "spec " + nodes->spec().describe() + "\n";
      for (const auto& r : results) {
        all = all && r.pass;
        s += r.suite + "/" + r.name + ": " + (r.pass ? "PASS" : "FAIL") + " (" + fmt(r.measure) +
             " <= " + short_fmt(r.tolerance) + ")\n";
      }
      s += std::string("overall: ") + (all ? "PASS" : "FAIL") + "\n";
      emit(s, out_path, out);
      return all ? kExitOk : kExitValidation;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CoprimalityViolation& e) {
    err << "error: " << describe_gcd(e, args) << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace lisscheb::cli
