#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "cayley/cayley_menger.hpp"
#include "cayley/distance_file.hpp"
#include "cayley/geometry.hpp"
#include "cayley/identities.hpp"
#include "cayley/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cayley::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    items.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return items;
}

inline nlohmann::json certificate_json(const Certificate& c) {
  nlohmann::json j = nlohmann::json::object();
  if (c.gamma) j["gamma"] = to_string(*c.gamma);
  if (c.delta) j["delta"] = to_string(*c.delta);
  return j;
}

inline std::string value_text(const Rational& v) { return to_string(v); }
inline std::string value_text(bool v) { return v ? "true" : "false"; }

struct UsageError {
  std::string message;
  const CLI::App* command;
};

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Cayley-Menger determinants, identity verification and distance-geometry predicates", "cayley"};
  app.require_subcommand(1, 1);

  std::string format = "text";
  std::optional<int> cap;
  int n = 0;
  int p = 0;
  int max_n = 5;
  std::string suites;
  std::string file;
  std::string taus;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "record"}));
  };
  auto add_cap = [&cap](CLI::App* cmd) {
    cmd->add_option("--cap", cap, "Override the symbolic dimension cap (default 6)")->check(CLI::PositiveNumber);
  };

  CLI::App* gamma_cmd = app.add_subcommand("gamma", "Print the Cayley-Menger determinant Gamma_n");
  gamma_cmd->add_option("-n", n, "Dimension n >= 1")->required();
  CLI::App* delta_cmd = app.add_subcommand("delta", "Print the (1,1)-minor Delta_n");
  delta_cmd->add_option("-n", n, "Dimension n >= 1")->required();
  CLI::App* lambda_cmd = app.add_subcommand("lambda", "Print the isosceles specialization Lambda_{n,p}");
  lambda_cmd->add_option("-n", n, "Dimension n >= 1")->required();
  lambda_cmd->add_option("-p", p, "Base dimension, 1 <= p <= n")->required();
  CLI::App* verify_cmd = app.add_subcommand("verify", "Verify the Cayley-Menger identities symbolically");
  verify_cmd->add_option("--max-n", max_n, "Largest n to verify (default 5)");
  verify_cmd->add_option("--suite", suites,
                         "Comma-separated subset of closed,heron,ptolemy,base,collapse,recurrence,homog,content,mod2,p1");
  for (CLI::App* cmd : {gamma_cmd, delta_cmd, lambda_cmd, verify_cmd}) {
    add_cap(cmd);
    add_format(cmd);
  }

  std::map<std::string, CLI::App*> geometry_cmds;
  const std::pair<const char*, const char*> geometry_specs[] = {
      {"volume", "Squared volume of the simplex"},
      {"realizable", "Cayley-Menger sign test for realizability"},
      {"degenerate", "Whether the points lie in a proper affine subspace"},
      {"circumradius", "Squared circumradius of the simplex"},
      {"cospherical", "Whether n+2 points lie on a common sphere or hyperplane"},
  };
  for (const auto& [name, description] : geometry_specs) {
    CLI::App* cmd = app.add_subcommand(name, description);
    cmd->add_option("FILE", file, "Distance-matrix document")->required();
    add_format(cmd);
    geometry_cmds[name] = cmd;
  }
  CLI::App* isosceles_cmd = app.add_subcommand("isosceles", "Squared volume of an isosceles tower over a base");
  isosceles_cmd->add_option("BASEFILE", file, "Distance-matrix document of the base simplex")->required();
  isosceles_cmd->add_option("--tau", taus, "Comma-separated apex distances T1,T2,...")->required();
  add_format(isosceles_cmd);

  auto usage = [&err](const std::string& message, const CLI::App* cmd) {
    err << "error: " << message << "\n" << cmd->help();
    return kExitUsage;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const CLI::App* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const CLI::App* target = &app;
    for (const CLI::App* sub : app.get_subcommands()) target = sub;
    return usage(e.what(), target);
  }

  const bool record = format == "record";
  CLI::App* cmd = app.get_subcommands().front();
  const std::string command = cmd->get_name();

  try {
    if (cap) {
      err << "warning: symbolic cap set to " << *cap << "; runtime and memory grow combinatorially with n\n";
    }
    CayleyMengerEngine engine(cap.value_or(CayleyMengerEngine::kDefaultCap));

    if (cmd == gamma_cmd || cmd == delta_cmd || cmd == lambda_cmd) {
      if (cmd == lambda_cmd && (p < 1 || p > n)) {
        return usage("lambda needs 1 <= p <= n (Lambda_{n,p} substitutes d_il -> t_l for p < l <= n); got n=" +
                         std::to_string(n) + " p=" + std::to_string(p),
                     cmd);
      }
      const Polynomial& poly = cmd == gamma_cmd   ? engine.gamma(n)
                               : cmd == delta_cmd ? engine.delta(n)
                                                  : engine.lambda(n, p);
      if (record) {
        nlohmann::json doc{{"command", command}, {"n", n}, {"polynomial", canonical_string(poly)}};
        if (cmd == lambda_cmd) doc["p"] = p;
        out << doc.dump() << "\n";
      } else {
        write_canonical(out, poly);
        out << "\n";
      }
      return kExitOk;
    }

    if (cmd == verify_cmd) {
      SuiteOptions options;
      options.max_n = max_n;
      if (!suites.empty()) {
        options.suites.clear();
        for (const std::string& name : detail::split_list(suites)) {
          try {
            options.suites.insert(parse_suite(name));
          } catch (const Error& e) {
            return usage(std::string("--suite: ") + e.what(), cmd);
          }
        }
      }
      const VerificationReport report = run_suite(engine, options);
      if (record) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << to_lines(report);
      }
      err << report.checks.size() << " checks, " << report.failures() << " failed\n";
      return report.passed() ? kExitOk : kExitFail;
    }

    const DistanceMatrix dm = read_distance_file(file);
    auto emit = [&](const auto& result) {
      if (record) {
        nlohmann::json doc{{"command", command},
                           {"value", detail::value_text(result.value)},
                           {"certificate", detail::certificate_json(result.certificate)}};
        out << doc.dump() << "\n";
      } else {
        out << detail::value_text(result.value) << "\n";
      }
      return kExitOk;
    };

    if (cmd == geometry_cmds["volume"]) return emit(volume_squared(dm));
    if (cmd == geometry_cmds["realizable"]) return emit(is_realizable(dm));
    if (cmd == geometry_cmds["degenerate"]) return emit(is_degenerate(dm));
    if (cmd == geometry_cmds["circumradius"]) return emit(circumradius_squared(dm));
    if (cmd == geometry_cmds["cospherical"]) return emit(is_cospherical(dm));
    if (cmd == isosceles_cmd) {
      std::vector<Rational> tau_values;
      for (const std::string& item : detail::split_list(taus)) tau_values.push_back(parse_rational(item));
      return emit(isosceles_volume_squared(dm, tau_values));
    }
    return usage("unhandled command", cmd);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cayley::cli
