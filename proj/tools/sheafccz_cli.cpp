// sheafccz build | verify | params --config run.json
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or config error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "sheafccz/errors.hpp"
#include "sheafccz/pipeline.hpp"

using namespace sheafccz;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string suite = "all";
  std::string out;
  std::string format = "text";
};

void emit(const Options& opt, const json& j, const char* file, const std::string& text) {
  if (!opt.out.empty()) {
    std::filesystem::create_directories(opt.out);
    std::ofstream(std::filesystem::path(opt.out) / file) << j.dump(2) << '\n';
  }
  if (opt.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string verify_text(const json& report) {
  std::string s;
  const auto& suites = report.at("suites");
  for (const auto& name : suite_names()) {
    if (!suites.contains(name)) continue;
    const auto& r = suites.at(name);
    s += name + ": ";
    if (r.contains("skipped"))
      s += "skipped (" + r.at("skipped").get<std::string>() + ")";
    else
      s += r.at("pass").get<bool>() ? "PASS" : "FAIL";
    s += '\n';
  }
  s += std::string("overall: ") + (report.at("pass").get<bool>() ? "PASS" : "FAIL") + '\n';
  return s;
}

std::string params_text(const json& p) {
  std::string s;
  for (const char* key : {"n", "k", "d_exact", "d_upper", "n_ccz", "w_ccz", "k_ccz_lb", "gamma_estimate"}) {
    const auto& e = p.at(key);
    s += std::string(key) + " = " + (e.at("value").is_null() ? "-" : e.at("value").dump()) + " [" +
         e.at("provenance").get<std::string>() + "]\n";
  }
  return s;
}

int run(const std::string& command, const Options& opt) {
  RunConfig cfg = load_config(opt.config);
  if (opt.seed) cfg.seed = cfg.distance.seed = cfg.subrank.seed = *opt.seed;
  if (opt.trials) cfg.trials = *opt.trials;
  const Instance inst = build_instance(cfg);

  if (command == "build") {
    const json summary = build_summary(cfg, inst);
    if (!opt.out.empty()) write_artifacts(cfg, inst, opt.out);
    if (opt.format == "json") {
      std::cout << summary.dump(2) << '\n';
    } else {
      std::cout << "cells " << summary.at("cells").dump() << "\ncochain dims " << summary.at("cochain_dims").dump()
                << "\nn = " << summary.at("n") << ", k = " << summary.at("k") << " (level " << cfg.level << ")\n";
    }
    return kPass;
  }
  if (command == "verify") {
    if (opt.suite != "all") {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), opt.suite) == names.end())
        throw ConfigError("unknown suite '" + opt.suite + "'");
    }
    const json report = run_verify(cfg, inst, opt.suite);
    emit(opt, report, "report.json", verify_text(report));
    return report.at("pass").get<bool>() ? kPass : kCheckFailed;
  }
  const json p = compute_params(cfg, inst);
  emit(opt, p, "params.json", params_text(p));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sheaf codes on cubical and simplicial complexes: build, verify, parameters"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "Run configuration (JSON, schema 1)")->required();
    sub->add_option("--seed", opt.seed, "Override the config seed");
    sub->add_option("--trials", opt.trials, "Override the config trial count");
    sub->add_option("--out", opt.out, "Directory for artifacts and reports");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto* build = app.add_subcommand("build", "Build complex, sheaf and CSS code; write artifacts");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  auto* params = app.add_subcommand("params", "Report code parameters with provenance");
  add_common(build);
  add_common(verify);
  add_common(params);
  verify->add_option("--suite", opt.suite, "dd-zero, axioms, acyclic, poincare, leibniz, ccz or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const IntegrityError& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
