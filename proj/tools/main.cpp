#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "levytail/errors.hpp"
#include "levytail/model_spec.hpp"

namespace {

using levytail::cli::RunConfig;

struct Flag {
  const char* name;
  const char* help;
};

const std::vector<Flag> kFlags = {
    {"model", "model spec or path to a model/config file"},
    {"config", "key = value config file; flags override it"},
    {"eps", "cutoff eps"},
    {"alpha", "class exponent alpha (constants)"},
    {"M", "class constant M (constants)"},
    {"eps-grid", "cutoffs: lo:hi:points (log-spaced) or a comma list"},
    {"t", "time t"},
    {"t-grid", "times: lo:hi:points (log-spaced) or a comma list"},
    {"points", "points per validation grid when no t-grid is given"},
    {"n", "Monte Carlo sample size"},
    {"seed", "master seed"},
    {"shards", "worker threads for Monte Carlo"},
    {"confidence", "confidence level of the intervals"},
    {"ci", "wilson or clopper_pearson"},
    {"truth", "closed or mc"},
    {"theorem", "auto|ps1|teo1|ps2|lambda2bis|lambda2|corollary (comma list for validate)"},
    {"quantity", "increment, small_jumps or small_jumps_drift"},
    {"lipschitz-M", "enlarged class constant for lambda2"},
    {"jump-budget", "expected jumps per sample beyond the inner cutoff"},
    {"bias-budget", "certified simulation bias per point"},
    {"delta-scale", "inner cutoff as a multiple of (t M)^(1/alpha)"},
    {"gaussian", "true to add the Gaussian small-jump refinement"},
    {"slope-window", "lo:hi accepted slope range for rate"},
    {"out", "output path (default stdout)"},
    {"format", "csv or json"},
};

struct Sub {
  CLI::App* app;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string corrupt;
  CLI::Option* corrupt_opt = nullptr;
};

void add_flags(Sub& s) {
  for (const auto& f : kFlags) s.options[f.name] = s.app->add_option(std::string("--") + f.name, s.values[f.name], f.help);
  s.corrupt_opt = s.app->add_option("--corrupt", s.corrupt,
                                    "scale constants for the validator self-test: NAME=FACTOR, FACTOR, or none for all/100")
                      ->expected(0, 1);
}

RunConfig merge(const Sub& s) {
  RunConfig cfg;
  auto cfg_opt = s.options.at("config");
  if (cfg_opt->count() > 0) cfg = levytail::read_config_file(s.values.at("config"));
  for (const auto& [name, opt] : s.options) {
    if (opt->count() > 0 && name != "config") cfg[name] = s.values.at(name);
  }
  if (s.corrupt_opt->count() > 0) cfg["corrupt"] = s.corrupt;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"levytail: small-time tail bounds for Levy processes"};
  app.require_subcommand(1);
  std::map<std::string, std::pair<Sub, int (*)(const RunConfig&)>> subs;
  const std::vector<std::tuple<std::string, std::string, int (*)(const RunConfig&)>> table = {
      {"functionals", "lambda, sigma2 and b over a cutoff grid (CSV)", levytail::cli::cmd_functionals},
      {"bound", "bound on |P(|X_t|>eps) - lambda_eps t| or a small-jump tail (JSON)", levytail::cli::cmd_bound},
      {"validate", "check bound domination against closed-form or MC truth", levytail::cli::cmd_validate},
      {"rate", "residual curve and log-log rate fit", levytail::cli::cmd_rate},
      {"simulate", "Monte Carlo tail probability with confidence interval (JSON)", levytail::cli::cmd_simulate},
      {"constants", "constants of the explicit bounds for one alpha (JSON)", levytail::cli::cmd_constants},
  };
  for (const auto& [name, help, fn] : table) {
    Sub s;
    s.app = app.add_subcommand(name, help);
    subs.emplace(name, std::make_pair(std::move(s), fn));
  }
  for (auto& [name, entry] : subs) add_flags(entry.first);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : levytail::cli::kConfig;
  }
  for (auto& [name, entry] : subs) {
    if (!entry.first.app->parsed()) continue;
    RunConfig cfg;
    try {
      cfg = merge(entry.first);
    } catch (const levytail::LevyError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return levytail::cli::kConfig;
    }
    return levytail::cli::run_guarded(entry.second, cfg);
  }
  return levytail::cli::kConfig;
}
