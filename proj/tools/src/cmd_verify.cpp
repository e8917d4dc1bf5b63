#include <iostream>

#include "cata/oracle.hpp"
#include "commands.hpp"
#include "json_io.hpp"

namespace cata::cli {

int run_verify_bound_command(const VerifyBoundOptions& options) {
  BoundCheckConfig config;
  config.instances = options.count;
  config.n_min = options.n_min;
  config.n_max = options.n_max;
  config.seed = options.seed;
  config.safety_distance = options.safety_distance;
  config.position_sigma = options.position_sigma;
  config.speed = options.speed;
  config.auction_value_scale = options.auction_value_scale;

  const BoundCheckReport report = run_bound_check(config);

  json violations = json::array();
  for (const BoundViolation& v : report.violations) {
    violations.push_back({{"seed", v.seed},
                          {"n", v.n},
                          {"safety_distance", v.safety_distance},
                          {"ratio", v.ratio}});
  }

  const json config_echo = {
      {"count", config.instances},
      {"n_min", config.n_min},
      {"n_max", config.n_max},
      {"safety_distance", config.safety_distance.has_value()
                              ? json(*config.safety_distance)
                              : json(nullptr)},
      {"position_sigma", config.position_sigma},
      {"speed", config.speed}};

  const json output = {
      {"schema", 1},
      {"manifest", make_manifest("verify-bound", {{"seed", options.seed},
                                                  {"config", config_echo}})},
      {"bound", kGuaranteedRatio},
      {"slack", kRatioSlack},
      {"instances", report.instances},
      {"min_ratio", report.min_ratio},
      {"max_ratio", report.max_ratio},
      {"mean_ratio", report.mean_ratio},
      {"violation_count", violations.size()},
      {"violations", std::move(violations)}};

  const std::string text = output.dump(2) + "\n";
  if (options.output_path.empty()) {
    std::cout << text;
  } else {
    save_text(options.output_path, text);
  }

  if (!report.violations.empty()) {
    std::cerr << "verify-bound: " << report.violations.size() << " of "
              << report.instances
              << " instances fell below the guaranteed ratio\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace cata::cli
