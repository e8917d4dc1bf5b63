#include <iostream>
#include <stdexcept>
#include <string>

#include "cata/sim.hpp"
#include "commands.hpp"
#include "json_io.hpp"

namespace cata::cli {

int run_simulate_command(const SimulateOptions& options) {
  const json artifact = load_json(options.assignment_path);
  if (!artifact.is_object() || artifact.value("schema", 0) != 1 ||
      !artifact.contains("world") || !artifact.contains("assignment")) {
    throw std::invalid_argument("simulate: " + options.assignment_path +
                                " is not an assignment artifact");
  }

  const World world = world_from_json(artifact.at("world"));
  AssignmentSet assignments;
  for (const json& pair : artifact.at("assignment").at("pairs")) {
    assignments.insert(pair.at("robot").get<int>(),
                       pair.at("task").get<int>());
  }

  TrialSim sim(world, assignments, options.sim);

  std::string trace;
  StepCallback on_step;
  if (!options.trace_path.empty()) {
    trace = "step,robot_id,x,y,avoidance,maintain\n";
    on_step = [&trace](int step, const std::vector<RobotState>& robots,
                       const std::vector<StepFlags>& flags) {
      for (std::size_t i = 0; i < robots.size(); ++i) {
        trace += std::to_string(step);
        trace += ',';
        trace += std::to_string(robots[i].id);
        trace += ',';
        trace += csv_double(robots[i].position.x);
        trace += ',';
        trace += csv_double(robots[i].position.y);
        trace += ',';
        trace += flags[i].avoiding ? '1' : '0';
        trace += ',';
        trace += std::to_string(flags[i].maintaining);
        trace += '\n';
      }
    };
  }

  const TrialMetrics metrics = sim.run(on_step);
  if (!options.trace_path.empty()) {
    save_text(options.trace_path, trace);
  }

  json final_positions = json::array();
  for (const RobotState& robot : sim.robots()) {
    final_positions.push_back({{"id", robot.id},
                               {"x", robot.position.x},
                               {"y", robot.position.y},
                               {"arrived", robot.arrived}});
  }

  const json output = {
      {"schema", 1},
      {"manifest",
       make_manifest("simulate", {{"input", options.assignment_path},
                                  {"sim", sim_to_json(options.sim)}})},
      {"metrics",
       {{"completion_steps", metrics.completion_steps},
        {"deadlock", metrics.deadlock},
        {"avoidance_episodes", metrics.avoidance_count},
        {"maintain_one_episodes", metrics.maintain_one_count},
        {"maintain_multi_episodes", metrics.maintain_multi_count},
        {"min_separation", metrics.min_separation_observed}}},
      {"final_positions", std::move(final_positions)}};

  const std::string text = output.dump(2) + "\n";
  if (options.output_path.empty()) {
    std::cout << text;
  } else {
    save_text(options.output_path, text);
  }
  return kExitOk;
}

}  // namespace cata::cli
