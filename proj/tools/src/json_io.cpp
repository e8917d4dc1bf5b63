#include "json_io.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <vector>

#ifndef CATA_VERSION
#define CATA_VERSION "0.0.0"
#endif

namespace cata::cli {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw io_error("cannot open " + path);
  }
  return json::parse(in);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw io_error("cannot write " + path);
  }
  out << text;
  if (!out.flush()) {
    throw io_error("short write to " + path);
  }
}

void require_keys(const json& object,
                  std::initializer_list<const char*> allowed,
                  const std::string& context) {
  if (!object.is_object()) {
    throw std::invalid_argument(context + ": expected an object");
  }
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::invalid_argument(context + ": unknown key \"" + item.key() +
                                  "\"");
    }
  }
}

namespace {

Vec2 vec2_from_json(const json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw std::invalid_argument(context + ": expected [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json vec2_to_json(const Vec2& v) { return json::array({v.x, v.y}); }

}  // namespace

json world_to_json(const World& world) {
  json robots = json::array();
  for (const Robot& r : world.robots) {
    robots.push_back(
        {{"id", r.id}, {"x", r.position.x}, {"y", r.position.y},
         {"radius", r.radius}});
  }
  json tasks = json::array();
  for (const Task& t : world.tasks) {
    tasks.push_back({{"id", t.id},
                     {"x", t.location.x},
                     {"y", t.location.y},
                     {"value", t.inherent_value},
                     {"discount", t.discount}});
  }
  return {{"robots", std::move(robots)}, {"tasks", std::move(tasks)}};
}

World world_from_json(const json& j) {
  require_keys(j, {"robots", "tasks"}, "world");
  std::vector<Robot> robots;
  for (const json& r : j.at("robots")) {
    require_keys(r, {"id", "x", "y", "radius"}, "robot");
    robots.push_back({r.at("id").get<int>(),
                      {r.at("x").get<double>(), r.at("y").get<double>()},
                      r.value("radius", 0.25)});
  }
  std::vector<Task> tasks;
  for (const json& t : j.at("tasks")) {
    require_keys(t, {"id", "x", "y", "value", "discount"}, "task");
    tasks.push_back({t.at("id").get<int>(),
                     {t.at("x").get<double>(), t.at("y").get<double>()},
                     t.value("value", 100.0), t.value("discount", 0.95)});
  }
  return make_world(std::move(robots), std::move(tasks));
}

WorldSpec setup_from_json(const json& j) {
  require_keys(j,
               {"name", "robots", "tasks", "formation_center", "robot_radius",
                "task_value", "task_discount"},
               "setup");
  WorldSpec spec;
  spec.name = j.value("name", spec.name);

  const json& robots = j.at("robots");
  const std::string robot_type = robots.at("type").get<std::string>();
  if (robot_type == "grid") {
    require_keys(robots, {"type", "rows", "cols", "spacing"}, "robots");
    GridLayout grid;
    grid.rows = robots.at("rows").get<int>();
    grid.cols = robots.at("cols").get<int>();
    grid.spacing = robots.value("spacing", grid.spacing);
    spec.robots = grid;
  } else if (robot_type == "line") {
    require_keys(robots, {"type", "count", "spacing"}, "robots");
    LineLayout line;
    line.count = robots.at("count").get<int>();
    line.spacing = robots.value("spacing", line.spacing);
    spec.robots = line;
  } else if (robot_type == "explicit") {
    require_keys(robots, {"type", "positions"}, "robots");
    ExplicitRobots fixed;
    for (const json& p : robots.at("positions")) {
      fixed.positions.push_back(vec2_from_json(p, "robot position"));
    }
    spec.robots = fixed;
  } else {
    throw std::invalid_argument("setup: unknown robot layout \"" +
                                robot_type + "\"");
  }

  const json& tasks = j.at("tasks");
  const std::string task_type = tasks.at("type").get<std::string>();
  if (task_type == "normal") {
    require_keys(tasks, {"type", "count", "sigma_x", "sigma_y", "center"},
                 "tasks");
    NormalTasks cloud;
    cloud.count = tasks.at("count").get<int>();
    cloud.sigma_x = tasks.value("sigma_x", cloud.sigma_x);
    cloud.sigma_y = tasks.value("sigma_y", cloud.sigma_y);
    if (tasks.contains("center")) {
      cloud.center = vec2_from_json(tasks.at("center"), "task center");
    }
    spec.tasks = cloud;
  } else if (task_type == "explicit") {
    require_keys(tasks, {"type", "positions"}, "tasks");
    ExplicitTasks fixed;
    for (const json& p : tasks.at("positions")) {
      fixed.positions.push_back(vec2_from_json(p, "task position"));
    }
    spec.tasks = fixed;
  } else {
    throw std::invalid_argument("setup: unknown task layout \"" + task_type +
                                "\"");
  }

  if (j.contains("formation_center")) {
    spec.formation_center =
        vec2_from_json(j.at("formation_center"), "formation_center");
  }
  spec.robot_radius = j.value("robot_radius", spec.robot_radius);
  spec.task_value = j.value("task_value", spec.task_value);
  spec.task_discount = j.value("task_discount", spec.task_discount);
  return spec;
}

json setup_to_json(const WorldSpec& spec) {
  json robots;
  if (const auto* grid = std::get_if<GridLayout>(&spec.robots)) {
    robots = {{"type", "grid"},
              {"rows", grid->rows},
              {"cols", grid->cols},
              {"spacing", grid->spacing}};
  } else if (const auto* line = std::get_if<LineLayout>(&spec.robots)) {
    robots = {{"type", "line"},
              {"count", line->count},
              {"spacing", line->spacing}};
  } else {
    json positions = json::array();
    for (const Vec2& p : std::get<ExplicitRobots>(spec.robots).positions) {
      positions.push_back(vec2_to_json(p));
    }
    robots = {{"type", "explicit"}, {"positions", std::move(positions)}};
  }

  json tasks;
  if (const auto* cloud = std::get_if<NormalTasks>(&spec.tasks)) {
    tasks = {{"type", "normal"},
             {"count", cloud->count},
             {"sigma_x", cloud->sigma_x},
             {"sigma_y", cloud->sigma_y},
             {"center", vec2_to_json(cloud->center)}};
  } else {
    json positions = json::array();
    for (const Vec2& p : std::get<ExplicitTasks>(spec.tasks).positions) {
      positions.push_back(vec2_to_json(p));
    }
    tasks = {{"type", "explicit"}, {"positions", std::move(positions)}};
  }

  return {{"name", spec.name},
          {"robots", std::move(robots)},
          {"tasks", std::move(tasks)},
          {"formation_center", vec2_to_json(spec.formation_center)},
          {"robot_radius", spec.robot_radius},
          {"task_value", spec.task_value},
          {"task_discount", spec.task_discount}};
}

AuctionConfig auction_from_json(const json& j) {
  require_keys(j,
               {"initial_safety_distance", "min_safety_distance",
                "horizon_decay", "max_rounds", "speed", "default_task_value",
                "default_task_discount"},
               "auction");
  AuctionConfig config;
  if (j.contains("initial_safety_distance") &&
      !j.at("initial_safety_distance").is_null()) {
    config.initial_safety_distance =
        j.at("initial_safety_distance").get<double>();
  }
  if (j.contains("min_safety_distance") &&
      !j.at("min_safety_distance").is_null()) {
    config.min_safety_distance = j.at("min_safety_distance").get<double>();
  }
  config.horizon_decay = j.value("horizon_decay", config.horizon_decay);
  if (j.contains("max_rounds") && !j.at("max_rounds").is_null()) {
    config.max_rounds = j.at("max_rounds").get<int>();
  }
  config.speed = j.value("speed", config.speed);
  config.default_task_value =
      j.value("default_task_value", config.default_task_value);
  config.default_task_discount =
      j.value("default_task_discount", config.default_task_discount);
  return config;
}

json resolved_auction_to_json(const ResolvedAuctionConfig& config) {
  return {{"initial_safety_distance", config.initial_safety_distance},
          {"min_safety_distance", config.min_safety_distance},
          {"horizon_decay", config.horizon_decay},
          {"max_rounds", config.max_rounds},
          {"speed", config.speed}};
}

SimConfig sim_from_json(const json& j) {
  require_keys(j,
               {"time_step", "max_speed", "safety_zone_radius",
                "maneuver_cone_distance", "arrival_threshold", "max_steps",
                "stagnation_window", "repulsion_gain"},
               "sim");
  SimConfig config;
  config.time_step = j.value("time_step", config.time_step);
  config.max_speed = j.value("max_speed", config.max_speed);
  config.safety_zone_radius =
      j.value("safety_zone_radius", config.safety_zone_radius);
  if (j.contains("maneuver_cone_distance") &&
      !j.at("maneuver_cone_distance").is_null()) {
    config.maneuver_cone_distance =
        j.at("maneuver_cone_distance").get<double>();
  }
  config.arrival_threshold =
      j.value("arrival_threshold", config.arrival_threshold);
  config.max_steps = j.value("max_steps", config.max_steps);
  config.stagnation_window =
      j.value("stagnation_window", config.stagnation_window);
  config.repulsion_gain = j.value("repulsion_gain", config.repulsion_gain);
  return config;
}

json sim_to_json(const SimConfig& config) {
  return {{"time_step", config.time_step},
          {"max_speed", config.max_speed},
          {"safety_zone_radius", config.safety_zone_radius},
          {"maneuver_cone_distance",
           config.maneuver_cone_distance.value_or(config.safety_zone_radius)},
          {"arrival_threshold", config.arrival_threshold},
          {"max_steps", config.max_steps},
          {"stagnation_window", config.stagnation_window},
          {"repulsion_gain", config.repulsion_gain}};
}

BatchSpec batch_spec_from_json(const json& j) {
  require_keys(j,
               {"schema", "name", "master_seed", "trials", "algorithms",
                "auction", "sim", "setups"},
               "batch spec");
  if (j.contains("schema") && j.at("schema").get<int>() != 1) {
    throw std::invalid_argument("batch spec: unsupported schema");
  }
  BatchSpec spec;
  spec.name = j.value("name", spec.name);
  spec.master_seed = j.value("master_seed", spec.master_seed);
  spec.trials = j.value("trials", spec.trials);
  if (j.contains("algorithms")) {
    spec.algorithms = j.at("algorithms").get<std::vector<std::string>>();
  } else {
    spec.algorithms = {"cata", "cbaa"};
  }
  if (j.contains("auction")) {
    spec.auction = auction_from_json(j.at("auction"));
  }
  if (j.contains("sim")) {
    spec.sim = sim_from_json(j.at("sim"));
  }
  if (!j.contains("setups") || !j.at("setups").is_array() ||
      j.at("setups").empty()) {
    throw std::invalid_argument("batch spec: needs a non-empty setups array");
  }
  for (const json& setup : j.at("setups")) {
    spec.setups.push_back(setup_from_json(setup));
  }
  return spec;
}

json batch_spec_to_json(const BatchSpec& spec) {
  json setups = json::array();
  for (const WorldSpec& setup : spec.setups) {
    setups.push_back(setup_to_json(setup));
  }
  // The auction block only echoes explicit choices; resolved values are per
  // world and land in each artifact instead.
  json auction = json::object();
  if (spec.auction.initial_safety_distance.has_value()) {
    auction["initial_safety_distance"] = *spec.auction.initial_safety_distance;
  }
  if (spec.auction.min_safety_distance.has_value()) {
    auction["min_safety_distance"] = *spec.auction.min_safety_distance;
  }
  if (spec.auction.max_rounds.has_value()) {
    auction["max_rounds"] = *spec.auction.max_rounds;
  }
  auction["horizon_decay"] = spec.auction.horizon_decay;
  auction["speed"] = spec.auction.speed;
  auction["default_task_value"] = spec.auction.default_task_value;
  auction["default_task_discount"] = spec.auction.default_task_discount;

  return {{"schema", 1},
          {"name", spec.name},
          {"master_seed", spec.master_seed},
          {"trials", spec.trials},
          {"algorithms", spec.algorithms},
          {"auction", std::move(auction)},
          {"sim", sim_to_json(spec.sim)},
          {"setups", std::move(setups)}};
}

json quartiles_to_json(const Quartiles& q) {
  return {{"min", q.min},   {"q1", q.q1},     {"median", q.median},
          {"q3", q.q3},     {"max", q.max},   {"mean", q.mean},
          {"count", q.count}};
}

json make_manifest(const std::string& command, const json& extras) {
  json manifest = {
      {"tool", "cata"}, {"version", CATA_VERSION}, {"command", command}};
  manifest.update(extras);
  return manifest;
}

std::optional<AuctionTermination> termination_from_string(
    const std::string& name) {
  if (name == "complete") return AuctionTermination::complete;
  if (name == "floor_stalled") return AuctionTermination::floor_stalled;
  if (name == "round_limit") return AuctionTermination::round_limit;
  return std::nullopt;
}

std::string csv_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

}  // namespace cata::cli
