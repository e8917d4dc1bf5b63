#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cata/sim.hpp"

namespace cata::cli {

// Exit codes shared by every subcommand. Parse failures inside CLI11 are
// mapped to kExitInput by main.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitViolation = 4;

struct AssignOptions {
  std::string world_path;  // exactly one of world_path / setup_path
  std::string setup_path;
  std::uint64_t seed = 0;
  std::string algorithm = "cata";
  std::optional<double> initial_safety_distance;
  std::optional<double> min_safety_distance;
  double horizon_decay = 0.8;
  std::optional<int> max_rounds;
  double speed = 1.0;
  std::string output_path;  // empty: stdout
};
int run_assign_command(const AssignOptions& options);

struct SimulateOptions {
  std::string assignment_path;
  SimConfig sim;
  std::string output_path;  // empty: stdout
  std::string trace_path;   // empty: no trace
};
int run_simulate_command(const SimulateOptions& options);

struct BatchOptions {
  std::string spec_path;
  std::string out_dir;
  int jobs = 1;
  bool resume = false;
};
int run_batch_command(const BatchOptions& options);

struct VerifyBoundOptions {
  int count = 500;
  int n_min = 2;
  int n_max = 7;
  std::uint64_t seed = 0;
  std::optional<double> safety_distance;
  double position_sigma = 4.5;
  double speed = 1.0;
  double auction_value_scale = 1.0;
  std::string output_path;  // empty: stdout
};
int run_verify_bound_command(const VerifyBoundOptions& options);

}  // namespace cata::cli
