#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>

#include "cata/auction.hpp"
#include "cata/scenarios.hpp"
#include "cata/sim.hpp"
#include "cata/world.hpp"
#include "json.hpp"

namespace cata::cli {

using nlohmann::json;

// Filesystem trouble. Parse and validation problems throw
// std::invalid_argument (or a json exception) instead, so the two map to
// different exit codes.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

// Rejects unknown keys so a typoed option fails instead of silently falling
// back to a default.
void require_keys(const json& object,
                  std::initializer_list<const char*> allowed,
                  const std::string& context);

json world_to_json(const World& world);
World world_from_json(const json& j);

WorldSpec setup_from_json(const json& j);
json setup_to_json(const WorldSpec& spec);

AuctionConfig auction_from_json(const json& j);
json resolved_auction_to_json(const ResolvedAuctionConfig& config);

SimConfig sim_from_json(const json& j);
json sim_to_json(const SimConfig& config);

BatchSpec batch_spec_from_json(const json& j);
json batch_spec_to_json(const BatchSpec& spec);

json quartiles_to_json(const Quartiles& q);

// Shared artifact header: tool name, version, and the subcommand. Callers
// merge in their own fields (seeds, resolved configs, input sources).
// Deliberately carries no timestamps; artifacts must be byte reproducible.
json make_manifest(const std::string& command, const json& extras);

std::optional<AuctionTermination> termination_from_string(
    const std::string& name);

// Shortest round-trip formatting for CSV cells.
std::string csv_double(double value);

}  // namespace cata::cli
