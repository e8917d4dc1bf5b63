#include "cata/stigmergy.hpp"

namespace cata {

namespace {
const std::string kBidKey = "bid";
std::string assignment_key(int robot_id) {
  return "assign/" + std::to_string(robot_id);
}
}  // namespace

std::optional<int> AssignmentSet::task_of(int robot_id) const {
  auto it = robot_to_task_.find(robot_id);
  if (it == robot_to_task_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> AssignmentSet::robot_of(int task_id) const {
  auto it = task_to_robot_.find(task_id);
  if (it == task_to_robot_.end()) return std::nullopt;
  return it->second;
}

bool AssignmentSet::robot_assigned(int robot_id) const {
  return robot_to_task_.count(robot_id) > 0;
}

bool AssignmentSet::task_assigned(int task_id) const {
  return task_to_robot_.count(task_id) > 0;
}

void AssignmentSet::insert(int robot_id, int task_id) {
  if (robot_assigned(robot_id)) {
    throw protocol_error("assignment: robot " + std::to_string(robot_id) +
                         " already holds a task");
  }
  if (task_assigned(task_id)) {
    throw protocol_error("assignment: task " + std::to_string(task_id) +
                         " already has an owner");
  }
  robot_to_task_.emplace(robot_id, task_id);
  task_to_robot_.emplace(task_id, robot_id);
}

void StigmergyStore::begin_round() { entries_.erase(kBidKey); }

void StigmergyStore::write(const std::string& key,
                           std::variant<BidTuple, int> value, int writer) {
  const std::uint64_t version = ++versions_[key];
  entries_[key] = Entry{std::move(value), version, writer};
}

void StigmergyStore::put_bid(const BidTuple& candidate) {
  auto it = entries_.find(kBidKey);
  if (it == entries_.end() ||
      outbids(candidate, std::get<BidTuple>(it->second.value))) {
    write(kBidKey, candidate, candidate.robot_id);
  }
}

std::optional<BidTuple> StigmergyStore::global_bid() const {
  auto it = entries_.find(kBidKey);
  if (it == entries_.end()) return std::nullopt;
  return std::get<BidTuple>(it->second.value);
}

void StigmergyStore::commit_winner(const BidTuple& winner) {
  // Validate against the committed entries before touching anything.
  read_assignments().insert(winner.robot_id, winner.task_id);
  write(assignment_key(winner.robot_id), winner.task_id, winner.robot_id);
}

AssignmentSet StigmergyStore::read_assignments() const {
  AssignmentSet out;
  const std::string prefix = "assign/";
  for (auto it = entries_.lower_bound(prefix);
       it != entries_.end() && it->first.compare(0, prefix.size(), prefix) == 0;
       ++it) {
    out.insert(it->second.writer, std::get<int>(it->second.value));
  }
  return out;
}

std::uint64_t StigmergyStore::version_of(const std::string& key) const {
  auto it = versions_.find(key);
  return it == versions_.end() ? 0 : it->second;
}

}  // namespace cata
