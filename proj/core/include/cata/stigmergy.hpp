#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace cata {

// Raised when a write would corrupt the shared state (duplicate assignment,
// winner committed twice, and the like).
struct protocol_error : std::logic_error {
  using std::logic_error::logic_error;
};

struct BidTuple {
  int robot_id = -1;
  double bid_value = 0.0;
  int task_id = -1;

  bool operator==(const BidTuple&) const = default;
};

// Conflict rule for concurrent writes of the round's global bid: the higher
// bid survives; equal bids resolve to the lower robot id. The result is
// independent of write order, which is what lets every robot publish "its
// candidate won" and still converge on one winner.
inline bool outbids(const BidTuple& challenger, const BidTuple& holder) {
  if (challenger.bid_value != holder.bid_value) {
    return challenger.bid_value > holder.bid_value;
  }
  return challenger.robot_id < holder.robot_id;
}

// Robot -> task map that is injective in both directions.
class AssignmentSet {
 public:
  std::optional<int> task_of(int robot_id) const;
  std::optional<int> robot_of(int task_id) const;
  bool robot_assigned(int robot_id) const;
  bool task_assigned(int task_id) const;

  // Throws protocol_error if the robot or the task already appears.
  void insert(int robot_id, int task_id);

  std::size_t size() const { return robot_to_task_.size(); }
  bool empty() const { return robot_to_task_.empty(); }

  // Sorted by robot id; the canonical iteration order everywhere.
  const std::map<int, int>& by_robot() const { return robot_to_task_; }

  bool operator==(const AssignmentSet&) const = default;

 private:
  std::map<int, int> robot_to_task_;
  std::map<int, int> task_to_robot_;
};

// In-memory stand-in for a replicated (key, value) tuple store. One slot per
// round holds the contended global bid; committed assignments live under one
// key per winning robot. Version counters only ever grow, including across
// round resets of the bid slot.
class StigmergyStore {
 public:
  // Clears the global-bid slot for a fresh auction round.
  void begin_round();

  // Applies the conflict rule against the current slot holder.
  void put_bid(const BidTuple& candidate);

  std::optional<BidTuple> global_bid() const;

  // Records the round winner's assignment entry. Throws protocol_error if the
  // robot already holds a task or the task already has an owner.
  void commit_winner(const BidTuple& winner);

  AssignmentSet read_assignments() const;

  // 0 for keys never written.
  std::uint64_t version_of(const std::string& key) const;

 private:
  struct Entry {
    std::variant<BidTuple, int> value;
    std::uint64_t version = 0;
    int writer = -1;
  };

  void write(const std::string& key, std::variant<BidTuple, int> value,
             int writer);

  std::map<std::string, Entry> entries_;
  std::map<std::string, std::uint64_t> versions_;
};

}  // namespace cata
