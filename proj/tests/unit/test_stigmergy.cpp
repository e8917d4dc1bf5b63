#include <algorithm>
#include <vector>

#include "cata/stigmergy.hpp"
#include "doctest.h"

using namespace cata;

TEST_CASE("assignment set is injective both ways") {
  AssignmentSet set;
  set.insert(3, 7);
  CHECK(set.task_of(3) == 7);
  CHECK(set.robot_of(7) == 3);
  CHECK(!set.task_of(4).has_value());
  CHECK_THROWS_AS(set.insert(3, 9), protocol_error);
  CHECK_THROWS_AS(set.insert(5, 7), protocol_error);
  CHECK(set.size() == 1);
}

TEST_CASE("higher bid wins the slot, ties go to the lower robot id") {
  StigmergyStore store;
  store.begin_round();
  store.put_bid({2, 5.0, 10});
  store.put_bid({1, 4.0, 11});
  CHECK(store.global_bid()->robot_id == 2);

  store.put_bid({7, 5.0, 12});  // equal bid, higher id: rejected
  CHECK(store.global_bid()->robot_id == 2);
  store.put_bid({0, 5.0, 13});  // equal bid, lower id: accepted
  CHECK(store.global_bid()->robot_id == 0);
  CHECK(store.global_bid()->task_id == 13);
}

TEST_CASE("the surviving bid does not depend on write order") {
  std::vector<BidTuple> bids = {
      {0, 3.0, 5}, {1, 9.0, 6}, {2, 9.0, 7}, {3, 1.0, 8}, {4, 9.0, 9}};
  std::sort(bids.begin(), bids.end(),
            [](const BidTuple& a, const BidTuple& b) {
              return a.robot_id < b.robot_id;
            });
  do {
    StigmergyStore store;
    store.begin_round();
    for (const BidTuple& bid : bids) store.put_bid(bid);
    const BidTuple winner = *store.global_bid();
    CHECK(winner.robot_id == 1);  // max bid 9.0, lowest id among the tied
    CHECK(winner.bid_value == 9.0);
    CHECK(winner.task_id == 6);
  } while (std::next_permutation(
      bids.begin(), bids.end(), [](const BidTuple& a, const BidTuple& b) {
        return a.robot_id < b.robot_id;
      }));
}

TEST_CASE("committed winners build the assignment set") {
  StigmergyStore store;
  CHECK(store.read_assignments().empty());

  store.begin_round();
  store.put_bid({0, 5.0, 2});
  store.commit_winner(*store.global_bid());

  store.begin_round();
  CHECK(!store.global_bid().has_value());
  store.put_bid({1, 4.0, 3});
  store.commit_winner(*store.global_bid());

  const AssignmentSet set = store.read_assignments();
  CHECK(set.size() == 2);
  CHECK(set.task_of(0) == 2);
  CHECK(set.task_of(1) == 3);
}

TEST_CASE("double commits are protocol errors") {
  StigmergyStore store;
  store.commit_winner({0, 5.0, 2});
  CHECK_THROWS_AS(store.commit_winner({0, 4.0, 3}), protocol_error);
  CHECK_THROWS_AS(store.commit_winner({1, 4.0, 2}), protocol_error);
}

TEST_CASE("version counters only grow, including across rounds") {
  StigmergyStore store;
  CHECK(store.version_of("bid") == 0);

  store.begin_round();
  store.put_bid({0, 1.0, 0});
  const auto v1 = store.version_of("bid");
  store.put_bid({1, 2.0, 1});
  const auto v2 = store.version_of("bid");
  CHECK(v2 > v1);
  store.put_bid({2, 0.5, 2});  // rejected: no version bump
  CHECK(store.version_of("bid") == v2);

  store.begin_round();  // slot cleared, counter kept
  CHECK(store.version_of("bid") == v2);
  store.put_bid({3, 0.1, 3});
  CHECK(store.version_of("bid") > v2);
}
