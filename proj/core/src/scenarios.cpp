#include "cata/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace cata {

namespace {

std::vector<Vec2> layout_positions(const RobotLayout& layout,
                                   const Vec2& center) {
  std::vector<Vec2> out;
  if (const auto* grid = std::get_if<GridLayout>(&layout)) {
    if (grid->rows < 1 || grid->cols < 1 || !(grid->spacing > 0.0)) {
      throw std::invalid_argument("layout: bad grid");
    }
    const double ox = (grid->cols - 1) * grid->spacing / 2.0;
    const double oy = (grid->rows - 1) * grid->spacing / 2.0;
    for (int r = 0; r < grid->rows; ++r) {
      for (int c = 0; c < grid->cols; ++c) {
        out.push_back(
            {center.x + c * grid->spacing - ox, center.y + r * grid->spacing - oy});
      }
    }
  } else if (const auto* line = std::get_if<LineLayout>(&layout)) {
    if (line->count < 1 || !(line->spacing > 0.0)) {
      throw std::invalid_argument("layout: bad line");
    }
    const double ox = (line->count - 1) * line->spacing / 2.0;
    for (int c = 0; c < line->count; ++c) {
      out.push_back({center.x + c * line->spacing - ox, center.y});
    }
  } else {
    out = std::get<ExplicitRobots>(layout).positions;
  }
  return out;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z =
      seed ^ (salt + 0x9E3779B97F4A7C15ULL + (seed << 6) + (seed >> 2));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t setup_index,
                         int trial) {
  return mix_seed(mix_seed(master_seed, setup_index + 1),
                  static_cast<std::uint64_t>(trial) + 1);
}

World generate_world(const WorldSpec& spec, std::uint64_t seed) {
  if (!(spec.robot_radius > 0.0)) {
    throw std::invalid_argument("world spec: robot radius must be > 0");
  }

  std::vector<Robot> robots;
  const std::vector<Vec2> positions =
      layout_positions(spec.robots, spec.formation_center);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    robots.push_back(
        {static_cast<int>(i), positions[i], spec.robot_radius});
  }
  const double diameter = 2.0 * spec.robot_radius;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      if (distance(positions[i], positions[j]) < diameter) {
        throw std::invalid_argument("world spec: overlapping robots");
      }
    }
  }

  std::vector<Task> tasks;
  if (const auto* normal = std::get_if<NormalTasks>(&spec.tasks)) {
    if (normal->count < 0 || !(normal->sigma_x > 0.0) ||
        !(normal->sigma_y > 0.0)) {
      throw std::invalid_argument("world spec: bad task distribution");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nx(normal->center.x, normal->sigma_x);
    std::normal_distribution<double> ny(normal->center.y, normal->sigma_y);
    constexpr int kMaxAttempts = 100000;
    for (int t = 0; t < normal->count; ++t) {
      Vec2 candidate;
      bool placed = false;
      for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        candidate = {nx(rng), ny(rng)};
        bool clear = true;
        for (const Task& accepted : tasks) {
          if (distance(candidate, accepted.location) < diameter) {
            clear = false;
            break;
          }
        }
        if (clear) {
          placed = true;
          break;
        }
      }
      if (!placed) {
        throw std::runtime_error("world spec: task sampling could not "
                                 "separate tasks");
      }
      tasks.push_back({t, candidate, spec.task_value, spec.task_discount});
    }
  } else {
    const auto& explicit_tasks = std::get<ExplicitTasks>(spec.tasks);
    for (std::size_t t = 0; t < explicit_tasks.positions.size(); ++t) {
      tasks.push_back({static_cast<int>(t), explicit_tasks.positions[t],
                       spec.task_value, spec.task_discount});
    }
  }

  return make_world(std::move(robots), std::move(tasks));
}

namespace {

TrialRow run_one_trial(const BatchSpec& spec, std::size_t setup_index,
                       const std::string& algorithm, int trial) {
  const WorldSpec& setup = spec.setups[setup_index];
  TrialRow row;
  row.setup = setup.name;
  row.algorithm = algorithm;
  row.trial = trial;
  row.seed = trial_seed(spec.master_seed, setup_index, trial);

  const World world = generate_world(setup, row.seed);
  row.n_robots = static_cast<int>(world.robots.size());
  row.n_tasks = static_cast<int>(world.tasks.size());

  AuctionResult auction;
  if (algorithm == "cata") {
    auction = run_cata(world, spec.auction);
  } else if (algorithm == "cbaa") {
    auction = run_cbaa(world, spec.auction);
  } else if (algorithm == "greedy") {
    auction = run_greedy_centralized(world, spec.auction);
  } else {
    throw std::invalid_argument("batch: unknown algorithm " + algorithm);
  }
  row.termination = auction.termination;
  row.rounds_used = auction.rounds_used;
  row.objective = auction.objective_value;

  if (auction.termination == AuctionTermination::round_limit) {
    // The mission never starts; count it against the algorithm.
    row.metrics.deadlock = true;
    return row;
  }
  row.metrics = run_trial(world, auction.assignments, spec.sim);
  return row;
}

}  // namespace

BatchReport run_batch(const BatchSpec& spec, int jobs,
                      const SkipPredicate& skip) {
  if (spec.trials < 0 || jobs < 1) {
    throw std::invalid_argument("batch: bad trials or jobs");
  }
  for (const std::string& algorithm : spec.algorithms) {
    if (algorithm != "cata" && algorithm != "cbaa" && algorithm != "greedy") {
      throw std::invalid_argument("batch: unknown algorithm " + algorithm);
    }
  }

  struct Job {
    std::size_t setup_index;
    std::size_t algorithm_index;
    int trial;
  };
  std::vector<Job> todo;
  for (std::size_t s = 0; s < spec.setups.size(); ++s) {
    for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
      for (int t = 0; t < spec.trials; ++t) {
        if (skip && skip(spec.setups[s].name, spec.algorithms[a], t)) continue;
        todo.push_back({s, a, t});
      }
    }
  }

  std::vector<TrialRow> rows(todo.size());
  if (jobs == 1 || todo.size() <= 1) {
    for (std::size_t k = 0; k < todo.size(); ++k) {
      const Job& job = todo[k];
      rows[k] = run_one_trial(spec, job.setup_index,
                              spec.algorithms[job.algorithm_index], job.trial);
    }
  } else {
    // Each trial derives its own seed, so results are schedule independent;
    // slots keep the canonical order.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= todo.size()) return;
        try {
          const Job& job = todo[k];
          rows[k] = run_one_trial(spec, job.setup_index,
                                  spec.algorithms[job.algorithm_index],
                                  job.trial);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    const std::size_t thread_count = std::min<std::size_t>(
        static_cast<std::size_t>(jobs), std::max<std::size_t>(todo.size(), 1));
    for (std::size_t w = 0; w < thread_count; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  BatchReport report;
  report.rows = std::move(rows);
  return report;
}

Quartiles quartiles(std::vector<double> values) {
  Quartiles q;
  q.count = static_cast<int>(values.size());
  if (values.empty()) return q;
  std::sort(values.begin(), values.end());

  auto at = [&](double p) {
    const double h = p * (values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - lo) * (values[hi] - values[lo]);
  };
  q.min = values.front();
  q.q1 = at(0.25);
  q.median = at(0.5);
  q.q3 = at(0.75);
  q.max = values.back();
  double sum = 0.0;
  for (double v : values) sum += v;
  q.mean = sum / values.size();
  return q;
}

Summary summarize(const BatchReport& report) {
  std::map<std::pair<std::string, std::string>, std::vector<const TrialRow*>>
      groups;
  for (const TrialRow& row : report.rows) {
    groups[{row.setup, row.algorithm}].push_back(&row);
  }

  Summary summary;
  for (const auto& [key, rows] : groups) {
    GroupStats stats;
    stats.setup = key.first;
    stats.algorithm = key.second;
    stats.trials = static_cast<int>(rows.size());

    std::vector<double> avoidance, maintain_one, maintain_multi, steps;
    for (const TrialRow* row : rows) {
      avoidance.push_back(row->metrics.avoidance_count);
      maintain_one.push_back(row->metrics.maintain_one_count);
      maintain_multi.push_back(row->metrics.maintain_multi_count);
      if (row->metrics.deadlock) {
        ++stats.deadlocks;
      } else {
        steps.push_back(row->metrics.completion_steps);
      }
    }
    stats.successful = stats.trials - stats.deadlocks;
    stats.avoidance = quartiles(std::move(avoidance));
    stats.maintain_one = quartiles(std::move(maintain_one));
    stats.maintain_multi = quartiles(std::move(maintain_multi));
    stats.completion_steps = quartiles(std::move(steps));
    summary.groups.push_back(std::move(stats));
  }
  return summary;
}

}  // namespace cata
