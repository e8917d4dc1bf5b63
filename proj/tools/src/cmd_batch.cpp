#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "cata/scenarios.hpp"
#include "commands.hpp"
#include "json_io.hpp"

namespace cata::cli {

namespace {

constexpr const char* kRowsHeader =
    "setup,algorithm,trial,seed,n_robots,n_tasks,termination,rounds,"
    "objective,completion_steps,deadlock,avoidance,maintain_one,"
    "maintain_multi,min_separation";

std::string row_to_csv(const TrialRow& row) {
  std::string line;
  line += row.setup;
  line += ',';
  line += row.algorithm;
  line += ',';
  line += std::to_string(row.trial);
  line += ',';
  line += std::to_string(row.seed);
  line += ',';
  line += std::to_string(row.n_robots);
  line += ',';
  line += std::to_string(row.n_tasks);
  line += ',';
  line += to_string(row.termination);
  line += ',';
  line += std::to_string(row.rounds_used);
  line += ',';
  line += csv_double(row.objective);
  line += ',';
  line += std::to_string(row.metrics.completion_steps);
  line += ',';
  line += row.metrics.deadlock ? '1' : '0';
  line += ',';
  line += std::to_string(row.metrics.avoidance_count);
  line += ',';
  line += std::to_string(row.metrics.maintain_one_count);
  line += ',';
  line += std::to_string(row.metrics.maintain_multi_count);
  line += ',';
  line += csv_double(row.metrics.min_separation_observed);
  return line;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  for (;;) {
    const std::string::size_type comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::optional<TrialRow> row_from_csv(const std::string& line) {
  const std::vector<std::string> f = split_csv(line);
  if (f.size() != 15) return std::nullopt;
  try {
    TrialRow row;
    row.setup = f[0];
    row.algorithm = f[1];
    row.trial = std::stoi(f[2]);
    row.seed = std::stoull(f[3]);
    row.n_robots = std::stoi(f[4]);
    row.n_tasks = std::stoi(f[5]);
    const auto termination = termination_from_string(f[6]);
    if (!termination.has_value()) return std::nullopt;
    row.termination = *termination;
    row.rounds_used = std::stoi(f[7]);
    row.objective = std::stod(f[8]);
    row.metrics.completion_steps = std::stoi(f[9]);
    if (f[10] != "0" && f[10] != "1") return std::nullopt;
    row.metrics.deadlock = f[10] == "1";
    row.metrics.avoidance_count = std::stoi(f[11]);
    row.metrics.maintain_one_count = std::stoi(f[12]);
    row.metrics.maintain_multi_count = std::stoi(f[13]);
    row.metrics.min_separation_observed = std::stod(f[14]);
    return row;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int run_batch_command(const BatchOptions& options) {
  const BatchSpec spec = batch_spec_from_json(load_json(options.spec_path));

  std::map<std::string, std::size_t> setup_index;
  for (std::size_t i = 0; i < spec.setups.size(); ++i) {
    const std::string& name = spec.setups[i].name;
    if (name.empty() || name.find_first_of(",\n\r") != std::string::npos) {
      throw std::invalid_argument("batch: setup name \"" + name +
                                  "\" is not CSV safe");
    }
    if (!setup_index.emplace(name, i).second) {
      throw std::invalid_argument("batch: duplicate setup name \"" + name +
                                  "\"");
    }
  }
  std::map<std::string, std::size_t> algorithm_index;
  for (std::size_t i = 0; i < spec.algorithms.size(); ++i) {
    if (!algorithm_index.emplace(spec.algorithms[i], i).second) {
      throw std::invalid_argument("batch: duplicate algorithm \"" +
                                  spec.algorithms[i] + "\"");
    }
  }

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec) {
    throw io_error("cannot create " + options.out_dir + ": " + ec.message());
  }
  const std::string rows_path = options.out_dir + "/rows.csv";

  // Previously finished trials, keyed in canonical (setup, algorithm, trial)
  // coordinates. Values round trip through the CSV exactly, so a resumed
  // file ends up byte for byte what a single run would have written.
  using Key = std::tuple<std::size_t, std::size_t, int>;
  std::map<Key, TrialRow> have;

  if (options.resume && fs::exists(rows_path)) {
    std::ifstream in(rows_path);
    if (!in) {
      throw io_error("cannot open " + rows_path);
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
    if (!lines.empty() && lines.front() != kRowsHeader) {
      throw std::invalid_argument("batch: " + rows_path +
                                  " has an unexpected header");
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const std::optional<TrialRow> row = row_from_csv(lines[i]);
      if (!row.has_value()) {
        // A torn final line is what an interrupted run leaves behind; rerun
        // that trial. Anything torn earlier means real corruption.
        if (i + 1 == lines.size()) break;
        throw std::invalid_argument("batch: " + rows_path +
                                    " is corrupt at line " +
                                    std::to_string(i + 1));
      }
      const auto setup = setup_index.find(row->setup);
      const auto algorithm = algorithm_index.find(row->algorithm);
      if (setup == setup_index.end() || algorithm == algorithm_index.end() ||
          row->trial < 0 || row->trial >= spec.trials) {
        throw std::invalid_argument("batch: " + rows_path +
                                    " does not match the spec (line " +
                                    std::to_string(i + 1) + ")");
      }
      const Key key{setup->second, algorithm->second, row->trial};
      if (!have.emplace(key, *row).second) {
        throw std::invalid_argument("batch: " + rows_path +
                                    " repeats a trial (line " +
                                    std::to_string(i + 1) + ")");
      }
    }
  }

  SkipPredicate skip;
  if (!have.empty()) {
    skip = [&](const std::string& setup, const std::string& algorithm,
               int trial) {
      return have.count(Key{setup_index.at(setup),
                            algorithm_index.at(algorithm), trial}) > 0;
    };
  }
  const BatchReport fresh = run_batch(spec, options.jobs, skip);
  for (const TrialRow& row : fresh.rows) {
    have.emplace(Key{setup_index.at(row.setup),
                     algorithm_index.at(row.algorithm), row.trial},
                 row);
  }

  BatchReport merged;
  merged.rows.reserve(have.size());
  for (auto& [key, row] : have) {
    merged.rows.push_back(std::move(row));
  }

  std::string csv = kRowsHeader;
  csv += '\n';
  for (const TrialRow& row : merged.rows) {
    csv += row_to_csv(row);
    csv += '\n';
  }
  save_text(rows_path, csv);

  const json manifest = make_manifest(
      "batch", {{"name", spec.name},
                {"master_seed", spec.master_seed},
                {"trials", spec.trials},
                {"algorithms", spec.algorithms},
                {"row_count", merged.rows.size()}});

  const Summary summary = summarize(merged);
  json groups = json::array();
  for (const GroupStats& group : summary.groups) {
    groups.push_back({{"setup", group.setup},
                      {"algorithm", group.algorithm},
                      {"trials", group.trials},
                      {"deadlocks", group.deadlocks},
                      {"successful", group.successful},
                      {"avoidance", quartiles_to_json(group.avoidance)},
                      {"maintain_one", quartiles_to_json(group.maintain_one)},
                      {"maintain_multi",
                       quartiles_to_json(group.maintain_multi)},
                      {"completion_steps",
                       quartiles_to_json(group.completion_steps)}});
  }
  const json summary_doc = {
      {"schema", 1}, {"manifest", manifest}, {"groups", std::move(groups)}};
  save_text(options.out_dir + "/summary.json", summary_doc.dump(2) + "\n");

  // Sibling manifest covers the CSV, which cannot carry one itself.
  const json manifest_doc = {
      {"schema", 1},
      {"manifest", manifest},
      {"files",
       {{"rows", "rows.csv"}, {"summary", "summary.json"}}},
      {"spec", batch_spec_to_json(spec)}};
  save_text(options.out_dir + "/manifest.json", manifest_doc.dump(2) + "\n");

  return kExitOk;
}

}  // namespace cata::cli
