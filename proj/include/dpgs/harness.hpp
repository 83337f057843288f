#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dpgs/stream.hpp"

namespace dpgs {

struct ExperimentConfig {
  std::string algorithm;  // match-edge | match-node | match-node-exact | vc | dsg | kcore
  double eps = 1.0;
  double eta = 1.0;
  double alpha_tilde = 1.0;
  std::map<std::string, double> consts;  // a1..a3, c1..c5, gamma, tau, w
  std::uint64_t seed = 1;
  bool test_mode = false;
  bool referee = false;
  bool dsg_oracle_exact = false;
  bool literal_reset_release = false;
  int every = 1;  // kcore trace decimation
  std::string stream_path;
  std::string out_dir;
};

struct ExperimentResult {
  bool aborted = false;
  double final_estimate = 0.0;
  std::int64_t peak_sample_size = 0;
};

// Replays the stream through the configured driver and writes trace,
// summary.json, and ledger.json into out_dir. Insertion-only drivers refuse
// streams containing deletions.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

double const_or(const std::map<std::string, double>& consts, const std::string& key,
                double fallback);

}  // namespace dpgs
