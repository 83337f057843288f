#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dpgs/stream.hpp"
#include "dpgs/svt.hpp"

namespace dpgs {

struct MatchingConsts {
  double a1 = 4.0;
  // Keeps the estimate ladder's abort ceiling (1+eta)^{a2/eta * log n + 1}
  // inside the desk-scale error budget; the SVT query noise grows linearly
  // with this budget, so small is accurate here.
  double a2 = 1.0;
  double a3 = 8.0;
};

struct MatchingStep {
  double estimate = 1.0;
  std::int64_t sample_size = 0;
  double p = 1.0;
  int estimate_aboves = 0;
  int subsample_aboves = 0;
  bool frozen = false;
};

// Sampled good-edge counter for insertion-only streams. Maintains a sampled
// edge set with per-endpoint later-arrival counters capped at alpha_tilde;
// one SVT gates the estimate ladder and another gates halving the sampling
// probability. Output is the power (1+eta)^j driven by the estimate SVT.
// On either SVT aborting, the last estimate freezes and the frozen flag is
// reported from then on.
class SampledMatchingEstimator {
 public:
  SampledMatchingEstimator(int n, int alpha_tilde, double eps, double eta,
                           std::uint64_t seed, bool test_mode = false,
                           MatchingConsts consts = {});

  MatchingStep process_update(const EdgeUpdate& u);

  std::int64_t sample_size() const { return static_cast<std::int64_t>(sample_.size()); }
  double sampling_probability() const { return p_; }
  std::int64_t peak_sample_size() const { return peak_sample_; }
  bool frozen() const { return frozen_; }
  double subsample_threshold() const { return subsample_threshold_; }

  // Audit hook: pins the halving schedule (indexed by timestep, 1-based) so
  // coupled replays share one probability trajectory. The subsample SVT is
  // bypassed while a schedule is set.
  void force_subsample_schedule(std::vector<std::uint8_t> halve_at_t);

 private:
  struct Sampled {
    int u, v;
    int cu, cv;
  };

  void insert_sampled(int u, int v);
  void evict(std::uint64_t key);
  void bump_counters(const EdgeUpdate& e);
  void halve_sample();

  int n_;
  int alpha_tilde_;
  double eps_;
  double eta_;
  std::uint64_t seed_;
  MatchingConsts consts_;
  double subsample_threshold_;

  std::unordered_map<std::uint64_t, Sampled> sample_;
  std::vector<std::vector<std::uint64_t>> incident_;

  double p_ = 1.0;
  int j_ = 0;
  double estimate_ = 1.0;
  std::int64_t t_ = 0;
  int halve_round_ = 0;
  bool frozen_ = false;
  std::int64_t peak_sample_ = 0;

  SvtInstance subsample_svt_;
  SvtInstance estimate_svt_;
  std::optional<std::vector<std::uint8_t>> forced_halving_;
};

// Reference oracle: |E_t| restricted to edges whose endpoints both saw at
// most alpha_tilde later arrivals within the prefix. Noise-free, p = 1.
std::int64_t good_edge_count(const std::vector<EdgeUpdate>& prefix, int alpha_tilde);
// Per-prefix counts for t = 1..T and their running maximum E*_t.
std::vector<std::int64_t> good_edge_count_per_prefix(const std::vector<EdgeUpdate>& updates,
                                                     int alpha_tilde);
std::int64_t max_good_edge_count(const std::vector<EdgeUpdate>& updates, int alpha_tilde);

// Public-bound-free wrapper: parallel estimators at doubling alpha guesses;
// reads out the instance matching a supplied arboricity estimate.
class GuessedArboricityMatching {
 public:
  GuessedArboricityMatching(int n, double eps, double eta, std::uint64_t seed,
                            bool test_mode = false, MatchingConsts consts = {});

  void process_update(const EdgeUpdate& u);
  double estimate_for(double arboricity_estimate) const;
  int instance_count() const { return static_cast<int>(instances_.size()); }
  int selected_index(double arboricity_estimate) const;

 private:
  std::vector<SampledMatchingEstimator> instances_;
  std::vector<double> last_estimates_;
};

}  // namespace dpgs
