#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dpgs/oracles.hpp"
#include "dpgs/stream.hpp"
#include "dpgs/svt.hpp"

namespace dpgs {

struct DsgConsts {
  double c1 = 4.0;
  double c2 = 4.0;
  double c3 = 4.0;
  double c4 = 4.0;
  double c5 = 4.0;
};

enum class StaticDsgMode { OracleExact, DpDefault };

// Static subgraph selector behind the driver. OracleExact is the non-private
// referee (exact flow-based witness). DpDefault peels with an exponential
// mechanism at per-round budget eps/(2n) and picks a removal prefix by
// report-noisy-max over prefix densities at scale 2/(eps/2).
std::vector<int> static_dp_densest(int n, const EdgeList& edges, double eps,
                                   StaticDsgMode mode, std::uint64_t seed,
                                   bool test_mode = false);

// The sampled edge set: every arriving edge draws one persistent uniform
// weight; membership is weight <= p, so a marginal inclusion probability of
// exactly p survives every re-filter. p shrinks when the edge-count SVT
// reports the stream passed the current m' estimate.
class DsgSampler {
 public:
  DsgSampler(int n, double eps_total, double eps2, double eta, std::uint64_t seed,
             bool test_mode, DsgConsts consts);

  void observe(const EdgeUpdate& u, long long m, std::int64_t t);

  double p() const { return p_; }
  double m_prime() const { return m_prime_; }
  std::int64_t sample_size() const { return static_cast<std::int64_t>(edges_.size()); }
  bool aborted() const { return aborted_; }
  DensestTracker& tracker() { return tracker_; }
  EdgeList sampled_edges() const;

 private:
  void refilter();

  int n_;
  double eps_total_;
  double eta_;
  std::uint64_t seed_;
  DsgConsts consts_;
  double m_prime_;
  double p_ = 1.0;
  bool aborted_ = false;
  SvtInstance svt_;
  // insertion order kept for deterministic rebuilds
  std::vector<std::pair<std::pair<int, int>, double>> edges_;
  DensestTracker tracker_;
};

struct DsgStep {
  std::vector<int> released;
  double released_density_in_sample = 0.0;
  double sample_density = 0.0;  // exact density of the sample graph
  double p = 1.0;
  std::int64_t sample_size = 0;
  int release_aboves = 0;
  bool frozen = false;
  bool recomputed = false;
};

struct DsgConfig {
  int n = 0;
  double eps = 1.0;
  double eta = 1.0;
  std::uint64_t seed = 1;
  bool test_mode = false;
  StaticDsgMode mode = StaticDsgMode::DpDefault;
  // When set, the released set resets to the full vertex set on every
  // non-above step instead of holding the last computed subgraph.
  bool literal_reset_release = false;
  DsgConsts consts;
};

// The continual-release driver: counts true edges, feeds the sampler, reads
// the exact sample density, and refreshes the released subset only when the
// density SVT fires, raising the release threshold by (1+eta) each time.
class DensestSubgraphDriver {
 public:
  explicit DensestSubgraphDriver(const DsgConfig& cfg);

  DsgStep process_update(const EdgeUpdate& u);

  double release_threshold() const { return release_threshold_; }
  double eps1() const { return eps1_; }
  const DsgSampler& sampler() const { return sampler_; }

 private:
  DsgConfig cfg_;
  double eps1_;
  double eps2_;
  double release_threshold_;
  long long m_ = 0;
  std::int64_t t_ = 0;
  bool frozen_ = false;
  int recompute_count_ = 0;
  SvtInstance svt_;
  DsgSampler sampler_;
  std::vector<int> released_;
};

}  // namespace dpgs
