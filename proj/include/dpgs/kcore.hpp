#pragma once

#include <cstdint>
#include <vector>

#include "dpgs/stream.hpp"
#include "dpgs/svt.hpp"

namespace dpgs {

struct CoreConsts {
  double c1 = 4.0;
  // c2 >= 2 keeps the per-(group,vertex) above budget at least the number of
  // levels, so full climbs fit inside one budget.
  double c2 = 2.0;
  double c3 = 4.0;
};

struct CoreConfig {
  int n = 0;
  double eps = 1.0;
  double eta = 1.0;
  std::uint64_t seed = 1;
  bool test_mode = false;
  CoreConsts consts;
  double level_floor = -1.0;  // release floor L; derived from c3 when < 0
};

// Per-group sampled level structures. Group j samples arrivals at rate p_j
// while an endpoint sits below the top level; one SVT per (group, vertex)
// gates every level climb. Estimates release as (2+eta)(1+eta)^j for the
// highest group whose top level holds the vertex, clamped to 1 below the
// floor L.
class CoreDecomposition {
 public:
  explicit CoreDecomposition(const CoreConfig& cfg);

  void process_update(const EdgeUpdate& u);
  std::vector<double> release() const;

  int group_min() const { return j_min_; }
  int group_max() const { return j_max_; }
  int top_level() const { return levels_per_group_ - 1; }
  double level_floor() const { return floor_; }
  double group_probability(int j) const { return p_[j - j_min_]; }
  int level_of(int j, int v) const { return levels_[j - j_min_][v]; }
  bool frozen(int j, int v) const { return frozen_[j - j_min_][v] != 0; }
  std::int64_t total_sampled_edges() const;
  int svt_above_count(int j, int v) const;
  // shadow hook for invariant tests: up-degree within the sampled group
  int sampled_up_degree(int j, int v) const;

 private:
  void update_levels();

  CoreConfig cfg_;
  int j_min_ = 0;
  int j_max_ = -1;
  int levels_per_group_ = 1;
  double floor_ = 1.0;
  std::int64_t t_ = 0;

  std::vector<double> p_;                          // per group
  std::vector<double> thresholds_;                 // p_j (1+eta)^{j-1}
  std::vector<std::vector<int>> levels_;           // [group][v]
  std::vector<std::vector<char>> frozen_;          // [group][v]
  std::vector<std::vector<SvtInstance>> svt_;      // [group][v]
  std::vector<std::vector<std::vector<int>>> adj_; // [group][v] sampled neighbors
  std::vector<std::vector<int>> up_degree_;        // [group][v]
};

}  // namespace dpgs
