#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpgs/matching.hpp"
#include "dpgs/stream.hpp"

namespace dpgs {

struct AuditReport {
  std::int64_t cases = 0;
  double worst = 0.0;
  double bound = 0.0;
  bool ok = true;
  std::string note;
  UpdateStream counterexample;       // populated on violation
  UpdateStream counterexample_pair;  // its blanked neighbor
};

// Exhaustive coupled replay over every ordered sequence of distinct edges on
// n vertices up to length t_max, against every single-update blanking. The
// sample-size traces of the pair must stay within 2 of each other.
AuditReport audit_matching_sensitivity_exhaustive(int n, int t_max,
                                                  const std::vector<int>& alpha_tildes,
                                                  const std::vector<std::uint64_t>& seeds,
                                                  double eps, double eta,
                                                  MatchingConsts consts = {});

// Randomized coupled replay with a shared forced halving schedule, exercising
// the subsampling path of the estimator.
AuditReport audit_matching_sensitivity_random(int trials, int n, int t_len,
                                              int alpha_tilde, double eps, double eta,
                                              std::uint64_t seed);

// Node-neighboring pairs through the degree-cap filter: admitted sequences
// must differ in at most 2*Lambda positions.
AuditReport audit_sparsifier_distance(int trials, int n, int lambda,
                                      std::uint64_t seed);

// Fixed-permutation cover size has edge sensitivity 1; exhaustive over all
// graphs and permutations up to max_n.
AuditReport audit_fixed_permutation_cover(int max_n);

// Empirical privacy ratio of the SVT answer-vector distribution on a fixed
// neighboring query-sequence pair. Returns the max frequency ratio over
// answer vectors with at least min_count hits on both sides.
double audit_svt_ratio(double eps, double delta, int c, int trials,
                       std::uint64_t seed, int min_count = 50);

}  // namespace dpgs
