#pragma once

#include <cstdint>
#include <vector>

#include "dpgs/matching.hpp"
#include "dpgs/oracles.hpp"
#include "dpgs/stream.hpp"
#include "dpgs/svt.hpp"
#include "dpgs/util.hpp"

namespace dpgs {

// Arrival-order degree-cap filter: an insertion passes iff both endpoints
// still hold fewer than Lambda admitted edges (then both counters advance).
// Everything else maps to Noop.
class DegreeCapFilter {
 public:
  DegreeCapFilter(int n, int lambda);

  EdgeUpdate filter(const EdgeUpdate& u);

  int lambda() const { return lambda_; }
  int admitted_count() const { return admitted_; }
  const std::vector<int>& admitted_degrees() const { return d_; }

 private:
  int lambda_;
  int admitted_ = 0;
  std::vector<int> d_;
};

inline int matching_sparsifier_lambda(double alpha_tilde, double eta) {
  return ceil_pos(5.0 * (1.0 + 5.0 / eta) * 2.0 * alpha_tilde);
}

struct NodeMatchingStep {
  double estimate = 1.0;
  bool admitted = false;
  std::int64_t sample_size = 0;
  double p = 1.0;
  int estimate_aboves = 0;
  int subsample_aboves = 0;
  bool frozen = false;
};

// Degree-cap filter feeding the sampled estimator at budget eps/(2*Lambda).
class SublinearNodeMatching {
 public:
  SublinearNodeMatching(int n, int alpha_tilde, double eps, double eta,
                        std::uint64_t seed, bool test_mode = false,
                        MatchingConsts consts = {});

  NodeMatchingStep process_update(const EdgeUpdate& u);
  int lambda() const { return filter_.lambda(); }
  const SampledMatchingEstimator& inner() const { return inner_; }

 private:
  DegreeCapFilter filter_;
  SampledMatchingEstimator inner_;
};

// Degree-cap filter plus an exact matching kept incrementally on the stored
// admitted edges; releases climb the (1+eta) ladder through one SVT with
// sensitivity 2*Lambda. The released value is the largest power that passed.
class ExactNodeMatching {
 public:
  ExactNodeMatching(int n, int alpha_tilde, double eps, double eta, std::uint64_t seed,
                    bool test_mode = false);

  NodeMatchingStep process_update(const EdgeUpdate& u);

  int lambda() const { return filter_.lambda(); }
  int exact_matching_now() const { return matching_.size(); }
  const EdgeList& stored_edges() const { return stored_; }
  bool frozen() const { return frozen_; }

 private:
  DegreeCapFilter filter_;
  GeneralMatching matching_;
  EdgeList stored_;
  SvtInstance svt_;
  double eta_;
  int aboves_ = 0;
  bool frozen_ = false;
};

}  // namespace dpgs
