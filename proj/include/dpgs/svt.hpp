#pragma once

#include <cstdint>

namespace dpgs {

enum class SvtAnswer { Above, Below, Abort };

// AboveThreshold with a budget of `max_above` positive answers. The threshold
// noise rho is drawn once at construction with scale delta/eps1; every query
// draws fresh noise at scale 2*c*delta/eps2, where eps1 = eps2 = eps/2.
// A call entering with count > max_above aborts before drawing any noise.
// In test mode all noise is exactly zero, making ProcessQuery the plain
// comparison query >= threshold gated by the abort rule.
class SvtInstance {
 public:
  SvtInstance(double eps, double delta_sens, int max_above, std::uint64_t seed,
              std::uint64_t salt, bool test_mode = false);

  SvtAnswer process_query(double query_value, double threshold);

  int above_count() const { return count_; }
  int budget() const { return cap_; }
  bool exhausted() const { return count_ > cap_; }
  std::int64_t queries_made() const { return query_index_; }
  double eps() const { return eps_; }

 private:
  double eps_;
  double delta_;
  int cap_;
  double rho_;
  double query_scale_;
  int count_ = 0;
  std::int64_t query_index_ = 0;
  std::uint64_t seed_;
  std::uint64_t salt_;
  bool test_mode_;
};

}  // namespace dpgs
