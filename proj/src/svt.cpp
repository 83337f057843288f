#include "dpgs/svt.hpp"

#include <stdexcept>

#include "dpgs/rng.hpp"

namespace dpgs {

SvtInstance::SvtInstance(double eps, double delta_sens, int max_above,
                         std::uint64_t seed, std::uint64_t salt, bool test_mode)
    : eps_(eps), delta_(delta_sens), cap_(max_above), seed_(seed), salt_(salt),
      test_mode_(test_mode) {
  if (!(eps > 0)) throw std::invalid_argument("svt eps must be positive");
  if (!(delta_sens > 0)) throw std::invalid_argument("svt sensitivity must be positive");
  if (max_above < 0) throw std::invalid_argument("svt above budget must be >= 0");
  double eps1 = eps / 2.0;
  double eps2 = eps / 2.0;
  query_scale_ = 2.0 * cap_ * delta_ / eps2;
  rho_ = test_mode_ ? 0.0
                    : laplace_from_uniform(
                          keyed_uniform(seed_, kSaltSvtRho, salt_), delta_ / eps1);
}

SvtAnswer SvtInstance::process_query(double query_value, double threshold) {
  if (count_ > cap_) return SvtAnswer::Abort;  // no noise consumed on abort
  ++query_index_;
  double noise = 0.0;
  if (!test_mode_ && cap_ > 0) {
    noise = laplace_from_uniform(
        keyed_uniform(seed_, kSaltSvtQuery, salt_, static_cast<std::uint64_t>(query_index_)),
        query_scale_);
  }
  if (query_value + noise >= threshold + rho_) {
    ++count_;
    return SvtAnswer::Above;
  }
  return SvtAnswer::Below;
}

}  // namespace dpgs
