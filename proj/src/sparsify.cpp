#include "dpgs/sparsify.hpp"

#include <cmath>

#include "dpgs/rng.hpp"
#include "dpgs/util.hpp"

namespace dpgs {

DegreeCapFilter::DegreeCapFilter(int n, int lambda) : lambda_(lambda), d_(n, 0) {}

EdgeUpdate DegreeCapFilter::filter(const EdgeUpdate& u) {
  if (u.kind != EdgeUpdate::Kind::Insert) return EdgeUpdate::noop();
  if (std::max(d_[u.u], d_[u.v]) < lambda_) {
    ++d_[u.u];
    ++d_[u.v];
    ++admitted_;
    return u;
  }
  return EdgeUpdate::noop();
}

SublinearNodeMatching::SublinearNodeMatching(int n, int alpha_tilde, double eps,
                                             double eta, std::uint64_t seed,
                                             bool test_mode, MatchingConsts consts)
    : filter_(n, matching_sparsifier_lambda(alpha_tilde, eta)),
      inner_(n, alpha_tilde, eps / (2.0 * filter_.lambda()), eta, seed, test_mode,
             consts) {}

NodeMatchingStep SublinearNodeMatching::process_update(const EdgeUpdate& u) {
  EdgeUpdate passed = filter_.filter(u);
  MatchingStep inner = inner_.process_update(passed);
  NodeMatchingStep step;
  step.estimate = inner.estimate;
  step.admitted = !passed.is_noop();
  step.sample_size = inner.sample_size;
  step.p = inner.p;
  step.estimate_aboves = inner.estimate_aboves;
  step.subsample_aboves = inner.subsample_aboves;
  step.frozen = inner.frozen;
  return step;
}

ExactNodeMatching::ExactNodeMatching(int n, int alpha_tilde, double eps, double eta,
                                     std::uint64_t seed, bool test_mode)
    : filter_(n, matching_sparsifier_lambda(alpha_tilde, eta)),
      matching_(n),
      svt_(eps, 2.0 * filter_.lambda(), ceil_pos(10.0 * log1eta(n, eta)), seed,
           mix64(seed ^ 0x33c3), test_mode),
      eta_(eta) {}

NodeMatchingStep ExactNodeMatching::process_update(const EdgeUpdate& u) {
  NodeMatchingStep step;
  if (frozen_) {
    step.estimate = aboves_ > 0 ? ipow(1.0 + eta_, aboves_ - 1) : 1.0;
    step.frozen = true;
    step.sample_size = static_cast<std::int64_t>(stored_.size());
    return step;
  }
  EdgeUpdate passed = filter_.filter(u);
  if (!passed.is_noop()) {
    stored_.emplace_back(passed.u, passed.v);
    matching_.add_edge(passed.u, passed.v);
    step.admitted = true;
  }
  double mu = static_cast<double>(matching_.size());
  for (;;) {
    SvtAnswer ans = svt_.process_query(mu, ipow(1.0 + eta_, aboves_));
    if (ans == SvtAnswer::Above) {
      ++aboves_;
    } else {
      if (ans == SvtAnswer::Abort) frozen_ = true;
      break;
    }
  }
  step.estimate = aboves_ > 0 ? ipow(1.0 + eta_, aboves_ - 1) : 1.0;
  step.estimate_aboves = aboves_;
  step.sample_size = static_cast<std::int64_t>(stored_.size());
  step.frozen = frozen_;
  return step;
}

}  // namespace dpgs
