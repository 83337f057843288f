#include "dpgs/matching.hpp"

#include <algorithm>
#include <cmath>

#include "dpgs/rng.hpp"
#include "dpgs/util.hpp"

namespace dpgs {

SampledMatchingEstimator::SampledMatchingEstimator(int n, int alpha_tilde, double eps,
                                                   double eta, std::uint64_t seed,
                                                   bool test_mode, MatchingConsts consts)
    : n_(n), alpha_tilde_(alpha_tilde), eps_(eps), eta_(eta), seed_(seed),
      consts_(consts),
      subsample_threshold_(consts.a3 * lg2(n) / (eps * eta * eta)),
      incident_(n),
      subsample_svt_(eps / 2.0, 2.0, ceil_pos(consts.a1 * lg(n)), seed,
                     mix64(seed ^ 0x11a1), test_mode),
      estimate_svt_(eps / 2.0, 2.0, ceil_pos(consts.a2 * lg(n) / eta), seed,
                    mix64(seed ^ 0x22b2), test_mode) {}

void SampledMatchingEstimator::insert_sampled(int u, int v) {
  std::uint64_t key = edge_key(u, v);
  sample_.emplace(key, Sampled{u, v, 0, 0});
  incident_[u].push_back(key);
  incident_[v].push_back(key);
  peak_sample_ = std::max<std::int64_t>(peak_sample_, sample_.size());
}

void SampledMatchingEstimator::evict(std::uint64_t key) {
  auto it = sample_.find(key);
  if (it == sample_.end()) return;
  for (int w : {it->second.u, it->second.v}) {
    auto& lst = incident_[w];
    lst.erase(std::find(lst.begin(), lst.end(), key));
  }
  sample_.erase(it);
}

void SampledMatchingEstimator::bump_counters(const EdgeUpdate& e) {
  std::uint64_t new_key = edge_key(e.u, e.v);
  // A later arrival at w advances the counter of every other sampled edge at
  // w, whether or not the arrival itself was sampled.
  for (int w : {e.u, e.v}) {
    std::vector<std::uint64_t> to_evict;
    for (std::uint64_t key : incident_[w]) {
      if (key == new_key) continue;
      Sampled& s = sample_.at(key);
      int& ctr = (s.u == w) ? s.cu : s.cv;
      ++ctr;
      if (ctr > alpha_tilde_) to_evict.push_back(key);
    }
    for (std::uint64_t key : to_evict) evict(key);
  }
}

void SampledMatchingEstimator::halve_sample() {
  p_ /= 2.0;
  ++halve_round_;
  std::vector<std::uint64_t> keys;
  keys.reserve(sample_.size());
  for (const auto& [key, s] : sample_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  for (std::uint64_t key : keys) {
    if (keyed_uniform(seed_, kSaltMatchHalve, key,
                      static_cast<std::uint64_t>(halve_round_)) < 0.5) {
      evict(key);
    }
  }
}

MatchingStep SampledMatchingEstimator::process_update(const EdgeUpdate& u) {
  ++t_;
  if (!frozen_) {
    if (u.kind == EdgeUpdate::Kind::Insert) {
      double coin = keyed_uniform(seed_, kSaltMatchSample, static_cast<std::uint64_t>(t_));
      if (coin < p_) insert_sampled(u.u, u.v);
      bump_counters(u);
    }
    // estimate ladder
    for (;;) {
      SvtAnswer ans = estimate_svt_.process_query(
          static_cast<double>(sample_.size()), p_ * std::pow(1.0 + eta_, j_));
      if (ans == SvtAnswer::Above) {
        ++j_;
        estimate_ = std::pow(1.0 + eta_, j_);
      } else {
        if (ans == SvtAnswer::Abort) frozen_ = true;
        break;
      }
    }
    // subsample check
    if (!frozen_) {
      bool halve = false;
      if (forced_halving_) {
        halve = t_ <= static_cast<std::int64_t>(forced_halving_->size()) &&
                (*forced_halving_)[t_ - 1] != 0;
      } else {
        SvtAnswer ans = subsample_svt_.process_query(
            static_cast<double>(sample_.size()), subsample_threshold_);
        if (ans == SvtAnswer::Abort) frozen_ = true;
        halve = ans == SvtAnswer::Above;
      }
      if (halve && !frozen_) halve_sample();
    }
  }
  MatchingStep step;
  step.estimate = estimate_;
  step.sample_size = sample_size();
  step.p = p_;
  step.estimate_aboves = estimate_svt_.above_count();
  step.subsample_aboves = subsample_svt_.above_count();
  step.frozen = frozen_;
  return step;
}

void SampledMatchingEstimator::force_subsample_schedule(
    std::vector<std::uint8_t> halve_at_t) {
  forced_halving_ = std::move(halve_at_t);
}

std::int64_t good_edge_count(const std::vector<EdgeUpdate>& prefix, int alpha_tilde) {
  auto per_prefix = good_edge_count_per_prefix(prefix, alpha_tilde);
  return per_prefix.empty() ? 0 : per_prefix.back();
}

std::vector<std::int64_t> good_edge_count_per_prefix(const std::vector<EdgeUpdate>& updates,
                                                     int alpha_tilde) {
  // running degrees allow the later-arrival count at time t to be read off as
  // deg_t(v) - (arrival rank + 1)
  std::vector<std::int64_t> out;
  out.reserve(updates.size());
  std::unordered_map<int, int> deg;
  struct Rec {
    int a, b, rank_a, rank_b;
  };
  std::vector<Rec> recs;
  for (const auto& u : updates) {
    if (u.kind == EdgeUpdate::Kind::Insert) {
      recs.push_back({u.u, u.v, deg[u.u], deg[u.v]});
      ++deg[u.u];
      ++deg[u.v];
    }
    std::int64_t good = 0;
    for (const auto& r : recs) {
      int later_a = deg[r.a] - 1 - r.rank_a;
      int later_b = deg[r.b] - 1 - r.rank_b;
      if (later_a <= alpha_tilde && later_b <= alpha_tilde) ++good;
    }
    out.push_back(good);
  }
  return out;
}

std::int64_t max_good_edge_count(const std::vector<EdgeUpdate>& updates, int alpha_tilde) {
  std::int64_t best = 0;
  for (std::int64_t v : good_edge_count_per_prefix(updates, alpha_tilde))
    best = std::max(best, v);
  return best;
}

GuessedArboricityMatching::GuessedArboricityMatching(int n, double eps, double eta,
                                                     std::uint64_t seed, bool test_mode,
                                                     MatchingConsts consts) {
  int guesses = std::max(1, static_cast<int>(std::ceil(lg(n))));
  double eps_each = eps / guesses;
  for (int p = 0; p < guesses; ++p) {
    instances_.emplace_back(n, 1 << p, eps_each, eta, mix64(seed ^ (0x9000 + p)),
                            test_mode, consts);
    last_estimates_.push_back(1.0);
  }
}

void GuessedArboricityMatching::process_update(const EdgeUpdate& u) {
  for (size_t i = 0; i < instances_.size(); ++i)
    last_estimates_[i] = instances_[i].process_update(u).estimate;
}

int GuessedArboricityMatching::selected_index(double arboricity_estimate) const {
  double a = std::max(1.0, arboricity_estimate);
  int p = static_cast<int>(std::ceil(std::log2(a)));
  return std::clamp(p, 0, static_cast<int>(instances_.size()) - 1);
}

double GuessedArboricityMatching::estimate_for(double arboricity_estimate) const {
  return last_estimates_[selected_index(arboricity_estimate)];
}

}  // namespace dpgs
