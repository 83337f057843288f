#include "dpgs/densest.hpp"

#include <algorithm>
#include <cmath>

#include "dpgs/rng.hpp"
#include "dpgs/util.hpp"

namespace dpgs {

std::vector<int> static_dp_densest(int n, const EdgeList& edges, double eps,
                                   StaticDsgMode mode, std::uint64_t seed,
                                   bool test_mode) {
  if (edges.empty() || n == 0) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  if (mode == StaticDsgMode::OracleExact) return exact_density(n, edges).witness;

  // exponential-mechanism peel
  LaplaceSampler rng(seed, false);
  LaplaceSampler noise(mix64(seed ^ 0x7a11), test_mode);
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<char> gone(n, 0);
  std::vector<int> removal;
  removal.reserve(n);
  double eps_round = eps / (2.0 * n);
  long long m_left = static_cast<long long>(edges.size());
  std::vector<double> prefix_density;  // density after i removals
  prefix_density.push_back(static_cast<double>(m_left) / n);
  for (int round = 0; round < n - 1; ++round) {
    int pick = -1;
    if (test_mode) {
      // noise-free peel: remove a minimum-degree vertex
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        if (best == -1 || deg[v] < deg[best] || (deg[v] == deg[best] && v < best)) best = v;
      }
      pick = best;
    } else {
      // weights exp(-eps_round * deg / 2), sampled via running max of
      // Gumbel-shifted exponents for numerical stability
      double best_key = 0;
      for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        double g = -std::log(-std::log(rng.uniform()));
        double key = -eps_round * deg[v] / 2.0 + g;
        if (pick == -1 || key > best_key) {
          best_key = key;
          pick = v;
        }
      }
    }
    gone[pick] = 1;
    removal.push_back(pick);
    for (int w : adj[pick])
      if (!gone[w]) --deg[w];
    m_left -= 0;
    long long inside = 0;
    for (auto [u, v] : edges)
      if (!gone[u] && !gone[v]) ++inside;
    prefix_density.push_back(static_cast<double>(inside) /
                             static_cast<double>(n - round - 1));
  }
  // report-noisy-max over removal prefixes
  int best_prefix = 0;
  double best_score = -1e300;
  for (int i = 0; i < static_cast<int>(prefix_density.size()); ++i) {
    double score = prefix_density[i] + noise.sample(2.0 / (eps / 2.0));
    if (score > best_score) {
      best_score = score;
      best_prefix = i;
    }
  }
  std::vector<char> removed(n, 0);
  for (int i = 0; i < best_prefix; ++i) removed[removal[i]] = 1;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) out.push_back(v);
  return out;
}

DsgSampler::DsgSampler(int n, double eps_total, double eps2, double eta,
                       std::uint64_t seed, bool test_mode, DsgConsts consts)
    : n_(n), eps_total_(eps_total), eta_(eta), seed_(seed), consts_(consts),
      m_prime_(consts.c3 * n * lg2(n) / (eps_total * eta * eta)),
      svt_(eps2, 1.0, ceil_pos(consts.c5 * log1eta(n, eta)), seed,
           mix64(seed ^ 0x44d4), test_mode),
      tracker_(n) {}

EdgeList DsgSampler::sampled_edges() const {
  EdgeList out;
  out.reserve(edges_.size());
  for (const auto& [e, h] : edges_)
    if (h <= p_) out.push_back(e);
  return out;
}

void DsgSampler::refilter() {
  EdgeList keep;
  std::vector<std::pair<std::pair<int, int>, double>> kept;
  for (const auto& [e, h] : edges_) {
    if (h <= p_) {
      kept.emplace_back(e, h);
      keep.push_back(e);
    }
  }
  edges_.swap(kept);
  tracker_.rebuild(keep);
}

void DsgSampler::observe(const EdgeUpdate& u, long long m, std::int64_t t) {
  if (aborted_) return;
  SvtAnswer ans = svt_.process_query(static_cast<double>(m), m_prime_);
  if (ans == SvtAnswer::Abort) {
    aborted_ = true;
  } else if (ans == SvtAnswer::Above) {
    m_prime_ *= 1.0 + eta_;
    p_ = std::min(1.0, consts_.c4 * n_ * lg2(n_) /
                           (eps_total_ * eta_ * eta_ * m_prime_));
    refilter();
  }
  if (u.kind == EdgeUpdate::Kind::Insert) {
    double h = keyed_uniform(seed_, kSaltDsgWeight, static_cast<std::uint64_t>(t));
    if (h <= p_) {
      edges_.emplace_back(std::make_pair(u.u, u.v), h);
      tracker_.add_edge(u.u, u.v);
    }
  }
}

DensestSubgraphDriver::DensestSubgraphDriver(const DsgConfig& cfg)
    : cfg_(cfg),
      eps1_(cfg.eps / (3.0 * cfg.consts.c2 * log1eta(cfg.n, cfg.eta))),
      eps2_(cfg.eps / 3.0),
      release_threshold_((1.0 + cfg.eta) * cfg.consts.c1 * lg2(cfg.n) /
                         (cfg.eps * cfg.eta)),
      svt_(eps2_, 1.0, ceil_pos(cfg.consts.c2 * log1eta(cfg.n, cfg.eta)), cfg.seed,
           mix64(cfg.seed ^ 0x55e5), cfg.test_mode),
      sampler_(cfg.n, cfg.eps, eps2_, cfg.eta, mix64(cfg.seed ^ 0x66f6), cfg.test_mode,
               cfg.consts) {
  released_.resize(cfg.n);
  for (int v = 0; v < cfg_.n; ++v) released_[v] = v;
}

DsgStep DensestSubgraphDriver::process_update(const EdgeUpdate& u) {
  ++t_;
  DsgStep step;
  if (!frozen_) {
    if (u.kind == EdgeUpdate::Kind::Insert) ++m_;
    sampler_.observe(u, m_, t_);
    if (sampler_.aborted()) frozen_ = true;
  }
  const DensestResult& dens = sampler_.tracker().current();
  double d = dens.density.value();
  if (cfg_.literal_reset_release) {
    released_.resize(cfg_.n);
    for (int v = 0; v < cfg_.n; ++v) released_[v] = v;
  }
  if (!frozen_) {
    SvtAnswer ans = svt_.process_query(d, sampler_.p() * release_threshold_);
    if (ans == SvtAnswer::Abort) {
      frozen_ = true;
    } else if (ans == SvtAnswer::Above) {
      release_threshold_ *= 1.0 + cfg_.eta;
      ++recompute_count_;
      released_ = static_dp_densest(
          cfg_.n, sampler_.sampled_edges(), eps1_, cfg_.mode,
          keyed_u64(cfg_.seed, 0x77a7, static_cast<std::uint64_t>(recompute_count_)),
          cfg_.test_mode);
      step.recomputed = true;
    }
  }
  step.released = released_;
  step.sample_density = d;
  step.released_density_in_sample =
      subset_density(sampler_.sampled_edges(), released_).value();
  step.p = sampler_.p();
  step.sample_size = sampler_.sample_size();
  step.release_aboves = svt_.above_count();
  step.frozen = frozen_;
  return step;
}

}  // namespace dpgs
