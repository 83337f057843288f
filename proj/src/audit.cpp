#include "dpgs/audit.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>

#include "dpgs/rng.hpp"
#include "dpgs/sparsify.hpp"
#include "dpgs/svt.hpp"
#include "dpgs/util.hpp"
#include "dpgs/vertex_cover.hpp"

namespace dpgs {

namespace {

// Minimal replica of the sampled-set dynamics at p = 1 used by the exhaustive
// audit; cross-validated against SampledMatchingEstimator in the unit tests.
struct FastSampleState {
  struct E {
    int u, v, cu, cv;
  };
  std::vector<E> edges;

  void apply_insert(int u, int v, int alpha_tilde) {
    for (auto& e : edges) {
      if (e.u == u || e.v == u) ++(e.u == u ? e.cu : e.cv);
      if (e.u == v || e.v == v) ++(e.u == v ? e.cu : e.cv);
    }
    edges.push_back({u, v, 0, 0});
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const E& e) {
                                 return e.cu > alpha_tilde || e.cv > alpha_tilde;
                               }),
                edges.end());
  }
  int size() const { return static_cast<int>(edges.size()); }
};

std::uint64_t pack_sequence(const std::vector<int>& seq) {
  std::uint64_t key = static_cast<std::uint64_t>(seq.size()) << 56;
  for (size_t i = 0; i < seq.size(); ++i)
    key |= static_cast<std::uint64_t>(seq[i] & 0x3f) << (6 * i);
  return key;
}

std::uint32_t pack_trace(const std::vector<int>& trace) {
  std::uint32_t out = 0;
  for (size_t i = 0; i < trace.size(); ++i)
    out |= static_cast<std::uint32_t>(std::min(trace[i], 15)) << (4 * i);
  return out;
}

int trace_at(std::uint32_t packed, int i) { return (packed >> (4 * i)) & 0xf; }

struct ExhaustiveCtx {
  int t_max;
  int alpha_tilde;
  bool fill_pass = true;  // pass 1 records length t_max-1 traces, pass 2 compares
  std::vector<std::pair<int, int>> pool;
  std::unordered_map<std::uint64_t, std::uint32_t> drop_level;  // length t_max-1
  AuditReport* report;
};

void enumerate(ExhaustiveCtx& ctx, std::vector<int>& seq, std::vector<char>& used,
               FastSampleState& state, std::vector<int>& trace) {
  int depth = static_cast<int>(seq.size());
  if (ctx.fill_pass) {
    if (depth == ctx.t_max - 1) {
      ctx.drop_level.emplace(pack_sequence(seq), pack_trace(trace));
      return;
    }
  } else if (depth == ctx.t_max) {
    // compare against every single-position blanking
    std::uint32_t full = pack_trace(trace);
    std::vector<int> sub;
    sub.reserve(ctx.t_max - 1);
    for (int drop = 0; drop < ctx.t_max; ++drop) {
      sub.clear();
      for (int i = 0; i < ctx.t_max; ++i)
        if (i != drop) sub.push_back(seq[i]);
      auto it = ctx.drop_level.find(pack_sequence(sub));
      std::uint32_t dropped = it->second;
      ++ctx.report->cases;
      for (int t = drop; t < ctx.t_max; ++t) {
        int a = trace_at(full, t);
        int b = t == drop ? (drop == 0 ? 0 : trace_at(dropped, t - 1))
                          : trace_at(dropped, t - 1);
        double diff = std::abs(a - b);
        if (diff > ctx.report->worst) ctx.report->worst = diff;
        if (diff > ctx.report->bound && ctx.report->ok) {
          ctx.report->ok = false;
          UpdateStream s;
          s.n = 0;
          for (int id : seq) s.updates.push_back(EdgeUpdate::insert(
              ctx.pool[id].first, ctx.pool[id].second));
          ctx.report->counterexample = s;
          auto pair = edge_neighbor_pair(s, drop + 1);
          ctx.report->counterexample_pair = pair.second;
        }
      }
    }
    return;
  }
  for (int id = 0; id < static_cast<int>(ctx.pool.size()); ++id) {
    if (used[id]) continue;
    used[id] = 1;
    seq.push_back(id);
    FastSampleState saved = state;
    state.apply_insert(ctx.pool[id].first, ctx.pool[id].second, ctx.alpha_tilde);
    trace.push_back(state.size());
    enumerate(ctx, seq, used, state, trace);
    trace.pop_back();
    state = std::move(saved);
    seq.pop_back();
    used[id] = 0;
  }
}

std::vector<int> estimator_sample_trace(const UpdateStream& s, int alpha_tilde,
                                        double eps, double eta, std::uint64_t seed,
                                        const MatchingConsts& consts,
                                        const std::vector<std::uint8_t>* schedule) {
  SampledMatchingEstimator est(s.n, alpha_tilde, eps, eta, seed, false, consts);
  if (schedule) est.force_subsample_schedule(*schedule);
  std::vector<int> trace;
  trace.reserve(s.updates.size());
  for (const auto& u : s.updates)
    trace.push_back(static_cast<int>(est.process_update(u).sample_size));
  return trace;
}

}  // namespace

AuditReport audit_matching_sensitivity_exhaustive(int n, int t_max,
                                                  const std::vector<int>& alpha_tildes,
                                                  const std::vector<std::uint64_t>& seeds,
                                                  double eps, double eta,
                                                  MatchingConsts consts) {
  AuditReport report;
  report.bound = 2.0;
  report.note = "exhaustive distinct-edge sequences, p = 1 regime";
  std::vector<std::pair<int, int>> pool;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pool.emplace_back(u, v);

  for (int alpha : alpha_tildes) {
    ExhaustiveCtx ctx;
    ctx.t_max = t_max;
    ctx.alpha_tilde = alpha;
    ctx.pool = pool;
    ctx.report = &report;
    ctx.drop_level.reserve(1 << 20);
    {
      std::vector<int> seq;
      std::vector<char> used(pool.size(), 0);
      FastSampleState state;
      std::vector<int> trace;
      ctx.fill_pass = true;
      enumerate(ctx, seq, used, state, trace);
      seq.clear();
      std::fill(used.begin(), used.end(), 0);
      state = FastSampleState();
      trace.clear();
      ctx.fill_pass = false;
      enumerate(ctx, seq, used, state, trace);
    }
    if (!report.ok) return report;

    // spot-check the fast dynamics against the real estimator per seed
    for (std::uint64_t seed : seeds) {
      LaplaceSampler pick(mix64(seed ^ 0xadc0));
      for (int rep = 0; rep < 200; ++rep) {
        UpdateStream s;
        s.n = n;
        std::vector<char> taken(pool.size(), 0);
        FastSampleState fast;
        std::vector<int> expected;
        for (int t = 0; t < t_max; ++t) {
          int id;
          do {
            id = static_cast<int>(pick.raw() % pool.size());
          } while (taken[id]);
          taken[id] = 1;
          s.updates.push_back(EdgeUpdate::insert(pool[id].first, pool[id].second));
          fast.apply_insert(pool[id].first, pool[id].second, alpha);
          expected.push_back(fast.size());
        }
        auto got = estimator_sample_trace(s, alpha, eps, eta, seed, consts, nullptr);
        ++report.cases;
        for (int t = 0; t < t_max; ++t) {
          if (got[t] != expected[t]) {
            report.ok = false;
            report.note = "estimator trace diverged from audit dynamics";
            report.counterexample = s;
            return report;
          }
        }
      }
    }
  }
  return report;
}

AuditReport audit_matching_sensitivity_random(int trials, int n, int t_len,
                                              int alpha_tilde, double eps, double eta,
                                              std::uint64_t seed) {
  AuditReport report;
  report.bound = 2.0;
  report.note = "random pairs under a shared forced halving schedule";
  std::vector<std::pair<int, int>> pool;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pool.emplace_back(u, v);
  // halve one third of the way in and again two thirds in
  std::vector<std::uint8_t> schedule(t_len, 0);
  if (t_len >= 3) {
    schedule[t_len / 3] = 1;
    schedule[2 * t_len / 3] = 1;
  }
  LaplaceSampler pick(seed);
  for (int trial = 0; trial < trials; ++trial) {
    UpdateStream s;
    s.n = n;
    std::vector<char> taken(pool.size(), 0);
    int len = std::min<int>(t_len, static_cast<int>(pool.size()));
    for (int t = 0; t < len; ++t) {
      int id;
      do {
        id = static_cast<int>(pick.raw() % pool.size());
      } while (taken[id]);
      taken[id] = 1;
      s.updates.push_back(EdgeUpdate::insert(pool[id].first, pool[id].second));
    }
    std::uint64_t run_seed = mix64(seed ^ (0xf00d + trial));
    auto base = estimator_sample_trace(s, alpha_tilde, eps, eta, run_seed, {}, &schedule);
    for (std::int64_t t_star = 1; t_star <= s.length(); ++t_star) {
      auto [orig, blanked] = edge_neighbor_pair(s, t_star);
      auto other =
          estimator_sample_trace(blanked, alpha_tilde, eps, eta, run_seed, {}, &schedule);
      ++report.cases;
      for (size_t t = 0; t < base.size(); ++t) {
        double diff = std::abs(base[t] - other[t]);
        if (diff > report.worst) report.worst = diff;
        if (diff > report.bound && report.ok) {
          report.ok = false;
          report.counterexample = s;
          report.counterexample_pair = blanked;
        }
      }
    }
  }
  return report;
}

AuditReport audit_sparsifier_distance(int trials, int n, int lambda, std::uint64_t seed) {
  AuditReport report;
  report.bound = 2.0 * lambda;
  report.note = "node-neighboring pairs through the degree-cap filter";
  LaplaceSampler pick(seed);
  for (int trial = 0; trial < trials; ++trial) {
    // random simple insertion stream with densities around the cap
    UpdateStream s;
    s.n = n;
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pool.emplace_back(u, v);
    for (int i = static_cast<int>(pool.size()) - 1; i > 0; --i) {
      int j = static_cast<int>(pick.raw() % static_cast<std::uint64_t>(i + 1));
      std::swap(pool[i], pool[j]);
    }
    size_t take = 1 + pick.raw() % (4ull * n);
    take = std::min(take, pool.size());
    for (size_t i = 0; i < take; ++i)
      s.updates.push_back(EdgeUpdate::insert(pool[i].first, pool[i].second));
    int v_star = static_cast<int>(pick.raw() % static_cast<std::uint64_t>(n));
    auto [orig, blanked] = node_neighbor_pair(s, v_star);

    DegreeCapFilter fa(n, lambda), fb(n, lambda);
    double dist = 0;
    for (std::int64_t t = 0; t < s.length(); ++t) {
      EdgeUpdate a = fa.filter(orig.updates[t]);
      EdgeUpdate b = fb.filter(blanked.updates[t]);
      if (!(a == b)) ++dist;
    }
    ++report.cases;
    if (dist > report.worst) report.worst = dist;
    if (dist > report.bound && report.ok) {
      report.ok = false;
      report.counterexample = orig;
      report.counterexample_pair = blanked;
    }
  }
  return report;
}

AuditReport audit_fixed_permutation_cover(int max_n) {
  AuditReport report;
  report.bound = 1.0;
  report.note = "all graphs vs. single-edge removals, identity order "
                "(covers every permutation up to relabeling)";
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pool.emplace_back(u, v);
    std::vector<int> rank(n);
    for (int v = 0; v < n; ++v) rank[v] = v;
    int m_all = static_cast<int>(pool.size());
    for (std::uint64_t mask = 0; mask < (1ull << m_all); ++mask) {
      EdgeList edges;
      for (int i = 0; i < m_all; ++i)
        if (mask & (1ull << i)) edges.push_back(pool[i]);
      std::int64_t base = cover_size_under_permutation(n, edges, rank);
      for (size_t drop = 0; drop < edges.size(); ++drop) {
        EdgeList fewer;
        for (size_t i = 0; i < edges.size(); ++i)
          if (i != drop) fewer.push_back(edges[i]);
        std::int64_t smaller = cover_size_under_permutation(n, fewer, rank);
        double diff = std::abs(base - smaller);
        ++report.cases;
        if (diff > report.worst) report.worst = diff;
        if (diff > report.bound) report.ok = false;
      }
    }
  }
  return report;
}

double audit_svt_ratio(double eps, double delta, int c, int trials, std::uint64_t seed,
                       int min_count) {
  // fixed scalar sequences differing by exactly delta pointwise
  const std::vector<double> queries = {0.6, 1.4, 0.1, 1.0, 0.7};
  const double threshold = 1.0;
  std::unordered_map<int, int> hist_a, hist_b;
  for (int side = 0; side < 2; ++side) {
    auto& hist = side == 0 ? hist_a : hist_b;
    for (int trial = 0; trial < trials; ++trial) {
      SvtInstance svt(eps, delta, c,
                      mix64(seed ^ (0x5eedull + static_cast<std::uint64_t>(trial) +
                                    (static_cast<std::uint64_t>(side) << 32))),
                      0x1234, false);
      int code = 0;
      for (double q : queries) {
        double value = side == 0 ? q : q + delta;
        SvtAnswer a = svt.process_query(value, threshold);
        code = code * 3 + (a == SvtAnswer::Above ? 2 : (a == SvtAnswer::Below ? 1 : 0));
      }
      ++hist[code];
    }
  }
  double worst = 0;
  for (const auto& [code, ca] : hist_a) {
    auto it = hist_b.find(code);
    int cb = it == hist_b.end() ? 0 : it->second;
    if (ca >= min_count && cb >= min_count) {
      worst = std::max(worst, static_cast<double>(ca) / cb);
      worst = std::max(worst, static_cast<double>(cb) / ca);
    }
  }
  return worst;
}

}  // namespace dpgs
