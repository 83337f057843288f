#include "dpgs/kcore.hpp"

#include <algorithm>
#include <cmath>

#include "dpgs/rng.hpp"
#include "dpgs/util.hpp"

namespace dpgs {

CoreDecomposition::CoreDecomposition(const CoreConfig& cfg) : cfg_(cfg) {
  const int n = cfg.n;
  floor_ = cfg.level_floor >= 0 ? cfg.level_floor
                                : cfg.consts.c3 * lg3(n) / cfg.eps;
  levels_per_group_ = ceil_pos(2.0 * log1eta(n, cfg.eta));
  j_min_ = std::max(0, static_cast<int>(std::ceil(log1eta(std::max(floor_, 1.0), cfg.eta))));
  j_max_ = levels_per_group_;  // ceil(2 log_{1+eta} n)
  if (j_max_ < j_min_) j_max_ = j_min_ - 1;  // empty group range: everything releases 1

  int groups = j_max_ - j_min_ + 1;
  if (groups <= 0) return;
  int f = levels_per_group_;
  double eps1 = cfg.eps / (6.0 * groups * f);
  int budget = ceil_pos(cfg.consts.c2 * log1eta(n, cfg.eta));

  p_.resize(groups);
  thresholds_.resize(groups);
  levels_.assign(groups, std::vector<int>(n, 0));
  frozen_.assign(groups, std::vector<char>(n, 0));
  adj_.assign(groups, std::vector<std::vector<int>>(n));
  up_degree_.assign(groups, std::vector<int>(n, 0));
  svt_.resize(groups);
  for (int gi = 0; gi < groups; ++gi) {
    int j = j_min_ + gi;
    p_[gi] = std::min(1.0, cfg.consts.c1 * lg3(n) / (cfg.eps * std::pow(1.0 + cfg.eta, j)));
    thresholds_[gi] = p_[gi] * std::pow(1.0 + cfg.eta, j - 1);
    svt_[gi].reserve(n);
    for (int v = 0; v < n; ++v) {
      svt_[gi].emplace_back(eps1, 1.0, budget, cfg.seed,
                            keyed_u64(cfg.seed, 0x8c0u, static_cast<std::uint64_t>(j),
                                      static_cast<std::uint64_t>(v)),
                            cfg.test_mode);
    }
  }
}

std::int64_t CoreDecomposition::total_sampled_edges() const {
  std::int64_t total = 0;
  for (const auto& group : adj_)
    for (const auto& lst : group) total += static_cast<std::int64_t>(lst.size());
  return total / 2;
}

int CoreDecomposition::svt_above_count(int j, int v) const {
  return svt_[j - j_min_][v].above_count();
}

int CoreDecomposition::sampled_up_degree(int j, int v) const {
  return up_degree_[j - j_min_][v];
}

void CoreDecomposition::process_update(const EdgeUpdate& u) {
  ++t_;
  if (u.kind == EdgeUpdate::Kind::Insert) {
    int top = levels_per_group_ - 1;
    for (int gi = 0; gi < static_cast<int>(p_.size()); ++gi) {
      int j = j_min_ + gi;
      // one membership per (edge, group): admitted when any qualifying
      // endpoint's draw fires
      bool admit = false;
      int side = 0;
      for (int w : {u.u, u.v}) {
        if (levels_[gi][w] < top) {
          double coin = keyed_uniform(cfg_.seed, kSaltCoreCoin,
                                      (static_cast<std::uint64_t>(j) << 32) |
                                          static_cast<std::uint64_t>(side),
                                      static_cast<std::uint64_t>(t_));
          if (coin < p_[gi]) admit = true;
        }
        ++side;
      }
      if (admit) {
        adj_[gi][u.u].push_back(u.v);
        adj_[gi][u.v].push_back(u.u);
        if (levels_[gi][u.v] >= levels_[gi][u.u]) ++up_degree_[gi][u.u];
        if (levels_[gi][u.u] >= levels_[gi][u.v]) ++up_degree_[gi][u.v];
      }
    }
  }
  update_levels();
}

void CoreDecomposition::update_levels() {
  int top = levels_per_group_ - 1;
  for (int gi = 0; gi < static_cast<int>(p_.size()); ++gi) {
    for (int level = 0; level <= top - 1; ++level) {
      for (int v = 0; v < cfg_.n; ++v) {
        if (levels_[gi][v] != level || frozen_[gi][v]) continue;
        SvtAnswer ans = svt_[gi][v].process_query(
            static_cast<double>(up_degree_[gi][v]), thresholds_[gi]);
        if (ans == SvtAnswer::Abort) {
          frozen_[gi][v] = 1;
          continue;
        }
        if (ans != SvtAnswer::Above) continue;
        // climb: neighbors at the old level leave v's up-view; neighbors at
        // exactly the new level gain v in theirs
        int old_level = levels_[gi][v];
        levels_[gi][v] = old_level + 1;
        for (int w : adj_[gi][v]) {
          if (levels_[gi][w] == old_level) --up_degree_[gi][v];
          if (levels_[gi][w] == old_level + 1) ++up_degree_[gi][w];
        }
      }
    }
  }
}

std::vector<double> CoreDecomposition::release() const {
  std::vector<double> out(cfg_.n, 1.0);
  int top = levels_per_group_ - 1;
  for (int v = 0; v < cfg_.n; ++v) {
    int j_now = -1;
    for (int gi = static_cast<int>(p_.size()) - 1; gi >= 0; --gi) {
      if (levels_[gi][v] == top) {
        j_now = j_min_ + gi;
        break;
      }
    }
    if (j_now >= 0 && std::pow(1.0 + cfg_.eta, j_now) > floor_) {
      out[v] = (2.0 + cfg_.eta) * std::pow(1.0 + cfg_.eta, j_now);
    }
  }
  return out;
}

}  // namespace dpgs
