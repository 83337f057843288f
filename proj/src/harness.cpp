#include "dpgs/harness.hpp"

#include <filesystem>
#include <fstream>

#include "dpgs/densest.hpp"
#include "dpgs/errors.hpp"
#include "dpgs/kcore.hpp"
#include "dpgs/ledger.hpp"
#include "dpgs/matching.hpp"
#include "dpgs/oracles.hpp"
#include "dpgs/sparsify.hpp"
#include "dpgs/util.hpp"
#include "dpgs/vertex_cover.hpp"
#include "json.hpp"

namespace dpgs {

double const_or(const std::map<std::string, double>& consts, const std::string& key,
                double fallback) {
  auto it = consts.find(key);
  return it == consts.end() ? fallback : it->second;
}

namespace {

namespace fs = std::filesystem;

MatchingConsts matching_consts(const ExperimentConfig& cfg) {
  MatchingConsts c;
  c.a1 = const_or(cfg.consts, "a1", c.a1);
  c.a2 = const_or(cfg.consts, "a2", c.a2);
  c.a3 = const_or(cfg.consts, "a3", c.a3);
  return c;
}

DsgConsts dsg_consts(const ExperimentConfig& cfg) {
  DsgConsts c;
  c.c1 = const_or(cfg.consts, "c1", c.c1);
  c.c2 = const_or(cfg.consts, "c2", c.c2);
  c.c3 = const_or(cfg.consts, "c3", c.c3);
  c.c4 = const_or(cfg.consts, "c4", c.c4);
  c.c5 = const_or(cfg.consts, "c5", c.c5);
  return c;
}

CoreConsts core_consts(const ExperimentConfig& cfg) {
  CoreConsts c;
  c.c1 = const_or(cfg.consts, "c1", c.c1);
  c.c2 = const_or(cfg.consts, "c2", c.c2);
  c.c3 = const_or(cfg.consts, "c3", c.c3);
  return c;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string summary_json(const ExperimentConfig& cfg, const ExperimentResult& res,
                         const std::map<std::string, double>& extra) {
  nlohmann::json j;
  j["algorithm"] = cfg.algorithm;
  j["eps"] = cfg.eps;
  j["eta"] = cfg.eta;
  j["alpha_tilde"] = cfg.alpha_tilde;
  j["seed"] = cfg.seed;
  j["test_mode"] = cfg.test_mode;
  j["aborted"] = res.aborted;
  j["final_estimate"] = res.final_estimate;
  j["peak_sample_size"] = res.peak_sample_size;
  for (const auto& [k, v] : extra) j[k] = v;
  return j.dump(2) + "\n";
}

ExperimentResult run_matching(const ExperimentConfig& cfg, const UpdateStream& s,
                              const fs::path& out) {
  ExperimentResult res;
  PrivacyLedger ledger;
  ledger.add("matching-subsample-svt", cfg.eps / 2.0);
  ledger.add("matching-estimate-svt", cfg.eps / 2.0);
  SampledMatchingEstimator est(s.n, static_cast<int>(cfg.alpha_tilde), cfg.eps, cfg.eta,
                               cfg.seed, cfg.test_mode, matching_consts(cfg));
  std::string trace = "t,estimate,sample_size,p,svt_above_counts\n";
  std::vector<EdgeUpdate> prefix;
  std::vector<std::int64_t> referee;
  if (cfg.referee)
    referee = good_edge_count_per_prefix(s.updates, static_cast<int>(cfg.alpha_tilde));
  std::int64_t t = 0;
  for (const auto& u : s.updates) {
    ++t;
    MatchingStep step = est.process_update(u);
    trace += std::to_string(t) + ',' + fmt_double(step.estimate) + ',' +
             std::to_string(step.sample_size) + ',' + fmt_double(step.p) + ',' +
             std::to_string(step.estimate_aboves) + ';' +
             std::to_string(step.subsample_aboves);
    if (cfg.referee) trace += ',' + std::to_string(referee[t - 1]);
    trace += '\n';
    res.final_estimate = step.estimate;
    res.aborted = res.aborted || step.frozen;
  }
  if (cfg.referee) {
    auto pos = trace.find('\n');
    trace = "t,estimate,sample_size,p,svt_above_counts,good_edges" + trace.substr(pos);
  }
  res.peak_sample_size = est.peak_sample_size();
  write_text(out / "trace.csv", trace);
  write_text(out / "ledger.json", ledger.to_json() + "\n");
  write_text(out / "summary.json",
             summary_json(cfg, res, {{"subsample_threshold", est.subsample_threshold()}}));
  return res;
}

template <typename Driver>
ExperimentResult run_node_matching(const ExperimentConfig& cfg, const UpdateStream& s,
                                   const fs::path& out, Driver& driver,
                                   PrivacyLedger ledger) {
  ExperimentResult res;
  std::string trace = "t,estimate,sample_size,p,svt_above_counts,admitted\n";
  std::int64_t t = 0;
  for (const auto& u : s.updates) {
    ++t;
    NodeMatchingStep step = driver.process_update(u);
    trace += std::to_string(t) + ',' + fmt_double(step.estimate) + ',' +
             std::to_string(step.sample_size) + ',' + fmt_double(step.p) + ',' +
             std::to_string(step.estimate_aboves) + ';' +
             std::to_string(step.subsample_aboves) + ',' +
             std::to_string(step.admitted ? 1 : 0) + '\n';
    res.final_estimate = step.estimate;
    res.aborted = res.aborted || step.frozen;
    res.peak_sample_size = std::max(res.peak_sample_size, step.sample_size);
  }
  write_text(out / "trace.csv", trace);
  write_text(out / "ledger.json", ledger.to_json() + "\n");
  write_text(out / "summary.json",
             summary_json(cfg, res, {{"lambda", static_cast<double>(driver.lambda())}}));
  return res;
}

ExperimentResult run_vc(const ExperimentConfig& cfg, const UpdateStream& s,
                        const fs::path& out) {
  ExperimentResult res;
  VertexCoverConfig vcfg;
  vcfg.n = s.n;
  vcfg.alpha_tilde = cfg.alpha_tilde;
  vcfg.eta = cfg.eta;
  vcfg.eps = cfg.eps;
  vcfg.gamma = const_or(cfg.consts, "gamma", vcfg.gamma);
  vcfg.tau = static_cast<int>(const_or(cfg.consts, "tau", vcfg.tau));
  vcfg.glm_weight = const_or(cfg.consts, "w", 0.0);
  vcfg.seed = cfg.seed;
  vcfg.test_mode = cfg.test_mode;
  SemiStreamVertexCover driver(vcfg);
  for (const auto& u : s.updates) driver.observe(u);
  ImplicitCover cover = driver.finish();
  write_text(out / "cover.json", cover.to_json() + "\n");
  write_text(out / "ledger.json", driver.ledger().to_json() + "\n");

  DynamicGraph g = replay(s);
  EdgeList edges = g.edge_list();
  std::int64_t size = released_cover_size(cover, s.n, edges, driver.stored_edges());
  bool covers = cover_covers_graph(cover, s.n, edges);
  res.final_estimate = static_cast<double>(size);
  std::map<std::string, double> extra{{"cover_size", static_cast<double>(size)},
                                      {"covers_graph", covers ? 1.0 : 0.0},
                                      {"lambda", static_cast<double>(cover.lambda)},
                                      {"stored_edges",
                                       static_cast<double>(driver.stored_edges().size())}};
  if (cfg.referee && s.n <= 20)
    extra["opt_cover"] = exact_min_vertex_cover(s.n, edges);
  write_text(out / "summary.json", summary_json(cfg, res, extra));
  return res;
}

ExperimentResult run_dsg(const ExperimentConfig& cfg, const UpdateStream& s,
                         const fs::path& out) {
  ExperimentResult res;
  DsgConfig dcfg;
  dcfg.n = s.n;
  dcfg.eps = cfg.eps;
  dcfg.eta = cfg.eta;
  dcfg.seed = cfg.seed;
  dcfg.test_mode = cfg.test_mode;
  dcfg.mode = cfg.dsg_oracle_exact ? StaticDsgMode::OracleExact : StaticDsgMode::DpDefault;
  dcfg.literal_reset_release = cfg.literal_reset_release;
  dcfg.consts = dsg_consts(cfg);
  DensestSubgraphDriver driver(dcfg);
  PrivacyLedger ledger;
  ledger.add("dsg-sample-svt", cfg.eps / 3.0);
  ledger.add("dsg-release-svt", cfg.eps / 3.0);
  ledger.add("dsg-static-subroutine", cfg.eps / 3.0);

  DynamicGraph g(s.n);
  DensestTracker referee(s.n);
  std::string trace;
  std::int64_t t = 0;
  for (const auto& u : s.updates) {
    ++t;
    apply_update(g, u);
    if (cfg.referee && u.kind == EdgeUpdate::Kind::Insert)
      referee.add_edge(u.u, u.v);
    DsgStep step = driver.process_update(u);
    // density of the released set inside the true graph
    std::vector<char> in(s.n, 0);
    for (int v : step.released) in[v] = 1;
    long long inside = 0;
    for (int v = 0; v < s.n; ++v)
      for (int w : g.adjacency[v])
        if (v < w && in[v] && in[w]) ++inside;
    double released_density =
        step.released.empty() ? 0.0
                              : static_cast<double>(inside) /
                                    static_cast<double>(step.released.size());
    nlohmann::json line;
    line["t"] = t;
    line["released_size"] = step.released.size();
    line["released_density"] = released_density;
    if (cfg.referee) line["opt_density"] = referee.current().density.value();
    line["p"] = step.p;
    line["sample_edges"] = step.sample_size;
    trace += line.dump() + "\n";
    res.final_estimate = released_density;
    res.aborted = res.aborted || step.frozen;
    res.peak_sample_size = std::max(res.peak_sample_size, step.sample_size);
  }
  write_text(out / "trace.jsonl", trace);
  write_text(out / "ledger.json", ledger.to_json() + "\n");
  write_text(out / "summary.json", summary_json(cfg, res, {}));
  return res;
}

ExperimentResult run_kcore(const ExperimentConfig& cfg, const UpdateStream& s,
                           const fs::path& out) {
  ExperimentResult res;
  CoreConfig kcfg;
  kcfg.n = s.n;
  kcfg.eps = cfg.eps;
  kcfg.eta = cfg.eta;
  kcfg.seed = cfg.seed;
  kcfg.test_mode = cfg.test_mode;
  kcfg.consts = core_consts(cfg);
  CoreDecomposition driver(kcfg);
  PrivacyLedger ledger;
  ledger.add("kcore-level-svts", cfg.eps);

  std::string trace = "t,v,estimate\n";
  std::int64_t t = 0;
  double max_estimate = 1.0;
  for (const auto& u : s.updates) {
    ++t;
    driver.process_update(u);
    std::vector<double> est = driver.release();
    for (double e : est) max_estimate = std::max(max_estimate, e);
    if (cfg.every > 0 && (t % cfg.every == 0 || t == s.length())) {
      for (int v = 0; v < s.n; ++v)
        trace += std::to_string(t) + ',' + std::to_string(v) + ',' +
                 fmt_double(est[v]) + '\n';
    }
    res.final_estimate = max_estimate;
  }
  res.peak_sample_size = driver.total_sampled_edges();
  write_text(out / "trace.csv", trace);
  write_text(out / "ledger.json", ledger.to_json() + "\n");
  // max estimate doubles as a degeneracy proxy bracketing the arboricity
  write_text(out / "summary.json",
             summary_json(cfg, res,
                          {{"max_estimate", max_estimate},
                           {"arboricity_bracket_low", max_estimate / 2.0},
                           {"arboricity_bracket_high", max_estimate}}));
  return res;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  UpdateStream s = read_stream_file(cfg.stream_path);
  if (s.has_delete())
    throw DeleteRefused("algorithm '" + cfg.algorithm +
                        "' accepts insertion-only streams; stream contains DEL");
  fs::path out(cfg.out_dir);
  fs::create_directories(out);
  if (cfg.algorithm == "match-edge") return run_matching(cfg, s, out);
  if (cfg.algorithm == "match-node") {
    SublinearNodeMatching driver(s.n, static_cast<int>(cfg.alpha_tilde), cfg.eps,
                                 cfg.eta, cfg.seed, cfg.test_mode, matching_consts(cfg));
    PrivacyLedger ledger;
    ledger.add("node-matching-inner", cfg.eps);
    return run_node_matching(cfg, s, out, driver, ledger);
  }
  if (cfg.algorithm == "match-node-exact") {
    ExactNodeMatching driver(s.n, static_cast<int>(cfg.alpha_tilde), cfg.eps, cfg.eta,
                             cfg.seed, cfg.test_mode);
    PrivacyLedger ledger;
    ledger.add("node-matching-exact-svt", cfg.eps);
    return run_node_matching(cfg, s, out, driver, ledger);
  }
  if (cfg.algorithm == "vc") return run_vc(cfg, s, out);
  if (cfg.algorithm == "dsg") return run_dsg(cfg, s, out);
  if (cfg.algorithm == "kcore") return run_kcore(cfg, s, out);
  throw ParseError("unknown algorithm '" + cfg.algorithm + "'");
}

}  // namespace dpgs
