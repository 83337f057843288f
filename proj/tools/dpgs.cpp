// Command-line harness: stream generators, algorithm drivers, and the
// sensitivity / privacy-ratio audits.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpgs/audit.hpp"
#include "dpgs/errors.hpp"
#include "dpgs/generators.hpp"
#include "dpgs/harness.hpp"
#include "dpgs/oracles.hpp"
#include "dpgs/stream.hpp"
#include "dpgs/util.hpp"
#include "dpgs/vertex_cover.hpp"
#include "json.hpp"

namespace {

std::map<std::string, double> parse_consts(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const auto& kv : kvs) {
    auto pos = kv.find('=');
    if (pos == std::string::npos)
      throw dpgs::ParseError("--const expects k=v, got '" + kv + "'");
    out[kv.substr(0, pos)] = std::stod(kv.substr(pos + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"differentially private graph-stream harness"};
  app.require_subcommand(1);

  // ---- run ----
  auto* run = app.add_subcommand("run", "replay a stream through a private driver");
  dpgs::ExperimentConfig cfg;
  std::vector<std::string> const_kvs;
  run->add_option("--alg", cfg.algorithm,
                  "match-edge|match-node|match-node-exact|vc|dsg|kcore")
      ->required();
  run->add_option("--stream", cfg.stream_path, "stream file")->required();
  run->add_option("--eps", cfg.eps, "privacy budget")->required();
  run->add_option("--eta", cfg.eta, "accuracy parameter")->required();
  run->add_option("--alpha-tilde", cfg.alpha_tilde, "public arboricity bound");
  run->add_option("--seed", cfg.seed, "rng seed");
  run->add_option("--const", const_kvs, "constant override k=v")->take_all();
  run->add_option("--every", cfg.every, "kcore trace decimation");
  run->add_flag("--test-mode", cfg.test_mode, "zero all mechanism noise");
  run->add_flag("--referee", cfg.referee, "emit exact referee columns");
  run->add_flag("--dsg-oracle-exact", cfg.dsg_oracle_exact,
                "use the exact static subgraph referee");
  run->add_flag("--literal-release-reset", cfg.literal_reset_release,
                "reset the released set to V on every below step");
  run->add_option("--out", cfg.out_dir, "output directory")->required();

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate streams");
  auto* gen_forest = gen->add_subcommand("forest", "union of random spanning forests");
  int g_n = 50, g_alpha = 1, g_clique = 10, g_pendants = 0, g_bits = 16, g_k = 8;
  long long g_t = -1;
  double g_p = 0.0;
  std::uint64_t g_seed = 1;
  std::string g_out = "stream.txt", g_target = "matching";
  gen_forest->add_option("--n", g_n)->required();
  gen_forest->add_option("--alpha", g_alpha)->required();
  gen_forest->add_option("--T", g_t, "stream length (defaults to edge count)");
  gen_forest->add_option("--seed", g_seed);
  gen_forest->add_option("--out", g_out)->required();

  auto* gen_planted = gen->add_subcommand("planted", "background graph plus a clique");
  gen_planted->add_option("--n", g_n)->required();
  gen_planted->add_option("--clique", g_clique)->required();
  gen_planted->add_option("--p", g_p, "background edge probability");
  gen_planted->add_option("--pendants", g_pendants, "pendant leaves (ignores --n)");
  gen_planted->add_option("--seed", g_seed);
  gen_planted->add_option("--out", g_out)->required();

  auto* gen_red = gen->add_subcommand("reduction", "inner-product reduction stream");
  gen_red->add_option("--target", g_target, "matching|cc")->required();
  gen_red->add_option("--n", g_bits, "secret bits")->required();
  gen_red->add_option("--k", g_k, "query count")->required();
  gen_red->add_option("--seed", g_seed);
  gen_red->add_option("--out", g_out, "output directory")->required();

  // ---- audit ----
  auto* audit = app.add_subcommand("audit", "sensitivity and privacy-ratio audits");
  auto* aud_sens = audit->add_subcommand("sensitivity", "coupled sensitivity bounds");
  std::string a_alg = "match";
  int a_n = 5, a_tmax = 8, a_trials = 1000, a_lambda = 4;
  std::uint64_t a_seed = 1;
  double a_eps = 1.0, a_eta = 0.5;
  std::string a_out;
  aud_sens->add_option("--alg", a_alg, "match|match-random|sparsify|fixed-pi-cover")
      ->required();
  aud_sens->add_option("--n", a_n);
  aud_sens->add_option("--t-max", a_tmax);
  aud_sens->add_option("--trials", a_trials);
  aud_sens->add_option("--lambda", a_lambda);
  aud_sens->add_option("--eps", a_eps);
  aud_sens->add_option("--eta", a_eta);
  aud_sens->add_option("--seed", a_seed);
  aud_sens->add_option("--out", a_out, "directory for counterexamples");

  auto* aud_svt = audit->add_subcommand("svt-ratio", "empirical SVT privacy ratio");
  double s_eps = 1.0, s_delta = 1.0;
  int s_c = 1, s_trials = 200000;
  std::uint64_t s_seed = 1;
  aud_svt->add_option("--eps", s_eps);
  aud_svt->add_option("--delta", s_delta);
  aud_svt->add_option("--c", s_c);
  aud_svt->add_option("--trials", s_trials);
  aud_svt->add_option("--seed", s_seed);

  // ---- vc-verify ----
  auto* verify = app.add_subcommand("vc-verify", "check a released implicit cover");
  std::string v_stream, v_cover;
  verify->add_option("--stream", v_stream)->required();
  verify->add_option("--cover", v_cover)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      cfg.consts = parse_consts(const_kvs);
      dpgs::ExperimentResult res = dpgs::run_experiment(cfg);
      std::printf("final_estimate=%s peak_sample=%lld aborted=%d\n",
                  dpgs::fmt_double(res.final_estimate).c_str(),
                  static_cast<long long>(res.peak_sample_size), res.aborted ? 1 : 0);
      return res.aborted ? 2 : 0;
    }
    if (*gen_forest) {
      dpgs::write_stream_file(g_out, dpgs::forest_union_stream(g_n, g_alpha, g_t < 0 ? -1 : g_t, g_seed));
      return 0;
    }
    if (*gen_planted) {
      dpgs::UpdateStream s =
          g_pendants > 0
              ? dpgs::clique_with_pendants_stream(g_clique, g_pendants, g_seed)
              : dpgs::planted_clique_stream(g_n, g_clique, g_p, g_seed);
      dpgs::write_stream_file(g_out, s);
      return 0;
    }
    if (*gen_red) {
      auto spec = dpgs::random_reduction_spec(
          g_bits, g_k,
          g_target == "cc" ? dpgs::ReductionTarget::Components
                           : dpgs::ReductionTarget::Matching,
          g_seed);
      auto inst = dpgs::make_reduction(spec);
      std::filesystem::create_directories(g_out);
      dpgs::write_stream_file(g_out + "/stream.txt", inst.stream);
      nlohmann::json j;
      j["target"] = g_target;
      j["bits"] = inst.bits;
      j["baseline_time"] = inst.baseline_time;
      j["readout_times"] = inst.readout_times;
      j["query_weights"] = inst.query_weights;
      j["true_inner_products"] = inst.true_inner_products;
      j["decoded_exact"] = dpgs::decode_with_exact_counters(inst);
      std::ofstream(g_out + "/expected.json") << j.dump(2) << "\n";
      return 0;
    }
    if (*aud_sens) {
      dpgs::AuditReport rep;
      if (a_alg == "match") {
        rep = dpgs::audit_matching_sensitivity_exhaustive(
            a_n, a_tmax, {1, 2}, {a_seed, a_seed + 1, a_seed + 2, a_seed + 3, a_seed + 4},
            a_eps, a_eta);
      } else if (a_alg == "match-random") {
        rep = dpgs::audit_matching_sensitivity_random(a_trials, a_n, a_tmax, 2, a_eps,
                                                      a_eta, a_seed);
      } else if (a_alg == "sparsify") {
        rep = dpgs::audit_sparsifier_distance(a_trials, a_n, a_lambda, a_seed);
      } else if (a_alg == "fixed-pi-cover") {
        rep = dpgs::audit_fixed_permutation_cover(a_n);
      } else {
        throw dpgs::ParseError("unknown audit algorithm '" + a_alg + "'");
      }
      std::printf("cases=%lld worst=%s bound=%s ok=%d (%s)\n",
                  static_cast<long long>(rep.cases), dpgs::fmt_double(rep.worst).c_str(),
                  dpgs::fmt_double(rep.bound).c_str(), rep.ok ? 1 : 0,
                  rep.note.c_str());
      if (!rep.ok) {
        if (!a_out.empty()) {
          std::filesystem::create_directories(a_out);
          dpgs::write_stream_file(a_out + "/violating_stream.txt", rep.counterexample);
          dpgs::write_stream_file(a_out + "/violating_neighbor.txt",
                                  rep.counterexample_pair);
        }
        throw dpgs::BoundViolated("sensitivity bound exceeded: worst " +
                                  dpgs::fmt_double(rep.worst));
      }
      return 0;
    }
    if (*aud_svt) {
      double ratio = dpgs::audit_svt_ratio(s_eps, s_delta, s_c, s_trials, s_seed);
      std::printf("max_ratio=%s e^eps=%s\n", dpgs::fmt_double(ratio).c_str(),
                  dpgs::fmt_double(std::exp(s_eps)).c_str());
      return 0;
    }
    if (*verify) {
      dpgs::UpdateStream s = dpgs::read_stream_file(v_stream);
      std::ifstream in(v_cover);
      std::stringstream buf;
      buf << in.rdbuf();
      dpgs::ImplicitCover cover = dpgs::ImplicitCover::from_json(buf.str());
      dpgs::DynamicGraph g = dpgs::replay(s);
      dpgs::EdgeList edges = g.edge_list();
      bool covers = dpgs::cover_covers_graph(cover, s.n, edges);
      // size of the cover the edges actually elect
      std::vector<int> rank = cover.ranks();
      std::vector<char> member(s.n, 0);
      for (auto [u, v] : edges)
        member[dpgs::cover_lookup(u, v, rank, cover.lambda, g.degrees)] = 1;
      std::int64_t size = 0;
      for (char c : member) size += c;
      std::printf("covers=%d size=%lld edges=%lld\n", covers ? 1 : 0,
                  static_cast<long long>(size), static_cast<long long>(edges.size()));
      return covers ? 0 : 3;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
