#pragma once

#include <cstdint>
#include <vector>

#include "dpgs/oracles.hpp"
#include "dpgs/stream.hpp"

namespace dpgs {

// Union of `alpha` uniformly random spanning trees (duplicate edges dropped),
// shuffled into arrival order. Nash-Williams bounds the arboricity by alpha.
// Streams shorter than the pool truncate it; longer ones pad trailing Noops.
UpdateStream forest_union_stream(int n, int alpha, std::int64_t T, std::uint64_t seed);

// Background G(n, p) plus a planted clique on a random subset, shuffled.
UpdateStream planted_clique_stream(int n, int clique, double p_background,
                                   std::uint64_t seed);

// K_clique plus pendant leaves hung round-robin off clique vertices.
UpdateStream clique_with_pendants_stream(int clique, int pendants, std::uint64_t seed);

enum class ReductionTarget { Matching, Components };

struct ReductionSpec {
  std::vector<std::uint8_t> secret;                  // y
  std::vector<std::vector<std::uint8_t>> queries;    // q^(1)..q^(k)
  ReductionTarget target = ReductionTarget::Matching;
};

// The fully-dynamic encoding of inner-product queries: the secret lands in
// the first phase, each query toggles its gadget edges on and then off, and
// the readout combines two counter values by inclusion-exclusion.
struct ReductionInstance {
  UpdateStream stream;
  ReductionTarget target = ReductionTarget::Matching;
  int bits = 0;
  std::int64_t baseline_time = 0;              // 1-based timestamp of r^(0)
  std::vector<std::int64_t> readout_times;     // timestamp of r^(j)_n per query
  std::vector<long long> query_weights;        // ||q^(j)||_0
  std::vector<long long> true_inner_products;  // <y, q^(j)>

  long long decode(int j, long long baseline_counter, long long readout_counter) const;
};

ReductionInstance make_reduction(const ReductionSpec& spec);

// Replays the stream with the exact counter for the target (matching size or
// component count) and decodes every query.
std::vector<long long> decode_with_exact_counters(const ReductionInstance& inst);

ReductionSpec random_reduction_spec(int bits, int query_count, ReductionTarget target,
                                    std::uint64_t seed);

}  // namespace dpgs
