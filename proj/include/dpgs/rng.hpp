#pragma once

#include <cstdint>
#include <random>

namespace dpgs {

// Counter-style randomness keyed on stable identifiers (timestep, edge id,
// query index). Two runs holding the same seed consume identical randomness
// at the same keys, which is what the coupled-sensitivity audits rely on.

std::uint64_t mix64(std::uint64_t x);
std::uint64_t keyed_u64(std::uint64_t seed, std::uint64_t salt, std::uint64_t a = 0,
                        std::uint64_t b = 0);

// Uniform in (0,1).
double u64_to_unit(std::uint64_t x);
double keyed_uniform(std::uint64_t seed, std::uint64_t salt, std::uint64_t a = 0,
                     std::uint64_t b = 0);

// Inverse-CDF Laplace(0, scale) from one uniform in (0,1).
double laplace_from_uniform(double u, double scale);

// Salt namespace for the keyed draws; one value per randomness consumer.
enum KeySalt : std::uint64_t {
  kSaltMatchSample = 0x6d617463685f7331ULL,
  kSaltMatchHalve = 0x6d617463685f6832ULL,
  kSaltSvtRho = 0x7376745f72686f33ULL,
  kSaltSvtQuery = 0x7376745f71727934ULL,
  kSaltDsgWeight = 0x6473675f77743535ULL,
  kSaltCoreCoin = 0x636f72655f633636ULL,
  kSaltSelectP = 0x73656c5f705f3737ULL,
  kSaltSelectSlot = 0x73656c5f736c3838ULL,
  kSaltSelectMech = 0x73656c5f6d633939ULL,
};

// Sequential seeded sampler for places where draw order is naturally linear
// (generators, permutation sampling, Monte Carlo). One uniform per Laplace
// variate so paired runs stay aligned draw-for-draw.
class LaplaceSampler {
 public:
  explicit LaplaceSampler(std::uint64_t seed, bool test_mode = false);

  // Laplace(0, scale); exactly 0 in test mode. Throws NonPositiveScale.
  double sample(double scale);

  double uniform();  // U(0,1)
  std::uint64_t raw();
  bool test_mode() const { return test_mode_; }

 private:
  std::mt19937_64 rng_;
  bool test_mode_;
};

}  // namespace dpgs
