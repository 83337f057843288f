#include "dpgs/rng.hpp"

#include <cmath>

#include "dpgs/errors.hpp"

namespace dpgs {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t keyed_u64(std::uint64_t seed, std::uint64_t salt, std::uint64_t a,
                        std::uint64_t b) {
  std::uint64_t h = mix64(seed ^ salt);
  h = mix64(h ^ a);
  h = mix64(h ^ (b + 0x9e3779b97f4a7c15ULL));
  return h;
}

double u64_to_unit(std::uint64_t x) {
  // 53 mantissa bits, shifted off zero so log() stays finite.
  return (static_cast<double>(x >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

double keyed_uniform(std::uint64_t seed, std::uint64_t salt, std::uint64_t a,
                     std::uint64_t b) {
  return u64_to_unit(keyed_u64(seed, salt, a, b));
}

double laplace_from_uniform(double u, double scale) {
  double c = u - 0.5;
  double m = 1.0 - 2.0 * std::fabs(c);
  double v = -scale * std::log(m);
  return c < 0 ? -v : v;
}

LaplaceSampler::LaplaceSampler(std::uint64_t seed, bool test_mode)
    : rng_(mix64(seed ^ 0xd1b54a32d192ed03ULL)), test_mode_(test_mode) {}

double LaplaceSampler::sample(double scale) {
  if (!(scale > 0)) throw NonPositiveScale("laplace scale must be positive");
  double u = uniform();
  if (test_mode_) return 0.0;
  return laplace_from_uniform(u, scale);
}

double LaplaceSampler::uniform() { return u64_to_unit(rng_()); }

std::uint64_t LaplaceSampler::raw() { return rng_(); }

}  // namespace dpgs
