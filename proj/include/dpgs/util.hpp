#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

namespace dpgs {

// Unqualified "log" in budget and threshold formulas is base 2 throughout.
inline double lg(double x) { return std::log2(std::max(x, 2.0)); }
inline double lg2(double x) { return lg(x) * lg(x); }
inline double lg3(double x) { return lg(x) * lg(x) * lg(x); }

inline double log1eta(double x, double eta) {
  return std::log(std::max(x, 2.0)) / std::log1p(eta);
}

inline int ceil_pos(double x) { return std::max(1, static_cast<int>(std::ceil(x))); }

inline double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// 17 significant digits; enough to round-trip a double exactly.
std::string fmt_double(double x);

int thread_cap();  // DPGS_THREADS, else hardware concurrency
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn);

}  // namespace dpgs
