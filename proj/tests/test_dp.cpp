#include <cmath>

#include "doctest.h"
#include "dpgs/audit.hpp"
#include "dpgs/errors.hpp"
#include "dpgs/ledger.hpp"
#include "dpgs/rng.hpp"
#include "dpgs/svt.hpp"

using namespace dpgs;

TEST_CASE("laplace sampler test mode and errors") {
  LaplaceSampler lap(42, true);
  CHECK(lap.sample(7.0) == 0.0);
  CHECK_THROWS_AS(lap.sample(0.0), NonPositiveScale);
  CHECK_THROWS_AS(lap.sample(-1.0), NonPositiveScale);

  LaplaceSampler a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.sample(1.0) == b.sample(1.0));
}

TEST_CASE("laplace moments") {
  LaplaceSampler lap(123);
  const int n = 1000000;
  double sum = 0, sumsq = 0;
  for (int i = 0; i < n; ++i) {
    double x = lap.sample(1.0);
    sum += x;
    sumsq += x * x;
  }
  double mean = sum / n;
  CHECK(std::fabs(mean) < 0.01);

  LaplaceSampler lap3(321);
  double b = 3.0;
  sumsq = 0;
  for (int i = 0; i < n; ++i) {
    double x = lap3.sample(b);
    sumsq += x * x;
  }
  double var = sumsq / n;
  CHECK(var == doctest::Approx(2 * b * b).epsilon(0.05));
}

TEST_CASE("svt noise-free semantics") {
  SvtInstance svt(1.0, 1.0, 5, 1, 2, true);
  CHECK(svt.process_query(5, 3) == SvtAnswer::Above);
  CHECK(svt.above_count() == 1);
  CHECK(svt.process_query(2, 3) == SvtAnswer::Below);
  CHECK(svt.above_count() == 1);
}

TEST_CASE("svt abort rule with c=1") {
  SvtInstance svt(1.0, 1.0, 1, 1, 3, true);
  CHECK(svt.process_query(10, 0) == SvtAnswer::Above);  // count 1
  // count == c still answers
  CHECK(svt.process_query(10, 0) == SvtAnswer::Above);  // count 2 > c
  CHECK(svt.process_query(10, 0) == SvtAnswer::Abort);
  CHECK(svt.process_query(0, 10) == SvtAnswer::Abort);
  CHECK(svt.exhausted());
}

TEST_CASE("svt test mode matches a reference comparator on random sequences") {
  LaplaceSampler rng(2024);
  for (int rep = 0; rep < 300; ++rep) {
    int c = 1 + static_cast<int>(rng.raw() % 4);
    SvtInstance svt(0.5, 2.0, c, rng.raw(), 17, true);
    int count = 0;
    for (int q = 0; q < 12; ++q) {
      double value = rng.uniform() * 10;
      double threshold = rng.uniform() * 10;
      SvtAnswer got = svt.process_query(value, threshold);
      SvtAnswer want;
      if (count > c) {
        want = SvtAnswer::Abort;
      } else if (value >= threshold) {
        want = SvtAnswer::Above;
        ++count;
      } else {
        want = SvtAnswer::Below;
      }
      CHECK(got == want);
    }
  }
}

TEST_CASE("svt empirical privacy ratio is bounded") {
  // small trial count here; the acceptance suite runs the full version
  double ratio = audit_svt_ratio(1.0, 1.0, 1, 40000, 7, 40);
  CHECK(ratio > 0.0);
  CHECK(ratio <= std::exp(1.0) * 1.25);
}

TEST_CASE("ledger totals and serialization") {
  PrivacyLedger ledger;
  ledger.add("svt-a", 0.25);
  ledger.add("svt-b", 0.5);
  ledger.add("laplace", 0.125);
  CHECK(ledger.total() == doctest::Approx(0.875));

  PrivacyLedger reordered;
  reordered.add("laplace", 0.125);
  reordered.add("svt-b", 0.5);
  reordered.add("svt-a", 0.25);
  CHECK(ledger.total() == doctest::Approx(reordered.total()));

  CHECK(ledger.to_json().find("\"mechanism\"") != std::string::npos);
  CHECK(ledger.to_json().find("\"epsilon\"") != std::string::npos);
}
