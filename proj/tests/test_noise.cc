// Copyright 2026 The dpsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dpsp/noise.h"
#include "dpsp/random.h"

using dpsp::ComposeAdvanced;
using dpsp::FvsNoiseParams;
using dpsp::LaplaceInverseCdf;
using dpsp::LaplaceMaxBound;
using dpsp::NoiseParams;
using dpsp::PrivacyBudget;
using dpsp::RandomStream;
using dpsp::SampleLaplace;
using dpsp::ShortcutNoiseParams;

TEST_CASE("laplace sampler: empirical mean matches the location parameter") {
  RandomStream rng(101);
  const int draws = 1'000'000;
  double total = 0.0;
  for (int i = 0; i < draws; ++i) total += SampleLaplace(5.0, 2.0, rng);
  const double mean = total / draws;
  CHECK(std::abs(mean - 5.0) <= 0.01 * (5.0 + 2.0));
}

TEST_CASE("laplace sampler: mean absolute deviation equals the scale") {
  // For centered Laplace(b), E|X| = b; Monte Carlo oracle at 1e6 draws.
  RandomStream rng(102);
  const int draws = 1'000'000;
  double total = 0.0;
  for (int i = 0; i < draws; ++i) total += std::abs(SampleLaplace(0.0, 2.0, rng));
  const double mad = total / draws;
  CHECK(std::abs(mad - 2.0) <= 0.01 * 2.0);
}

TEST_CASE("laplace inverse CDF maps one half to the location exactly") {
  CHECK(LaplaceInverseCdf(5.0, 2.0, 0.5) == 5.0);
  CHECK(LaplaceInverseCdf(-3.25, 0.1, 0.5) == -3.25);
  // Symmetric quantiles around the median.
  CHECK(LaplaceInverseCdf(0.0, 1.0, 0.25) == doctest::Approx(-std::log(2.0) * 1.0));
  CHECK(LaplaceInverseCdf(0.0, 1.0, 0.75) == doctest::Approx(std::log(2.0) * 1.0));
}

TEST_CASE("laplace sampler rejects nonpositive scales") {
  RandomStream rng(1);
  CHECK_THROWS_AS(SampleLaplace(0.0, 0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(SampleLaplace(0.0, -1.0, rng), std::invalid_argument);
}

TEST_CASE("laplace sampler: Kolmogorov-Smirnov sanity against the analytic CDF") {
  RandomStream rng(103);
  const int draws = 100'000;
  const double mu = 1.0, b = 3.0;
  std::vector<double> sample(draws);
  for (double& x : sample) x = SampleLaplace(mu, b, rng);
  std::sort(sample.begin(), sample.end());
  const auto cdf = [&](double x) {
    return x < mu ? 0.5 * std::exp((x - mu) / b) : 1.0 - 0.5 * std::exp(-(x - mu) / b);
  };
  double ks = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double f = cdf(sample[i]);
    ks = std::max(ks, std::abs(f - static_cast<double>(i) / draws));
    ks = std::max(ks, std::abs(f - static_cast<double>(i + 1) / draws));
  }
  CHECK(ks <= 0.01);
}

TEST_CASE("identical seeds give identical streams, different seeds differ") {
  RandomStream a(77), b(77), c(78);
  bool all_equal = true, any_equal_c = false;
  for (int i = 0; i < 1000; ++i) {
    const uint64_t xa = a.NextUint64();
    const uint64_t xb = b.NextUint64();
    const uint64_t xc = c.NextUint64();
    all_equal = all_equal && (xa == xb);
    any_equal_c = any_equal_c || (xa == xc);
  }
  CHECK(all_equal);
  CHECK_FALSE(any_equal_c);
}

TEST_CASE("substream derivation ignores parent consumption") {
  RandomStream parent(5);
  const RandomStream before = parent.Substream({1, 2});
  for (int i = 0; i < 100; ++i) parent.NextUint64();
  RandomStream after = parent.Substream({1, 2});
  RandomStream expected = before;
  for (int i = 0; i < 50; ++i) {
    CHECK(after.NextUint64() == expected.NextUint64());
  }
}

TEST_CASE("laplace max bound: worked values") {
  CHECK(LaplaceMaxBound(1, 1.0, std::exp(-1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  // 2 * ln(100 / 0.01) = 2 * ln(10^4)
  CHECK(LaplaceMaxBound(100, 2.0, 0.01) ==
        doctest::Approx(2.0 * std::log(1e4)).epsilon(1e-12));
  CHECK(LaplaceMaxBound(100, 2.0, 0.01) == doctest::Approx(18.4207).epsilon(1e-4));
}

TEST_CASE("laplace max bound: Monte Carlo coverage of max-of-100 draws") {
  // P[max of 100 |Lap(0,2)| > bound] is about gamma; the spec allows 2*gamma.
  RandomStream rng(104);
  const int trials = 10'000;
  const double bound = LaplaceMaxBound(100, 2.0, 0.01);
  int exceed = 0;
  for (int t = 0; t < trials; ++t) {
    double biggest = 0.0;
    for (int i = 0; i < 100; ++i) {
      biggest = std::max(biggest, std::abs(SampleLaplace(0.0, 2.0, rng)));
    }
    if (biggest > bound) ++exceed;
  }
  CHECK(exceed <= static_cast<int>(2 * 0.01 * trials));
}

TEST_CASE("advanced composition: worked value and inverse identity") {
  const double per_query = ComposeAdvanced(0.5, 100, 0.01);
  CHECK(per_query == doctest::Approx(0.5 / std::sqrt(800.0 * std::log(100.0)))
                         .epsilon(1e-12));
  CHECK(per_query == doctest::Approx(0.0082376).epsilon(1e-4));
  // k = 1, delta' = 1/e: epsilon / sqrt(8).
  CHECK(ComposeAdvanced(2.0, 1, std::exp(-1.0)) ==
        doctest::Approx(2.0 / std::sqrt(8.0)).epsilon(1e-12));
  // Multiplying back recovers the total to 1e-12.
  const double recovered = per_query * std::sqrt(8.0 * 100 * std::log(1.0 / 0.01));
  CHECK(std::abs(recovered - 0.5) <= 1e-12);
}

TEST_CASE("shortcut noise params: worked values for n=100, eps=1, delta=gamma=0.01") {
  const NoiseParams p = ShortcutNoiseParams(100, {1.0, 0.01, 0.01});
  CHECK(p.sigma0 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(p.mu0 == doctest::Approx(2.0 * std::log(1e6)).epsilon(1e-12));
  CHECK(p.mu0 == doctest::Approx(27.631).epsilon(1e-4));
  const double expected_sigma1 =
      2.0 * std::sqrt(2.0) * 10.0 * std::sqrt(std::log(100.0)) / 0.5;
  CHECK(p.sigma1 == doctest::Approx(expected_sigma1).epsilon(1e-12));
  CHECK(p.sigma1 == doctest::Approx(121.394).epsilon(1e-4));
  CHECK(p.mu1 == doctest::Approx(expected_sigma1 * std::log(1e4)).epsilon(1e-12));
  CHECK(p.mu1 == doctest::Approx(1118.08).epsilon(1e-4));
}

TEST_CASE("shortcut noise params: scaling structure") {
  const PrivacyBudget budget{1.0, 0.01, 0.01};
  const NoiseParams base = ShortcutNoiseParams(100, budget);
  // Doubling n scales sigma1 by sqrt(2) and leaves sigma0 alone.
  const NoiseParams doubled = ShortcutNoiseParams(200, budget);
  CHECK(doubled.sigma1 == doctest::Approx(base.sigma1 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(doubled.sigma0 == base.sigma0);
  // Doubling epsilon halves both scales.
  const NoiseParams stronger = ShortcutNoiseParams(100, {2.0, 0.01, 0.01});
  CHECK(stronger.sigma0 == doctest::Approx(base.sigma0 / 2.0).epsilon(1e-12));
  CHECK(stronger.sigma1 == doctest::Approx(base.sigma1 / 2.0).epsilon(1e-12));
  // Shift identities hold exactly as written.
  CHECK(base.mu0 == base.sigma0 * std::log(100.0 * 100.0 / budget.gamma));
  CHECK(base.mu1 == base.sigma1 * std::log(100.0 / budget.gamma));
}

TEST_CASE("fvs noise params: worked values for k=10, eps=3, delta=0.01") {
  const NoiseParams p = FvsNoiseParams(10, {3.0, 0.01, 0.01});
  CHECK(p.sigma0 == doctest::Approx(1.0).epsilon(1e-12));
  const double expected_sigma1 = 2.0 * std::sqrt(2.0) * 10.0 * std::sqrt(std::log(100.0));
  CHECK(p.sigma1 == doctest::Approx(expected_sigma1).epsilon(1e-12));
  CHECK(p.sigma1 == doctest::Approx(60.697).epsilon(1e-4));
  CHECK(p.mu0 == 0.0);
  CHECK(p.mu1 == 0.0);
}

TEST_CASE("fvs noise params: k=0 leaves a positive sentinel scale") {
  const NoiseParams p = FvsNoiseParams(0, {3.0, 0.01, 0.01});
  CHECK(p.sigma1 > 0.0);
  CHECK(p.sigma0 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("privacy budget validation") {
  CHECK_THROWS_AS((PrivacyBudget{0.0, 0.01, 0.01}).Validate(), std::invalid_argument);
  CHECK_THROWS_AS((PrivacyBudget{1.0, 0.0, 0.01}).Validate(), std::invalid_argument);
  CHECK_THROWS_AS((PrivacyBudget{1.0, 1.0, 0.01}).Validate(), std::invalid_argument);
  CHECK_THROWS_AS((PrivacyBudget{1.0, 0.01, 0.0}).Validate(), std::invalid_argument);
  CHECK_NOTHROW((PrivacyBudget{1.0, 0.01, 0.01}).Validate());
}
