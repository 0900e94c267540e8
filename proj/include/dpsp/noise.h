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

#ifndef DPSP_NOISE_H_
#define DPSP_NOISE_H_

#include "dpsp/random.h"

namespace dpsp {

// Privacy parameters (epsilon, delta) plus the failure probability gamma of
// the utility bounds. gamma bounds the probability that a released output
// misses its error guarantee; it has no effect on privacy.
struct PrivacyBudget {
  double epsilon = 0.0;
  double delta = 0.0;
  double gamma = 0.0;

  // Throws std::invalid_argument unless epsilon > 0 and delta, gamma in (0, 1).
  void Validate() const;
};

// Shift and scale of the two Laplace families used by the release
// mechanisms: (mu0, sigma0) for original edges, (mu1, sigma1) for the
// distance-carrying edges/pairs. All logarithms are natural.
struct NoiseParams {
  double mu0 = 0.0;
  double sigma0 = 0.0;
  double mu1 = 0.0;
  double sigma1 = 0.0;
};

// Laplace(mu, b) quantile function; u must lie in (0, 1). Exposed separately
// so the inverse-CDF mapping is testable (u = 0.5 maps to exactly mu).
double LaplaceInverseCdf(double mu, double b, double u);

// One draw from Laplace(location mu, scale b), density (1/2b) exp(-|x-mu|/b).
// Consumes exactly one uniform from rng via the inverse CDF, so a stream of
// draws is reproducible across platforms.
double SampleLaplace(double mu, double b, RandomStream& rng);

// Magnitude bound b * ln(n_vars / gamma): with probability at least
// 1 - gamma, all n_vars i.i.d. centered Laplace(b) draws lie inside it.
double LaplaceMaxBound(int n_vars, double b, double gamma);

// Advanced composition: per-query epsilon so that k pure-DP mechanisms
// compose to (epsilon_total, delta_prime)-DP. Returns
// epsilon_total / sqrt(8 k ln(1/delta_prime)).
double ComposeAdvanced(double epsilon_total, int k, double delta_prime);

// Noise parameters for the shortcut synthetic-graph release on n vertices:
//   eps' = epsilon / 2
//   sigma0 = 1/eps',            mu0 = sigma0 * ln(n^2 / gamma)
//   sigma1 = 2*sqrt(2)*sqrt(n)*sqrt(ln(1/delta)) / eps',
//   mu1 = sigma1 * ln(n / gamma)
NoiseParams ShortcutNoiseParams(int n, const PrivacyBudget& budget);

// Noise parameters for the feedback-vertex-set release with |S| = k:
//   eps' = epsilon / 3
//   sigma0 = 1/eps', sigma1 = 2*sqrt(2)*k*sqrt(ln(1/delta)) / eps'
// Both families are centered (mu0 = mu1 = 0). For k = 0 the sigma1 family is
// never sampled; it is set to a positive sentinel to keep the params valid.
NoiseParams FvsNoiseParams(int k, const PrivacyBudget& budget);

}  // namespace dpsp

#endif  // DPSP_NOISE_H_
