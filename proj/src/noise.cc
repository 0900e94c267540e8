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

#include "dpsp/noise.h"

#include <cmath>
#include <stdexcept>

namespace dpsp {

void PrivacyBudget::Validate() const {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("PrivacyBudget: epsilon must be positive");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("PrivacyBudget: delta must lie in (0, 1)");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("PrivacyBudget: gamma must lie in (0, 1)");
  }
}

double LaplaceInverseCdf(double mu, double b, double u) {
  if (!(b > 0.0)) {
    throw std::invalid_argument("LaplaceInverseCdf: scale must be positive");
  }
  if (!(u > 0.0 && u < 1.0)) {
    throw std::invalid_argument("LaplaceInverseCdf: u must lie in (0, 1)");
  }
  if (u == 0.5) return mu;
  const double centered = u - 0.5;
  const double sign = centered > 0.0 ? 1.0 : -1.0;
  return mu - b * sign * std::log(1.0 - 2.0 * std::abs(centered));
}

double SampleLaplace(double mu, double b, RandomStream& rng) {
  return LaplaceInverseCdf(mu, b, rng.NextUniform());
}

double LaplaceMaxBound(int n_vars, double b, double gamma) {
  if (n_vars < 1) {
    throw std::invalid_argument("LaplaceMaxBound: n_vars must be >= 1");
  }
  if (!(b > 0.0)) {
    throw std::invalid_argument("LaplaceMaxBound: scale must be positive");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("LaplaceMaxBound: gamma must lie in (0, 1)");
  }
  return b * std::log(static_cast<double>(n_vars) / gamma);
}

double ComposeAdvanced(double epsilon_total, int k, double delta_prime) {
  if (!(epsilon_total > 0.0)) {
    throw std::invalid_argument("ComposeAdvanced: epsilon_total must be positive");
  }
  if (k < 1) {
    throw std::invalid_argument("ComposeAdvanced: k must be >= 1");
  }
  if (!(delta_prime > 0.0 && delta_prime < 1.0)) {
    throw std::invalid_argument("ComposeAdvanced: delta_prime must lie in (0, 1)");
  }
  return epsilon_total / std::sqrt(8.0 * k * std::log(1.0 / delta_prime));
}

NoiseParams ShortcutNoiseParams(int n, const PrivacyBudget& budget) {
  budget.Validate();
  if (n < 2) {
    throw std::invalid_argument("ShortcutNoiseParams: n must be >= 2");
  }
  const double eps_prime = budget.epsilon / 2.0;
  NoiseParams params;
  params.sigma0 = 1.0 / eps_prime;
  params.mu0 = params.sigma0 * std::log(static_cast<double>(n) * n / budget.gamma);
  params.sigma1 = 2.0 * std::sqrt(2.0) * std::sqrt(static_cast<double>(n)) *
                  std::sqrt(std::log(1.0 / budget.delta)) / eps_prime;
  params.mu1 = params.sigma1 * std::log(static_cast<double>(n) / budget.gamma);
  return params;
}

NoiseParams FvsNoiseParams(int k, const PrivacyBudget& budget) {
  budget.Validate();
  if (k < 0) {
    throw std::invalid_argument("FvsNoiseParams: k must be >= 0");
  }
  const double eps_prime = budget.epsilon / 3.0;
  NoiseParams params;
  params.sigma0 = 1.0 / eps_prime;
  params.mu0 = 0.0;
  params.mu1 = 0.0;
  if (k == 0) {
    params.sigma1 = 1.0;  // sentinel; no pairs exist, never sampled
  } else {
    params.sigma1 = 2.0 * std::sqrt(2.0) * static_cast<double>(k) *
                    std::sqrt(std::log(1.0 / budget.delta)) / eps_prime;
  }
  return params;
}

}  // namespace dpsp
