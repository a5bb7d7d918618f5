// Copyright 2026 The oqclab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef OQCLAB_SPLITSIM_COMBINATORICS_HPP
#define OQCLAB_SPLITSIM_COMBINATORICS_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oqc::splitsim {

/// Binomial coefficient for small arguments (exact in uint64 here).
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

inline std::vector<std::uint32_t> prime_exponents(std::uint64_t k) {
  std::vector<std::uint32_t> exps;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      std::uint32_t e = 0;
      while (k % p == 0) {
        k /= p;
        ++e;
      }
      exps.push_back(e);
    }
  }
  if (k > 1) exps.push_back(1);
  return exps;
}

/// Number of ordered r-tuples of positive integers with product k, via
/// stars-and-bars on the prime exponents.
inline std::uint64_t ordered_factorizations(std::uint64_t k, std::uint32_t r) {
  if (k < 1) throw std::invalid_argument("ordered_factorizations requires k >= 1");
  if (r < 1) throw std::invalid_argument("ordered_factorizations requires r >= 1");
  std::uint64_t acc = 1;
  for (auto e : prime_exponents(k)) acc *= binomial(e + r - 1, r - 1);
  return acc;
}

/// Direct enumeration over divisors; test oracle for the formula above.
inline std::uint64_t ordered_factorizations_brute(std::uint64_t k, std::uint32_t r) {
  if (r == 1) return 1;
  std::uint64_t acc = 0;
  for (std::uint64_t d = 1; d <= k; ++d)
    if (k % d == 0) acc += ordered_factorizations_brute(k / d, r - 1);
  return acc;
}

/// Exact minimum of E[log2(i_r ... i_1)] over distributions on r-tuples with
/// every atom bounded by 2^{-b}: greedily fill mass 2^{-b} per tuple in
/// ascending product order.
inline double min_expected_log_product(double b, std::uint32_t r) {
  if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  const double atom = std::exp2(-b);
  double remaining = 1.0;
  double acc = 0.0;
  for (std::uint64_t k = 1;; ++k) {
    const double nk = static_cast<double>(ordered_factorizations(k, r));
    const double take = std::min(remaining, atom * nk);
    acc += take * std::log2(static_cast<double>(k));
    remaining -= take;
    if (remaining <= 1e-15) break;
    if (k > 50000000ULL) throw std::runtime_error("min_expected_log_product: k overflow");
  }
  return acc;
}

/// Analytic floor b / (2 (log2 r + 4)) the exact minimizer is compared against.
inline double min_expected_log_product_floor(double b, std::uint32_t r) {
  if (r == 1) return b - 1.0;
  return b / (2.0 * (std::log2(static_cast<double>(r)) + 4.0));
}

/// Expected-communication lower bound assembled from a certified q* value:
/// r = 1: (1-g)^2 (q* + 2 log2(1-g) - 1); r > 1 divides by 2 log2 r + 8.
/// Floored at 0.
inline double simple_cost_lower_bound(double q_star, double gamma, std::uint32_t r) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must be in (0,1)");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  const double g2 = (1.0 - gamma) * (1.0 - gamma);
  const double core = q_star + 2.0 * std::log2(1.0 - gamma);
  double value;
  if (r == 1)
    value = g2 * (core - 1.0);
  else
    value = g2 * core / (2.0 * std::log2(static_cast<double>(r)) + 8.0);
  return std::max(0.0, value);
}

} // namespace oqc::splitsim

#endif
