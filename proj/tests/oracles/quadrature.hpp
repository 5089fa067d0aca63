// Copyright 2026 VQE Forge contributors
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

#pragma once

// Numeric-integration oracles for the molecular integrals. Everything here
// is built from brute-force quadrature or Monte Carlo so that it shares no
// closed-form identities with the production integral code.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracles {

inline constexpr std::array<double, 3> kH1sExponents = {
    3.42525091, 0.62391373, 0.16885540};
inline constexpr std::array<double, 3> kH1sContraction = {
    0.15432897, 0.53532814, 0.44463454};

/// Composite Simpson rule on [lo, hi] with an even panel count.
inline double simpson(const std::function<double(double)>& f, double lo,
                      double hi, int panels = 2000) {
  const double h = (hi - lo) / panels;
  double acc = f(lo) + f(hi);
  for (int k = 1; k < panels; ++k) {
    acc += f(lo + k * h) * ((k % 2 == 1) ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

inline double boys_f0_quadrature(double t) {
  return simpson([t](double x) { return std::exp(-t * x * x); }, 0.0, 1.0,
                 4000);
}

namespace detail {

/// Raw (normalized-primitive, rescaled-contraction) coefficients for the
/// hydrogen 1s contraction, derived here from a numeric self-overlap so the
/// production normalization path is not reused.
inline std::array<double, 3> contraction_coefficients() {
  std::array<double, 3> c{};
  constexpr double pi = 3.14159265358979323846;
  for (int i = 0; i < 3; ++i) {
    c[i] = kH1sContraction[i] *
           std::pow(2.0 * kH1sExponents[i] / pi, 0.75);
  }
  // Numeric self-overlap at zero separation, axis by axis.
  double self = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double p = kH1sExponents[i] + kH1sExponents[j];
      const double span = 12.0 / std::sqrt(p);
      const double one_axis = simpson(
          [p](double x) { return std::exp(-p * x * x); }, -span, span);
      self += c[i] * c[j] * one_axis * one_axis * one_axis;
    }
  }
  const double scale = 1.0 / std::sqrt(self);
  for (auto& v : c) v *= scale;
  return c;
}

}  // namespace detail

/// <chi_1|chi_2> for two hydrogen 1s functions separated by d bohr along z,
/// via per-primitive-pair separable 1D quadrature.
inline double overlap_quadrature(double d_bohr) {
  const auto c = detail::contraction_coefficients();
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double a = kH1sExponents[i];
      const double b = kH1sExponents[j];
      const double span = 12.0 / std::sqrt(a + b) + std::abs(d_bohr);
      const auto gx = [a, b](double x) {
        return std::exp(-(a + b) * x * x);
      };
      const auto gz = [a, b, d_bohr](double z) {
        return std::exp(-a * z * z - b * (z - d_bohr) * (z - d_bohr));
      };
      const double sx = simpson(gx, -span, span);
      const double sz = simpson(gz, -span, span + std::abs(d_bohr));
      total += c[i] * c[j] * sx * sx * sz;
    }
  }
  return total;
}

/// <chi_1|-nabla^2/2|chi_2> via the gradient form
/// T = (1/2) sum_axis \int (d chi_1/dx)(d chi_2/dx) d^3r,
/// with each axis factor evaluated by 1D quadrature.
inline double kinetic_quadrature(double d_bohr) {
  const auto c = detail::contraction_coefficients();
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double a = kH1sExponents[i];
      const double b = kH1sExponents[j];
      const double span = 12.0 / std::sqrt(a + b) + std::abs(d_bohr);
      const auto g = [a, b](double x) {
        return std::exp(-(a + b) * x * x);
      };
      const auto dg = [a, b](double x) {
        return 4.0 * a * b * x * x * std::exp(-(a + b) * x * x);
      };
      const auto gz = [a, b, d_bohr](double z) {
        return std::exp(-a * z * z - b * (z - d_bohr) * (z - d_bohr));
      };
      const auto dgz = [a, b, d_bohr](double z) {
        return 4.0 * a * b * z * (z - d_bohr) *
               std::exp(-a * z * z - b * (z - d_bohr) * (z - d_bohr));
      };
      const double sx = simpson(g, -span, span);
      const double dx = simpson(dg, -span, span);
      const double lo = -span;
      const double hi = span + std::abs(d_bohr);
      const double sz = simpson(gz, lo, hi);
      const double dz = simpson(dgz, lo, hi);
      total += 0.5 * c[i] * c[j] * (dx * sx * sz + sx * dx * sz + sx * sx * dz);
    }
  }
  return total;
}

namespace detail {

struct MixtureSampler {
  // Positive Gaussian-mixture decomposition of |chi_1|^2 centered at the
  // origin: weights w_ij = c_i c_j (pi/p_ij)^{3/2}, per-axis sigma
  // 1/sqrt(2 p_ij). Weights sum to 1 for a normalized contraction.
  std::vector<double> cumulative;
  std::vector<double> sigma;

  MixtureSampler() {
    const auto c = contraction_coefficients();
    constexpr double pi = 3.14159265358979323846;
    double running = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double p = kH1sExponents[i] + kH1sExponents[j];
        running += c[i] * c[j] * std::pow(pi / p, 1.5);
        cumulative.push_back(running);
        sigma.push_back(1.0 / std::sqrt(2.0 * p));
      }
    }
  }

  template <typename Rng>
  std::array<double, 3> draw(Rng& rng) const {
    std::uniform_real_distribution<double> u(0.0, cumulative.back());
    const double pick = u(rng);
    std::size_t k = 0;
    while (k + 1 < cumulative.size() && cumulative[k] < pick) ++k;
    std::normal_distribution<double> n(0.0, sigma[k]);
    return {n(rng), n(rng), n(rng)};
  }
};

}  // namespace detail

/// Self-repulsion integral (chi_1 chi_1 | chi_1 chi_1) by Monte Carlo:
/// both electrons sampled from the exact density |chi_1|^2, estimating
/// E[1/r_12].
inline double eri_1111_monte_carlo(std::uint64_t samples = 4000000,
                                   std::uint32_t seed = 20260817) {
  const detail::MixtureSampler mix;
  std::mt19937 rng(seed);
  double acc = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto r1 = mix.draw(rng);
    const auto r2 = mix.draw(rng);
    const double dx = r1[0] - r2[0];
    const double dy = r1[1] - r2[1];
    const double dz = r1[2] - r2[2];
    const double r12 = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (r12 > 1e-12) acc += 1.0 / r12;
  }
  return acc / static_cast<double>(samples);
}

/// Attraction of the |chi_1|^2 density (centered at the origin) to a unit
/// charge at (0, 0, d): V = -E[1/|r - C|], by Monte Carlo over the exact
/// density.
inline double nuclear_attraction_monte_carlo(double d_bohr,
                                             std::uint64_t samples = 2000000,
                                             std::uint32_t seed = 7052026) {
  const detail::MixtureSampler mix;
  std::mt19937 rng(seed);
  double acc = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto r = mix.draw(rng);
    const double dz = r[2] - d_bohr;
    const double dist = std::sqrt(r[0] * r[0] + r[1] * r[1] + dz * dz);
    if (dist > 1e-12) acc += 1.0 / dist;
  }
  return -acc / static_cast<double>(samples);
}

}  // namespace oracles
